#include <gtest/gtest.h>

#include <random>

#include "hardyop/corona.hpp"
#include "hardyop/error.hpp"
#include "hardyop/model_space.hpp"
#include "hardyop/operators.hpp"

namespace {

using namespace hardyop;

const CircleGrid kGrid{};
const HardyParams kH2(2.0);

TEST(CoronaDelta, Anchors) {
  EXPECT_NEAR(corona_delta(Polynomial{-0.5, 1.0}, BlaschkeProduct({0.0})), 0.5, 1e-9);
  EXPECT_EQ(corona_delta(Polynomial{-0.3, 1.0}, BlaschkeProduct({0.3})), 0.0);
  EXPECT_NEAR(corona_delta(Polynomial{1.0}, BlaschkeProduct({0.0})), 1.0, 1e-12);
  EXPECT_THROW(corona_delta(Polynomial{}, BlaschkeProduct({0.0})), PreconditionError);
}

TEST(CoronaDelta, NeverExceedsDenseSampling) {
  // delta is a minimum, so any sampled value is an upper bound; refinement must reach
  // within 1e-6 of the best value on a much finer scan
  const Polynomial a{cplx(0.1, -0.2), cplx(-0.6, 0.3), 1.0};
  const BlaschkeProduct inner({cplx(0.5, 0.5), cplx(-0.2, -0.6)});
  const double delta = corona_delta(a, inner);
  double best = INFINITY;
  for (int i = 0; i <= 400; ++i)
    for (int j = 0; j < 1600; ++j) {
      const cplx z = std::polar(i / 400.0, 2.0 * M_PI * j / 1600.0);
      best = std::min(best, std::abs(a(z)) + std::abs(inner(z)));
    }
  EXPECT_LE(delta, best + 1e-12);
  EXPECT_GE(delta, best - 1e-3);
  EXPECT_GT(delta, 0.0);
}

TEST(Bezout, Anchors) {
  const auto c = solve_bezout(Polynomial{-0.5, 1.0}, BlaschkeProduct({0.0}));
  ASSERT_EQ(c.u.numerator().degree(), 0);
  EXPECT_NEAR(std::abs(c.u(0.3) + 2.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(c.v(0.3) - 2.0), 0.0, 1e-12);
  EXPECT_LT(c.residual, 1e-15);
  EXPECT_TRUE(c.consistent);

  const BlaschkeProduct inner({cplx(0.2, 0.3), -0.6, cplx(0.0, 0.8)});
  const auto one = solve_bezout(Polynomial{1.0}, inner);
  EXPECT_NEAR(std::abs(one.u(cplx(0.4, -0.1)) - 1.0), 0.0, 1e-12);
  EXPECT_TRUE(one.v.is_zero() || one.v.max_abs_coefficient() < 1e-12);

  EXPECT_THROW(solve_bezout(Polynomial{-0.3, 1.0}, BlaschkeProduct({0.3})), CommonZeroError);
}

TEST(Bezout, IdentityHoldsInsideTheDisc) {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> u(-0.6, 0.6);
  for (int t = 0; t < 20; ++t) {
    std::vector<cplx> zeros(1 + t % 5), roots(t % 6);
    for (auto& z : zeros) z = {u(rng), u(rng)};
    for (auto& r : roots) r = {2.0 * u(rng), 2.0 * u(rng)};
    const BlaschkeProduct inner(zeros, std::polar(1.0, u(rng)));
    const Polynomial a = Polynomial::from_roots(roots, cplx(1.0, 0.5));
    const auto c = solve_bezout(a, inner);
    for (cplx z : {cplx(0.0), cplx(0.5, -0.5), cplx(-0.9, 0.2)})
      EXPECT_NEAR(std::abs(a(z) * c.u(z) + inner(z) * c.v(z) - 1.0), 0.0, 1e-9);
    EXPECT_TRUE(c.consistent);
  }
}

TEST(CoronaInverse, OneByOne) {
  const BlaschkeProduct inner({0.0});
  const auto cert = solve_bezout(Polynomial{-0.5, 1.0}, inner);
  const auto one = BoundaryFunction::constant(kGrid, 1.0);
  EXPECT_NEAR(std::abs(toeplitz_apply(Polynomial{-0.5, 1.0}.boundary(kGrid).conj(), one).coefficient(0) + 0.5), 0.0,
              1e-15);
  const auto r = apply_corona_inverse(inner, cert, BoundaryFunction::constant(kGrid, -0.5), kH2);
  EXPECT_LT((r.value - one).l2_norm(), 1e-14);
}

TEST(CoronaInverse, ConstantSymbolIsIdentity) {
  const BlaschkeProduct inner({0.3, -0.5});
  const auto cert = solve_bezout(Polynomial{1.0}, inner);
  const auto basis = takenaka_malmquist_basis(inner, kH2);
  for (const auto& e : basis.functions()) {
    EXPECT_LT((apply_corona_inverse(inner, cert, e, kH2).value - e).l2_norm(), 1e-13);
  }
}

TEST(CoronaInverse, MatchesMatrixInverse) {
  const BlaschkeProduct inner({0.3, -0.5});
  const Polynomial a{-0.7, 1.0};
  const auto cert = solve_bezout(a, inner);
  const auto basis = takenaka_malmquist_basis(inner, kH2);
  const Eigen::MatrixXcd m = compressed_matrix(inner, a.boundary(kGrid).conj(), basis).entries();
  const Eigen::MatrixXcd inv = m.inverse();
  for (int k = 0; k < 2; ++k) {
    const auto r = apply_corona_inverse(inner, cert, basis.functions()[k], kH2);
    EXPECT_LT(r.residual, 1e-8);
    EXPECT_LT((r.value - basis.combine(inv.col(k))).l2_norm(), 1e-10);
  }
}

TEST(CoronaInverse, RejectsInputOutsideModelSpace) {
  const BlaschkeProduct inner({0.0});
  const auto cert = solve_bezout(Polynomial{-0.5, 1.0}, inner);
  EXPECT_THROW(apply_corona_inverse(inner, cert, BoundaryFunction::chi(kGrid, 1), kH2), PreconditionError);
}

TEST(Invertibility, CommonZeroIsSingular) {
  const BlaschkeProduct inner({0.3, -0.5});
  const auto r = coanalytic_invertibility(Polynomial{-0.3, 1.0} * Polynomial{2.0, 1.0}, inner);
  EXPECT_LT(r.sigma_min, 1e-10);
  EXPECT_FALSE(r.invertible);
}

TEST(Invertibility, EigenvaluesAreConjugateValuesAtZeros) {
  const BlaschkeProduct inner({cplx(0.3, 0.2), -0.5, cplx(0.0, 0.7)});
  const Polynomial a{cplx(0.4, 0.1), cplx(-0.2, 0.5), 1.0};
  const auto r = coanalytic_invertibility(a, inner);
  for (const auto& z : inner.zeros()) {
    double best = INFINITY;
    for (const auto& e : r.eigenvalues) best = std::min(best, std::abs(e - std::conj(a(z))));
    EXPECT_LT(best, 1e-10);
  }
  EXPECT_LE(r.sigma_min, min_at_zeros(a, inner) + 1e-12);
}

TEST(Invertibility, InverseNormBoundedByToeplitzOfU) {
  const BlaschkeProduct inner({cplx(0.3, 0.2), -0.5});
  const Polynomial a{cplx(0.6, 0.1), 1.0};
  const auto r = coanalytic_invertibility(a, inner);
  const auto cert = solve_bezout(a, inner);
  EXPECT_LE(1.0 / r.sigma_min, inverse_operator_norm(inner, cert) * (1.0 + 1e-9));
  EXPECT_LE(inverse_operator_norm(inner, cert), cert.sup_u * (1.0 + 1e-9));
}

TEST(Probe, KernelEigenIdentityScalesWithEpsilon) {
  // at the zero 0.3 the unit kernel is an eigenvector: ||T_{conj a} k|| = |a(0.3)| = eps
  const BlaschkeProduct inner({0.3, -0.5});
  const auto k = normalized_kernel(0.3, kH2).boundary(kGrid);
  for (double eps : {0.1, 0.01, 0.001}) {
    const Polynomial a{-(0.3 + eps), 1.0};
    EXPECT_NEAR(hp_norm(toeplitz_apply(a.boundary(kGrid).conj(), k), kH2), eps, 1e-12);
  }
}

TEST(Probe, ProbeFunctionAtZeroIsNotAnEigenvector) {
  // f = P_I(b_{-0.5} k_{0.3}) is the second TM function, so ||T_{conj a} f|| keeps a
  // nonzero limit as the zero of a approaches 0.3
  const BlaschkeProduct inner({0.3, -0.5});
  std::vector<double> taf;
  for (double eps : {0.1, 0.01, 0.001, 0.0}) {
    const auto rep = probe_near_degeneracy(inner, Polynomial{-(0.3 + eps), 1.0}, {0.3}, kH2);
    EXPECT_NEAR(rep.rows[0].f_norm, 1.0, 1e-12);
    EXPECT_NEAR(rep.rows[0].corona_value, eps, 1e-15);
    taf.push_back(rep.rows[0].taf_norm);
  }
  EXPECT_GT(taf.back(), 0.5);
  EXPECT_NEAR(taf[2], taf[3], 1e-3);
}

TEST(Probe, SigmaMinScalesWithEpsilon) {
  const BlaschkeProduct inner({0.3, -0.5});
  const double ref = probe_near_degeneracy(inner, Polynomial{-0.4, 1.0}, {0.0}, kH2).sigma_min / 0.1;
  for (double eps : {0.01, 0.001}) {
    const auto rep = probe_near_degeneracy(inner, Polynomial{-(0.3 + eps), 1.0}, {0.0}, kH2);
    const double ratio = rep.sigma_min / eps;
    EXPECT_GT(ratio, ref / 2.0);
    EXPECT_LT(ratio, ref * 2.0);
    EXPECT_LE(rep.sigma_min, rep.zero_bound + 1e-12);
  }
  EXPECT_LT(probe_near_degeneracy(inner, Polynomial{-0.3, 1.0}, {0.0}, kH2).sigma_min, 1e-10);
}

TEST(Probe, RatioBoundedBelowForCoronaPair) {
  const BlaschkeProduct inner({0.0});
  const Polynomial a{-0.5, 1.0};
  std::vector<cplx> probes;
  for (double r : {0.0, 0.3, 0.6, 0.9, 0.99})
    for (int j = 0; j < 6; ++j) probes.push_back(std::polar(r, j * M_PI / 3.0 + 0.2));
  for (double p : {1.5, 2.0, 4.0}) {
    const auto rep = probe_near_degeneracy(inner, a, probes, HardyParams(p));
    ASSERT_TRUE(rep.inverse_bound.has_value());
    for (const auto& row : rep.rows) EXPECT_GE(row.taf_norm / row.f_norm, *rep.inverse_bound - 1e-9);
  }
}

TEST(Probe, CsvLayout) {
  const auto rep = probe_near_degeneracy(BlaschkeProduct({0.0}), Polynomial{-0.5, 1.0}, {0.5, cplx(0.0, 0.9)}, kH2);
  const auto csv = probe_csv(rep);
  EXPECT_EQ(csv.rfind("z_re,z_im,corona_value,f_norm,Taf_norm,sigma_min,p\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
  EXPECT_EQ(csv.find('\r'), std::string::npos);
  EXPECT_THROW(probe_near_degeneracy(BlaschkeProduct({0.0}), Polynomial{1.0}, {1.0}, kH2), PreconditionError);
}

}  // namespace
