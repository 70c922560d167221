#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "hardyop/error.hpp"
#include "hardyop/hardy_core.hpp"
#include "oracles.hpp"

namespace {

using namespace hardyop;

const CircleGrid kGrid{};

BoundaryFunction cauchy(double w) {
  return BoundaryFunction::from_callable(kGrid, [w](cplx z) { return 1.0 / (1.0 - w * z); });
}

TEST(HardyParams, ConjugateExponent) {
  const HardyParams h(4.0);
  EXPECT_DOUBLE_EQ(h.q(), 4.0 / 3.0);
  EXPECT_NEAR(1.0 / h.p() + 1.0 / h.q(), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(h.conjugate().q(), 4.0);
}

TEST(HardyParams, RejectsExponentsAtOrBelowOne) {
  for (const double p : {1.0, 0.5, std::nan(""), std::numeric_limits<double>::infinity()})
    EXPECT_THROW(HardyParams{p}, PreconditionError) << p;
}

TEST(CircleGrid, RequiresRoomForTheBand) {
  EXPECT_THROW(CircleGrid(64, 32), PreconditionError);
  EXPECT_NO_THROW(CircleGrid(66, 32));
}

TEST(CircleGrid, ResolvingGridCoversSlowDecay) {
  const CircleGrid g = CircleGrid::resolving(0.999);
  EXPECT_GE(static_cast<double>(g.band()), std::log(1e-14) / std::log(0.999));
  EXPECT_EQ(g.points() & (g.points() - 1), 0u);
  EXPECT_EQ(CircleGrid::resolving(0.5), kGrid);
}

TEST(BoundaryFunction, SamplesAndCoefficientsAgree) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> c(2 * kGrid.band() + 1, 0.0);
  for (long k = -20; k <= 20; ++k) c[static_cast<std::size_t>(k + 1000)] = {u(rng), u(rng)};
  const auto f = BoundaryFunction::from_coefficients(kGrid, c);
  const auto g = BoundaryFunction::from_samples(kGrid, f.samples());
  double scale = 0.0;
  for (const auto& x : c) scale = std::max(scale, std::abs(x));
  for (long k = -1000; k <= 1000; ++k) EXPECT_LE(std::abs(f.coefficient(k) - g.coefficient(k)), 1e-12 * scale);
  EXPECT_LE(g.tail_mass(), 1e-14);
}

TEST(BoundaryFunction, ChiHasIndicatorCoefficients) {
  const auto chi = BoundaryFunction::chi(kGrid, -3);
  for (long k = -10; k <= 10; ++k) EXPECT_EQ(chi.coefficient(k), k == -3 ? cplx(1.0) : cplx(0.0));
  EXPECT_TRUE(BoundaryFunction::chi(kGrid, 2).is_analytic());
  EXPECT_FALSE(chi.is_analytic());
  EXPECT_TRUE(chi.is_coanalytic_vanishing());
}

TEST(BoundaryFunction, ConjugateReflectsCoefficients) {
  const auto f = BoundaryFunction::polynomial(kGrid, std::vector<cplx>{1.0, {0.0, 2.0}});
  const auto g = f.conj();
  EXPECT_NEAR(std::abs(g.coefficient(-1) - cplx(0.0, -2.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(g.coefficient(0) - 1.0), 0.0, 1e-15);
  for (std::size_t k = 0; k < kGrid.points(); ++k) EXPECT_NEAR(std::abs(g.samples()[k] - std::conj(f.samples()[k])), 0.0, 1e-14);
}

TEST(BoundaryFunction, MixingGridsIsAnError) {
  const auto f = BoundaryFunction::constant(kGrid, 1.0);
  const auto g = BoundaryFunction::constant(CircleGrid(512, 200), 1.0);
  EXPECT_THROW(f + g, PreconditionError);
  EXPECT_THROW(pairing(f, g), PreconditionError);
}

TEST(Pairing, ChiAreOrthonormal) {
  EXPECT_NEAR(std::abs(pairing(BoundaryFunction::chi(kGrid, 1), BoundaryFunction::chi(kGrid, 1)) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(pairing(BoundaryFunction::chi(kGrid, 1), BoundaryFunction::chi(kGrid, 0))), 0.0, 1e-15);
}

TEST(Pairing, CauchyKernelWithItself) {
  const cplx v = pairing(cauchy(0.5), cauchy(0.5));
  EXPECT_NEAR(v.real(), oracle::geometric(0.25), 1e-12);
  EXPECT_NEAR(v.imag(), 0.0, 1e-15);
}

TEST(Pairing, ConjugatesSecondArgument) {
  const auto f = BoundaryFunction::constant(kGrid, 1.0);
  const auto g = BoundaryFunction::constant(kGrid, cplx{0.0, 1.0});
  EXPECT_NEAR(std::abs(pairing(f, g) - cplx(0.0, -1.0)), 0.0, 1e-15);
}

TEST(HpNorm, Anchors) {
  for (double p : {1.5, 2.0, 3.0, 4.0}) EXPECT_NEAR(hp_norm(BoundaryFunction::chi(kGrid, 5), HardyParams(p)), 1.0, 1e-14);
  const auto one_plus_z = BoundaryFunction::polynomial(kGrid, std::vector<cplx>{1.0, 1.0});
  EXPECT_NEAR(hp_norm(one_plus_z, HardyParams(2.0)), std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(hp_norm(cauchy(0.6), HardyParams(2.0)), std::sqrt(oracle::geometric(0.36)), 1e-12);
}

TEST(HpNorm, MatchesIndependentQuadrature) {
  const oracle::Fn f = [](cplx z) { return (1.0 + 0.3 * z) / (1.0 - cplx(0.2, 0.5) * z); };
  const auto g = BoundaryFunction::from_callable(kGrid, f);
  for (double p : {1.5, 4.0}) EXPECT_NEAR(hp_norm(g, HardyParams(p)), oracle::lp_norm(f, p), 1e-12);
}

TEST(Riesz, SplitsCoefficients) {
  const auto f = BoundaryFunction::chi(kGrid, -1) + BoundaryFunction::constant(kGrid, 2.0) + BoundaryFunction::chi(kGrid, 1);
  const auto [plus, minus] = riesz_split(f);
  EXPECT_NEAR((plus - (BoundaryFunction::constant(kGrid, 2.0) + BoundaryFunction::chi(kGrid, 1))).l2_norm(), 0.0, 1e-15);
  EXPECT_NEAR((minus - BoundaryFunction::chi(kGrid, -1)).l2_norm(), 0.0, 1e-15);
}

TEST(Riesz, SquaredModulusOfOnePlusZ) {
  const auto f = BoundaryFunction::from_callable(kGrid, [](cplx z) { return std::norm(1.0 + z); });
  const auto [plus, minus] = riesz_split(f);
  EXPECT_NEAR(std::abs(plus.coefficient(0) - 2.0), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(plus.coefficient(1) - 1.0), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(minus.coefficient(-1) - 1.0), 0.0, 1e-13);
  EXPECT_NEAR(plus.l2_norm() * plus.l2_norm() + minus.l2_norm() * minus.l2_norm(), 6.0, 1e-12);
}

TEST(Riesz, AnalyticInputIsFixed) {
  const auto f = cauchy(0.7);
  const auto [plus, minus] = riesz_split(f);
  EXPECT_NEAR((plus - f).l2_norm(), 0.0, 1e-14);
  EXPECT_NEAR(minus.l2_norm(), 0.0, 1e-14);
}

TEST(Shifts, Anchors) {
  const auto [s1, b1] = shifts(BoundaryFunction::constant(kGrid, 1.0));
  EXPECT_NEAR((s1 - BoundaryFunction::chi(kGrid, 1)).l2_norm(), 0.0, 1e-15);
  EXPECT_NEAR(b1.l2_norm(), 0.0, 1e-15);
  const auto [s2, b2] = shifts(BoundaryFunction::polynomial(kGrid, std::vector<cplx>{1.0, 2.0}));
  EXPECT_NEAR((s2 - BoundaryFunction::polynomial(kGrid, std::vector<cplx>{0.0, 1.0, 2.0})).l2_norm(), 0.0, 1e-14);
  EXPECT_NEAR((b2 - BoundaryFunction::constant(kGrid, 2.0)).l2_norm(), 0.0, 1e-14);
}

TEST(Shifts, BackwardIsLeftInverseOfForward) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 5; ++t) {
    std::vector<cplx> c(kGrid.band());  // degree <= N - 1
    for (auto& x : c) x = {u(rng), u(rng)};
    const auto f = BoundaryFunction::polynomial(kGrid, c);
    EXPECT_LE((backward_shift(forward_shift(f)) - f).l2_norm(), 1e-12 * f.l2_norm());
  }
}

TEST(Shifts, RejectNonAnalyticOrOverflowingInput) {
  EXPECT_THROW(forward_shift(BoundaryFunction::chi(kGrid, -1)), PreconditionError);
  EXPECT_THROW(backward_shift(BoundaryFunction::chi(kGrid, -1)), PreconditionError);
  EXPECT_THROW(forward_shift(BoundaryFunction::chi(kGrid, static_cast<int>(kGrid.band()))), PreconditionError);
}

TEST(IntegralMean, ClosedFormsAtPTwo) {
  EXPECT_NEAR(integral_mean(0.0, HardyParams(2.0)), std::sqrt(2.0 * std::numbers::pi), 1e-9);
  // int dtheta / |1 - z e^{-i theta}|^2 = 2 pi / (1 - |z|^2)
  EXPECT_NEAR(integral_mean(0.9, HardyParams(2.0)), std::sqrt(2.0 * std::numbers::pi / 0.19), 1e-7);
  EXPECT_NEAR(integral_mean(cplx(0.0, 0.99), HardyParams(2.0)), std::sqrt(2.0 * std::numbers::pi / (1 - 0.9801)), 1e-6);
}

TEST(IntegralMean, PFourNormalizedProductIsBanded) {
  // closed form at p = 4: (2 pi (1 + r^2))^{1/4} / (1 - r^2)^{3/4}
  for (double r : {0.5, 0.9, 0.99, 0.999}) {
    const double closed = std::pow(2.0 * std::numbers::pi * (1.0 + r * r), 0.25) / std::pow(1.0 - r * r, 0.75);
    EXPECT_NEAR(integral_mean(r, HardyParams(4.0)) / closed, 1.0, 1e-7) << "r = " << r;
  }
}

TEST(IntegralMean, RejectsPointsOffTheDisc) {
  EXPECT_THROW(integral_mean(1.0, HardyParams(2.0)), PreconditionError);
  EXPECT_THROW(integral_mean(cplx(0.8, 0.8), HardyParams(2.0)), PreconditionError);
}

}  // namespace
