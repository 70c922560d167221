#include "hardyop/corona.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <numbers>
#include <sstream>

#include "hardyop/error.hpp"
#include "hardyop/model_space.hpp"
#include "hardyop/operators.hpp"

namespace hardyop {

namespace {

constexpr int kRadial = 64;
constexpr int kAngular = 256;
constexpr int kRefineSeeds = 8;
constexpr double kStepFloor = 1e-8;

double max_zero_modulus(const BlaschkeProduct& inner) {
  double r = 0.0;
  for (const auto& z : inner.zeros()) r = std::max(r, std::abs(z));
  return r;
}

cplx to_closed_disc(cplx z) {
  const double r = std::abs(z);
  return r > 1.0 ? z / r : z;
}

struct Candidate {
  double value;
  cplx z;
};

}  // namespace

double min_at_zeros(const Polynomial& a, const BlaschkeProduct& inner) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& z : inner.zeros()) m = std::min(m, std::abs(a(z)));
  return m;
}

double corona_delta(const Polynomial& a, const BlaschkeProduct& inner, const CoronaTolerances& tol) {
  if (a.is_zero()) throw PreconditionError("corona_delta: a is identically zero");
  if (inner.degree() > 0 && min_at_zeros(a, inner) <= tol.common_zero) return 0.0;

  const auto objective = [&](cplx z) { return std::abs(a(z)) + std::abs(inner(z)); };

  std::vector<Candidate> seeds;
  seeds.reserve(kRadial * kAngular + inner.degree() + static_cast<std::size_t>(std::max(0, a.degree())));
  for (int i = 0; i < kRadial; ++i) {
    const double r = static_cast<double>(i) / (kRadial - 1);
    const int angles = i == 0 ? 1 : kAngular;
    for (int j = 0; j < angles; ++j) {
      const cplx z = std::polar(r, 2.0 * std::numbers::pi * j / kAngular);
      seeds.push_back({objective(z), z});
    }
  }
  for (const auto& z : inner.zeros()) seeds.push_back({objective(z), z});
  if (a.degree() > 0)
    for (const auto& r : a.roots()) {
      const cplx z = to_closed_disc(r);
      seeds.push_back({objective(z), z});
    }

  const std::size_t keep = std::min<std::size_t>(kRefineSeeds, seeds.size());
  std::partial_sort(seeds.begin(), seeds.begin() + static_cast<std::ptrdiff_t>(keep), seeds.end(),
                    [](const Candidate& x, const Candidate& y) {
                      if (x.value != y.value) return x.value < y.value;
                      if (x.z.real() != y.z.real()) return x.z.real() < y.z.real();
                      return x.z.imag() < y.z.imag();
                    });

  double best = seeds.front().value;
  for (std::size_t s = 0; s < keep; ++s) {
    Candidate cur = seeds[s];
    double step = 1.0 / (kRadial - 1);
    while (step > kStepFloor) {
      Candidate next = cur;
      for (int d = 0; d < 8; ++d) {
        const cplx z = to_closed_disc(cur.z + std::polar(step, std::numbers::pi * d / 4.0));
        const double v = objective(z);
        if (v < next.value) next = {v, z};
      }
      if (next.value < cur.value) {
        cur = next;
      } else {
        step *= 0.5;
      }
    }
    best = std::min(best, cur.value);
  }
  return best;
}

CoronaCertificate solve_bezout(const Polynomial& a, const BlaschkeProduct& inner, const CircleGrid& grid,
                               const CoronaTolerances& tol) {
  if (a.is_zero()) throw PreconditionError("solve_bezout: a is identically zero");
  if (inner.degree() > 0 && min_at_zeros(a, inner) <= tol.common_zero) {
    throw CommonZeroError("a vanishes at a zero of I; the pair generates a proper ideal");
  }

  const Polynomial p = inner.zero_polynomial();
  const Polynomial q = inner.pole_polynomial();
  const int n = static_cast<int>(inner.degree());
  const int m = a.degree();
  // unknowns: U with deg <= max(n - 1, deg Q - m), W with deg < m.  The system is square and
  // nonsingular when gcd(a, P) = 1; for constant a it returns u = 1/a, v = 0.
  const int nu = std::max(n, q.degree() - m + 1);
  const int size = nu + m;

  Eigen::VectorXcd coeffs = Eigen::VectorXcd::Zero(size);
  if (size > 0) {
    Eigen::MatrixXcd sylvester = Eigen::MatrixXcd::Zero(size, size);
    for (int j = 0; j < nu; ++j)
      for (int i = 0; i <= m; ++i) sylvester(i + j, j) = a[static_cast<std::size_t>(i)];
    for (int j = 0; j < m; ++j)
      for (int i = 0; i <= n; ++i) sylvester(i + j, nu + j) = p[static_cast<std::size_t>(i)];
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(size);
    for (int i = 0; i <= q.degree(); ++i) rhs(i) = q[static_cast<std::size_t>(i)];

    const auto qr = sylvester.colPivHouseholderQr();
    coeffs = qr.solve(rhs);
    coeffs += qr.solve(rhs - sylvester * coeffs);  // one refinement step
  }

  CoronaCertificate cert;
  cert.a = a;
  const Polynomial big_u(std::vector<cplx>(coeffs.data(), coeffs.data() + nu));
  const Polynomial big_w(std::vector<cplx>(coeffs.data() + nu, coeffs.data() + size));
  cert.u = RationalFunction(big_u, q);
  cert.v = big_w * (1.0 / inner.constant());

  double residual = 0.0;
  for (std::size_t k = 0; k < grid.points(); ++k) {
    const cplx z = grid.node(k);
    residual = std::max(residual, std::abs(a(z) * cert.u(z) + inner(z) * cert.v(z) - 1.0));
  }
  cert.residual = residual;
  cert.sup_u = cert.u.sup_on_circle(grid);
  cert.sup_v = RationalFunction(cert.v).sup_on_circle(grid);
  if (!(residual <= tol.bezout_residual)) {
    std::ostringstream os;
    os << "Bezout residual " << residual << " exceeds " << tol.bezout_residual;
    throw NumericalError("IllConditioned", os.str());
  }
  cert.delta = corona_delta(a, inner, tol);
  const bool zeros_ok = inner.degree() == 0 || min_at_zeros(a, inner) > tol.common_zero;
  cert.consistent = (cert.delta > 0.0) == zeros_ok;
  return cert;
}

InverseApplication apply_corona_inverse(const BlaschkeProduct& inner, const CoronaCertificate& cert,
                                        const BoundaryFunction& f, const HardyParams& params,
                                        const CoronaTolerances& tol) {
  const CircleGrid& grid = f.grid();
  const double fixed = (model_projection(inner, f) - f).l2_norm();
  if (fixed > tol.membership * std::max(1.0, f.l2_norm())) {
    throw PreconditionError("corona inverse applied to a function outside K_I");
  }
  const BoundaryFunction abar = cert.a.boundary(grid).conj();
  const BoundaryFunction ubar = cert.u.boundary(grid).conj();

  InverseApplication out{toeplitz_apply(ubar, f), 0.0, 0.0};
  out.residual = hp_norm(toeplitz_apply(ubar, toeplitz_apply(abar, f)) - f, params);
  out.reverse_residual = hp_norm(toeplitz_apply(abar, out.value) - f, params);
  const double scale = std::max(1.0, hp_norm(f, params));
  if (out.residual > tol.inverse_residual * scale || out.reverse_residual > tol.inverse_residual * scale) {
    std::ostringstream os;
    os << "corona inverse residual " << std::max(out.residual, out.reverse_residual) << " exceeds "
       << tol.inverse_residual;
    throw NumericalError("IllConditioned", os.str());
  }
  return out;
}

InvertibilityCheck coanalytic_invertibility(const Polynomial& a, const BlaschkeProduct& inner, const CircleGrid& grid,
                                            const CoronaTolerances& tol) {
  const auto basis = takenaka_malmquist_basis(inner, HardyParams(2.0), grid);
  OperatorMatrix matrix = compressed_matrix(inner, a.boundary(grid).conj(), basis);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(matrix.entries());
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig(matrix.entries(), false);

  InvertibilityCheck out{std::move(matrix), svd.singularValues(), {}, 0.0, 0.0, false};
  const auto& s = out.singular_values;
  out.sigma_max = s(0);
  out.sigma_min = s(s.size() - 1);
  out.invertible = out.sigma_min > tol.singular;
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) out.eigenvalues.push_back(eig.eigenvalues()(i));
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), [](cplx x, cplx y) {
    if (std::abs(x) != std::abs(y)) return std::abs(x) < std::abs(y);
    return std::arg(x) < std::arg(y);
  });
  return out;
}

double inverse_operator_norm(const BlaschkeProduct& inner, const CoronaCertificate& cert, const CircleGrid& grid) {
  const auto basis = takenaka_malmquist_basis(inner, HardyParams(2.0), grid);
  const OperatorMatrix m = compressed_matrix(inner, cert.u.boundary(grid).conj(), basis);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m.entries());
  return svd.singularValues()(0);
}

ProbeReport probe_near_degeneracy(const BlaschkeProduct& inner, const Polynomial& a, const std::vector<cplx>& probes,
                                  const HardyParams& params, const CircleGrid& grid) {
  for (const auto& z : probes)
    if (!(std::abs(z) < 1.0)) throw PreconditionError("probe point is not inside the open disc");

  ProbeReport out;
  out.p = params.p();
  out.rows.resize(probes.size());

  const CircleGrid base = CircleGrid::resolving(max_zero_modulus(inner), grid);
  const InvertibilityCheck inv = coanalytic_invertibility(a, inner, base);
  out.sigma_min = inv.sigma_min;
  out.zero_bound = min_at_zeros(a, inner);
  try {
    const CoronaCertificate cert = solve_bezout(a, inner, base);
    out.inverse_bound = 1.0 / cert.sup_u;
  } catch (const CommonZeroError&) {
  }

  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(probes.size()); ++i) {
    try {
      const cplx z = probes[static_cast<std::size_t>(i)];
      const CircleGrid g = CircleGrid::resolving(std::max(std::abs(z), max_zero_modulus(inner)), base);
      const RationalFunction quotient = factor_difference(inner, z);
      const RationalFunction kernel = normalized_kernel(z, params);
      const BoundaryFunction f = model_projection(inner, (quotient * kernel).boundary(g));
      ProbeRow& row = out.rows[static_cast<std::size_t>(i)];
      row.z = z;
      row.corona_value = std::abs(inner(z)) + std::abs(a(z));
      row.f_norm = hp_norm(f, params);
      row.taf_norm = hp_norm(toeplitz_apply(a.boundary(g).conj(), f), params);
    } catch (...) {
#pragma omp critical(hardyop_probe_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

std::string probe_csv(const ProbeReport& report) {
  std::string out = "z_re,z_im,corona_value,f_norm,Taf_norm,sigma_min,p\n";
  char line[256];
  for (const auto& r : report.rows) {
    std::snprintf(line, sizeof line, "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n", r.z.real(), r.z.imag(),
                  r.corona_value, r.f_norm, r.taf_norm, report.sigma_min, report.p);
    out += line;
  }
  return out;
}

}  // namespace hardyop
