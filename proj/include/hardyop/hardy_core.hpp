#pragma once

// Discretized function theory on the unit circle: exponents, grids, boundary
// functions, the duality pairing, H^p norms, Riesz projections and shifts.

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace hardyop {

using cplx = std::complex<double>;

/// Exponent p in (1, inf) with its conjugate q = p/(p-1).
class HardyParams {
 public:
  explicit HardyParams(double p = 2.0);

  double p() const noexcept { return p_; }
  double q() const noexcept { return p_ / (p_ - 1.0); }
  HardyParams conjugate() const { return HardyParams(q()); }

  bool operator==(const HardyParams&) const = default;

 private:
  double p_;
};

/// M uniform nodes e^{2 pi i k/M} and a Fourier band -N..N with M >= 2N+2.
class CircleGrid {
 public:
  static constexpr std::size_t kDefaultPoints = 2048;
  static constexpr std::size_t kDefaultBand = 1000;

  explicit CircleGrid(std::size_t points = kDefaultPoints, std::size_t band = kDefaultBand);

  /// Smallest power-of-two grid (never smaller than `base`) that resolves
  /// rational data whose Fourier coefficients decay like radius^k to `tail`.
  static CircleGrid resolving(double radius, const CircleGrid& base = CircleGrid{}, double tail = 1e-14);

  std::size_t points() const noexcept { return m_; }
  std::size_t band() const noexcept { return n_; }
  cplx node(std::size_t k) const;

  bool operator==(const CircleGrid&) const = default;

 private:
  std::size_t m_;
  std::size_t n_;
};

/// A function on the unit circle held both as M samples and as the Fourier
/// coefficients c_{-N}..c_{N}.  The two views agree through the DFT; data
/// that is not band-limited is truncated and the discarded fraction of
/// spectral energy is kept in `tail_mass()`.
class BoundaryFunction {
 public:
  static BoundaryFunction from_coefficients(const CircleGrid& grid, std::vector<cplx> coeffs);
  static BoundaryFunction from_samples(const CircleGrid& grid, std::span<const cplx> samples);
  static BoundaryFunction from_callable(const CircleGrid& grid, const std::function<cplx(cplx)>& f);
  /// Analytic polynomial sum_k c_k z^k with ascending coefficients.
  static BoundaryFunction polynomial(const CircleGrid& grid, std::span<const cplx> ascending);
  static BoundaryFunction constant(const CircleGrid& grid, cplx value);
  /// chi_n(z) = z^n
  static BoundaryFunction chi(const CircleGrid& grid, int n);
  static BoundaryFunction zero(const CircleGrid& grid) { return constant(grid, 0.0); }

  const CircleGrid& grid() const noexcept { return grid_; }
  std::span<const cplx> samples() const noexcept { return samples_; }
  /// Ordered k = -N..N.
  std::span<const cplx> coefficients() const noexcept { return coeffs_; }
  /// c_k, zero outside the band.
  cplx coefficient(long k) const;
  double tail_mass() const noexcept { return tail_; }

  /// l^2 mass of the coefficients with k < 0 and k >= 0.
  double negative_mass() const;
  double nonnegative_mass() const;
  double l2_norm() const;
  /// c_k = 0 for all k < 0, up to `rel_tol` times the l^2 norm.
  bool is_analytic(double rel_tol = 1e-9) const;
  /// c_k = 0 for all k >= 0, up to `rel_tol` times the l^2 norm.
  bool is_coanalytic_vanishing(double rel_tol = 1e-9) const;

  /// Value of sum_{k>=0} c_k z^k at a point of the closed disc.
  cplx eval_analytic(cplx z) const;

  /// Pointwise complex conjugate on the circle.
  BoundaryFunction conj() const;

  BoundaryFunction operator+(const BoundaryFunction& rhs) const;
  BoundaryFunction operator-(const BoundaryFunction& rhs) const;
  /// Pointwise product on the grid.
  BoundaryFunction operator*(const BoundaryFunction& rhs) const;
  BoundaryFunction operator*(cplx scalar) const;
  friend BoundaryFunction operator*(cplx scalar, const BoundaryFunction& f) { return f * scalar; }
  /// Pointwise lhs * conj(rhs).
  BoundaryFunction times_conj(const BoundaryFunction& rhs) const;

 private:
  BoundaryFunction(CircleGrid grid, std::vector<cplx> samples, std::vector<cplx> coeffs, double tail);

  void require_same_grid(const BoundaryFunction& other) const;

  CircleGrid grid_;
  std::vector<cplx> samples_;
  std::vector<cplx> coeffs_;
  double tail_ = 0.0;
};

/// <f, g> = (1/2 pi) int f conj(g) = sum_k f_k conj(g_k).  Conjugates the second argument.
cplx pairing(const BoundaryFunction& f, const BoundaryFunction& g);

/// ((1/2 pi) int |f|^p)^{1/p} by trapezoidal quadrature on the grid.
double hp_norm(const BoundaryFunction& f, const HardyParams& params);

/// (P_+ f, P_- f): coefficients k >= 0 and k < 0.
std::pair<BoundaryFunction, BoundaryFunction> riesz_split(const BoundaryFunction& f);
BoundaryFunction riesz_plus(const BoundaryFunction& f);
BoundaryFunction riesz_minus(const BoundaryFunction& f);

/// S f = z f.  Throws if f is not analytic or if the top band coefficient would be lost.
BoundaryFunction forward_shift(const BoundaryFunction& f);
/// S^* f = (f - f(0))/z.  Throws if f is not analytic.
BoundaryFunction backward_shift(const BoundaryFunction& f);
/// (S f, S^* f)
std::pair<BoundaryFunction, BoundaryFunction> shifts(const BoundaryFunction& f);

/// (int_0^{2 pi} d theta / |1 - z e^{-i theta}|^p)^{1/p}, trapezoidal rule with
/// doubling until two successive refinements agree to `rel_tol`.
double integral_mean(cplx z, const HardyParams& params, double rel_tol = 1e-8);

}  // namespace hardyop
