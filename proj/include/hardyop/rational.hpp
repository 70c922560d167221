#pragma once

#include <complex>
#include <initializer_list>
#include <utility>
#include <vector>

#include "hardyop/hardy_core.hpp"

namespace hardyop {

/// Complex polynomial with ascending coefficients.  Trailing exact zeros are trimmed;
/// the zero polynomial has an empty coefficient list and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<cplx> ascending) : Polynomial(std::vector<cplx>(ascending)) {}
  explicit Polynomial(std::vector<cplx> ascending);
  static Polynomial constant(cplx c) { return Polynomial({c}); }
  static Polynomial monomial(int degree, cplx c = 1.0);
  /// lead * prod (z - r)
  static Polynomial from_roots(const std::vector<cplx>& roots, cplx lead = 1.0);

  const std::vector<cplx>& coefficients() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  cplx operator[](std::size_t k) const { return k < c_.size() ? c_[k] : cplx{0.0, 0.0}; }
  cplx leading() const { return c_.empty() ? cplx{0.0, 0.0} : c_.back(); }

  cplx operator()(cplx z) const;
  /// sum |c_k| |z|^k, the natural scale for judging |p(z)| against zero.
  double magnitude_at(cplx z) const;
  double max_abs_coefficient() const;

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator*(cplx s) const;
  Polynomial derivative() const;
  /// conj(p(1/conj(z))) z^degree, i.e. reversed conjugated coefficients.
  Polynomial reflected() const;

  /// Synthetic division by (z - root): returns (quotient, remainder).
  std::pair<Polynomial, cplx> divide_linear(cplx root) const;

  /// Roots via companion-matrix eigenvalues.
  std::vector<cplx> roots() const;

  BoundaryFunction boundary(const CircleGrid& grid) const;

 private:
  void trim();
  std::vector<cplx> c_;
};

/// num/den with a denominator that has no zeros in the closed unit disc,
/// kept in lowest terms (common roots within tolerance are cancelled).
class RationalFunction {
 public:
  static constexpr double kPoleMargin = 1e-9;
  static constexpr double kCancelTol = 1e-8;

  RationalFunction() : RationalFunction(Polynomial{}, Polynomial::constant(1.0)) {}
  RationalFunction(Polynomial num, Polynomial den);
  /// Polynomial viewed as a rational function.
  RationalFunction(const Polynomial& p) : RationalFunction(p, Polynomial::constant(1.0)) {}  // NOLINT

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }
  bool is_polynomial() const noexcept { return den_.degree() == 0; }

  cplx operator()(cplx z) const;
  BoundaryFunction boundary(const CircleGrid& grid) const;
  /// max |r| over the grid nodes
  double sup_on_circle(const CircleGrid& grid) const;

  RationalFunction operator*(const RationalFunction& rhs) const;
  RationalFunction operator*(cplx s) const;
  RationalFunction operator+(const RationalFunction& rhs) const;
  RationalFunction operator-(const RationalFunction& rhs) const;

 private:
  Polynomial num_;
  Polynomial den_;
};

}  // namespace hardyop
