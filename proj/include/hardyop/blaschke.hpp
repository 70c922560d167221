#pragma once

// Finite Blaschke products and the single-point difference quotients,
// normalized kernels and inner-outer splits built from them.

#include <complex>
#include <utility>
#include <variant>
#include <vector>

#include "hardyop/hardy_core.hpp"
#include "hardyop/rational.hpp"

namespace hardyop {

/// I(z) = c prod_k (z - z_k)/(1 - conj(z_k) z).  Repeated zeros encode multiplicity.
class BlaschkeProduct {
 public:
  static constexpr double kZeroMargin = 1e-9;
  static constexpr double kUnimodularTol = 1e-12;

  BlaschkeProduct() = default;
  /// Throws PreconditionError for a zero with |z_k| >= 1 - 1e-9 or |constant| != 1.
  explicit BlaschkeProduct(std::vector<cplx> zeros, cplx constant = 1.0);
  /// z^n
  static BlaschkeProduct power_of_z(std::size_t n, cplx constant = 1.0);

  const std::vector<cplx>& zeros() const noexcept { return zeros_; }
  cplx constant() const noexcept { return constant_; }
  std::size_t degree() const noexcept { return zeros_.size(); }

  /// Factor-by-factor evaluation on the closed disc.
  cplx operator()(cplx z) const;

  /// prod (z - z_k), monic
  Polynomial zero_polynomial() const;
  /// prod (1 - conj(z_k) z)
  Polynomial pole_polynomial() const;
  RationalFunction as_rational() const;
  BoundaryFunction boundary(const CircleGrid& grid) const;

  /// Zeros sorted by (modulus, argument).
  std::vector<cplx> ordered_zeros() const;
  /// Same zero multiset, constants ignored.
  bool same_zeros(const BlaschkeProduct& other, double tol = 1e-12) const;

 private:
  std::vector<cplx> zeros_;
  cplx constant_{1.0, 0.0};
};

/// b_w(z) = (z - w)/(1 - conj(w) z)
BlaschkeProduct blaschke_factor(cplx w);

/// G with b_w G = F - F(w).  F is a Blaschke product or a polynomial; the zero
/// of F - F(w) at w cancels the zero of b_w, so G is analytic on the closed disc.
RationalFunction factor_difference(const std::variant<BlaschkeProduct, Polynomial>& f, cplx w);

/// (1 - |w|^2)^{1/q} / (1 - conj(w) z)
RationalFunction normalized_kernel(cplx w, const HardyParams& params);

/// Splits a polynomial into its Blaschke inner factor over the zeros in the disc
/// (constant 1) and its outer part a/inner.  Rejects zeros within `circle_tol` of the circle.
std::pair<BlaschkeProduct, RationalFunction> inner_outer_split(const Polynomial& a, double circle_tol = 1e-8);

}  // namespace hardyop
