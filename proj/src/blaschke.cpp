#include "hardyop/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hardyop/error.hpp"

namespace hardyop {

namespace {

bool zero_order(cplx a, cplx b) {
  if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
  return std::arg(a) < std::arg(b);
}

}  // namespace

BlaschkeProduct::BlaschkeProduct(std::vector<cplx> zeros, cplx constant)
    : zeros_(std::move(zeros)), constant_(constant) {
  for (const auto& z : zeros_) {
    if (!(std::abs(z) < 1.0 - kZeroMargin)) {
      std::ostringstream os;
      os << "Blaschke zero " << z << " is not inside the disc |z| < 1 - " << kZeroMargin;
      throw PreconditionError(os.str());
    }
  }
  if (!(std::abs(std::abs(constant_) - 1.0) <= kUnimodularTol)) {
    throw PreconditionError("Blaschke constant is not unimodular");
  }
}

BlaschkeProduct BlaschkeProduct::power_of_z(std::size_t n, cplx constant) {
  return BlaschkeProduct(std::vector<cplx>(n, cplx{0.0, 0.0}), constant);
}

cplx BlaschkeProduct::operator()(cplx z) const {
  if (std::abs(z) > 1.0 + 1e-12) throw PreconditionError("Blaschke product evaluated outside the closed disc");
  cplx v = constant_;
  for (const auto& a : zeros_) v *= (z - a) / (1.0 - std::conj(a) * z);
  return v;
}

Polynomial BlaschkeProduct::zero_polynomial() const { return Polynomial::from_roots(zeros_); }

Polynomial BlaschkeProduct::pole_polynomial() const {
  Polynomial q = Polynomial::constant(1.0);
  for (const auto& a : zeros_) q = q * Polynomial({1.0, -std::conj(a)});
  return q;
}

RationalFunction BlaschkeProduct::as_rational() const {
  return RationalFunction(zero_polynomial() * constant_, pole_polynomial());
}

BoundaryFunction BlaschkeProduct::boundary(const CircleGrid& grid) const {
  std::vector<cplx> samples(grid.points());
  for (std::size_t k = 0; k < samples.size(); ++k) samples[k] = (*this)(grid.node(k));
  return BoundaryFunction::from_samples(grid, samples);
}

std::vector<cplx> BlaschkeProduct::ordered_zeros() const {
  auto z = zeros_;
  std::sort(z.begin(), z.end(), zero_order);
  return z;
}

bool BlaschkeProduct::same_zeros(const BlaschkeProduct& other, double tol) const {
  if (degree() != other.degree()) return false;
  auto mine = zeros_;
  std::vector<bool> used(other.zeros_.size(), false);
  for (const auto& z : mine) {
    bool matched = false;
    for (std::size_t j = 0; j < other.zeros_.size(); ++j) {
      if (!used[j] && std::abs(other.zeros_[j] - z) <= tol) {
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

BlaschkeProduct blaschke_factor(cplx w) { return BlaschkeProduct({w}); }

RationalFunction factor_difference(const std::variant<BlaschkeProduct, Polynomial>& f, cplx w) {
  if (!(std::abs(w) < 1.0)) throw PreconditionError("difference quotient point must lie in the open disc");
  Polynomial num;
  Polynomial den;
  cplx value;
  if (const auto* b = std::get_if<BlaschkeProduct>(&f)) {
    num = b->zero_polynomial() * b->constant();
    den = b->pole_polynomial();
    value = (*b)(w);
  } else {
    num = std::get<Polynomial>(f);
    den = Polynomial::constant(1.0);
    value = num(w);
  }
  const Polynomial shifted = num - den * value;
  auto [quotient, remainder] = shifted.divide_linear(w);
  const double scale = std::max(1.0, shifted.magnitude_at(w));
  if (std::abs(remainder) > 1e-10 * scale) {
    throw NumericalError("IllConditioned", "difference quotient division left a residual above 1e-10");
  }
  return RationalFunction(quotient * Polynomial({1.0, -std::conj(w)}), den);
}

RationalFunction normalized_kernel(cplx w, const HardyParams& params) {
  if (!(std::abs(w) < 1.0)) throw PreconditionError("kernel point must lie in the open disc");
  const double scale = std::pow(1.0 - std::norm(w), 1.0 / params.q());
  return RationalFunction(Polynomial::constant(scale), Polynomial({1.0, -std::conj(w)}));
}

std::pair<BlaschkeProduct, RationalFunction> inner_outer_split(const Polynomial& a, double circle_tol) {
  if (a.is_zero()) throw PreconditionError("inner-outer split of the zero polynomial");
  std::vector<cplx> inside;
  for (const auto& r : a.roots()) {
    if (std::abs(std::abs(r) - 1.0) <= circle_tol) {
      throw PreconditionError("polynomial has a zero on the unit circle; inner-outer split is ill-conditioned");
    }
    if (std::abs(r) < 1.0) inside.push_back(r);
  }
  Polynomial outer = a;
  for (const auto& r : inside) {
    auto [q, rem] = outer.divide_linear(r);
    if (std::abs(rem) > 1e-8 * std::max(1.0, outer.magnitude_at(r))) {
      throw NumericalError("IllConditioned", "inner factor division left a large residual");
    }
    outer = q * Polynomial({1.0, -std::conj(r)});
  }
  return {BlaschkeProduct(std::move(inside)), RationalFunction(outer)};
}

}  // namespace hardyop
