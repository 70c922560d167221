#include "hardyop/rational.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "hardyop/error.hpp"
#include "hardyop/kernels.hpp"

namespace hardyop {

Polynomial::Polynomial(std::vector<cplx> ascending) : c_(std::move(ascending)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == cplx{0.0, 0.0}) c_.pop_back();
}

Polynomial Polynomial::monomial(int degree, cplx c) {
  std::vector<cplx> v(static_cast<std::size_t>(degree) + 1, cplx{0.0, 0.0});
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(const std::vector<cplx>& roots, cplx lead) {
  Polynomial p = constant(lead);
  for (const auto& r : roots) p = p * Polynomial({-r, 1.0});
  return p;
}

cplx Polynomial::operator()(cplx z) const {
  cplx acc{0.0, 0.0};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double Polynomial::magnitude_at(cplx z) const {
  const double r = std::abs(z);
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * r + std::abs(*it);
  return acc;
}

double Polynomial::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& v : c_) m = std::max(m, std::abs(v));
  return m;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  std::vector<cplx> v(std::max(c_.size(), rhs.c_.size()), cplx{0.0, 0.0});
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) v[i] += rhs.c_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + rhs * cplx{-1.0, 0.0}; }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  std::vector<cplx> v(c_.size() + rhs.c_.size() - 1, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) v[i + j] += c_[i] * rhs.c_[j];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(cplx s) const {
  std::vector<cplx> v(c_);
  for (auto& x : v) x *= s;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<cplx> v(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * static_cast<double>(k);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::reflected() const {
  std::vector<cplx> v(c_.rbegin(), c_.rend());
  for (auto& x : v) x = std::conj(x);
  return Polynomial(std::move(v));
}

std::pair<Polynomial, cplx> Polynomial::divide_linear(cplx root) const {
  if (c_.empty()) return {Polynomial{}, cplx{0.0, 0.0}};
  if (c_.size() == 1) return {Polynomial{}, c_[0]};
  std::vector<cplx> q(c_.size() - 1);
  cplx carry = c_.back();
  for (std::size_t k = c_.size() - 1; k-- > 0;) {
    q[k] = carry;
    carry = c_[k] + carry * root;
  }
  return {Polynomial(std::move(q)), carry};
}

std::vector<cplx> Polynomial::roots() const {
  if (is_zero()) throw PreconditionError("roots of the zero polynomial");
  const int n = degree();
  if (n == 0) return {};
  // leading zero roots are exact; strip them before forming the companion matrix
  std::size_t shift = 0;
  while (c_[shift] == cplx{0.0, 0.0}) ++shift;
  std::vector<cplx> out(shift, cplx{0.0, 0.0});
  const int m = n - static_cast<int>(shift);
  if (m == 0) return out;
  if (m == 1) {
    out.push_back(-c_[shift] / c_[shift + 1]);
    return out;
  }
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(m, m);
  const cplx lead = c_.back();
  for (int i = 1; i < m; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < m; ++i) companion(i, m - 1) = -c_[shift + static_cast<std::size_t>(i)] / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw NumericalError("IllConditioned", "companion eigenvalue solve failed");
  const auto& ev = solver.eigenvalues();
  // one Newton polish per root against the original coefficients
  const Polynomial d = derivative();
  for (int i = 0; i < m; ++i) {
    cplx r = ev(i);
    const cplx dv = d(r);
    if (std::abs(dv) > 0.0) {
      const cplx step = (*this)(r) / dv;
      if (std::abs(step) < 1e-6 * std::max(1.0, std::abs(r))) r -= step;
    }
    out.push_back(r);
  }
  std::sort(out.begin(), out.end(), [](cplx a, cplx b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
    return std::arg(a) < std::arg(b);
  });
  return out;
}

BoundaryFunction Polynomial::boundary(const CircleGrid& grid) const { return BoundaryFunction::polynomial(grid, c_); }

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw PreconditionError("rational function with zero denominator");
  if (den_.degree() > 0) {
    for (const auto& r : den_.roots()) {
      if (std::abs(r) <= 1.0 + kPoleMargin) {
        throw PreconditionError("rational function has a pole in the closed unit disc");
      }
      const double scale = num_.magnitude_at(r);
      if (!num_.is_zero() && std::abs(num_(r)) <= kCancelTol * scale) {
        num_ = num_.divide_linear(r).first;
        den_ = den_.divide_linear(r).first;
      }
    }
  }
  if (num_.is_zero()) den_ = Polynomial::constant(1.0);
  // normalize so the denominator's constant term is 1 (never zero: no pole at the origin)
  const cplx d0 = den_[0];
  if (d0 != cplx{1.0, 0.0}) {
    num_ = num_ * (1.0 / d0);
    den_ = den_ * (1.0 / d0);
  }
}

cplx RationalFunction::operator()(cplx z) const { return num_(z) / den_(z); }

BoundaryFunction RationalFunction::boundary(const CircleGrid& grid) const {
  if (is_polynomial() && num_.degree() <= static_cast<int>(grid.band())) {
    return num_.boundary(grid);
  }
  std::vector<cplx> samples(grid.points());
  kernels::omp::sample_rational(num_.coefficients(), den_.coefficients(), samples);
  return BoundaryFunction::from_samples(grid, samples);
}

double RationalFunction::sup_on_circle(const CircleGrid& grid) const {
  double m = 0.0;
  for (std::size_t k = 0; k < grid.points(); ++k) m = std::max(m, std::abs((*this)(grid.node(k))));
  return m;
}

RationalFunction RationalFunction::operator*(const RationalFunction& rhs) const {
  return RationalFunction(num_ * rhs.num_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator*(cplx s) const { return RationalFunction(num_ * s, den_); }

RationalFunction RationalFunction::operator+(const RationalFunction& rhs) const {
  return RationalFunction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& rhs) const { return *this + rhs * cplx{-1.0, 0.0}; }

}  // namespace hardyop
