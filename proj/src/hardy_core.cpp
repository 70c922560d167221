#include "hardyop/hardy_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hardyop/error.hpp"
#include "hardyop/fft.hpp"
#include "hardyop/kernels.hpp"

namespace hardyop {

HardyParams::HardyParams(double p) : p_(p) {
  if (!std::isfinite(p) || !(p > 1.0)) {
    std::ostringstream os;
    os << "exponent p = " << p
       << " is outside (1, inf); P_I is only bounded on H^p for 1 < p < inf (H^1 fails for non-trivial inner I)";
    throw PreconditionError(os.str());
  }
}

CircleGrid::CircleGrid(std::size_t points, std::size_t band) : m_(points), n_(band) {
  if (m_ < 2 * n_ + 2) {
    std::ostringstream os;
    os << "grid with M = " << m_ << " points cannot hold band N = " << n_ << " (need M >= 2N+2)";
    throw PreconditionError(os.str());
  }
}

CircleGrid CircleGrid::resolving(double radius, const CircleGrid& base, double tail) {
  if (radius <= 0.0) return base;
  if (radius >= 1.0) throw PreconditionError("resolving grid requested for radius >= 1");
  const double needed = std::ceil(std::log(tail) / std::log(radius));
  if (needed <= static_cast<double>(base.band())) return base;
  std::size_t m = base.points();
  while (static_cast<double>(m) < 2.0 * needed + 2.0) m *= 2;
  return CircleGrid(m, m / 2 - 1);
}

cplx CircleGrid::node(std::size_t k) const {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m_));
}

BoundaryFunction::BoundaryFunction(CircleGrid grid, std::vector<cplx> samples, std::vector<cplx> coeffs, double tail)
    : grid_(grid), samples_(std::move(samples)), coeffs_(std::move(coeffs)), tail_(tail) {}

BoundaryFunction BoundaryFunction::from_coefficients(const CircleGrid& grid, std::vector<cplx> coeffs) {
  if (coeffs.size() != 2 * grid.band() + 1) throw PreconditionError("coefficient vector does not match grid band");
  auto samples = fft::synthesize(coeffs, grid.points());
  return BoundaryFunction(grid, std::move(samples), std::move(coeffs), 0.0);
}

BoundaryFunction BoundaryFunction::from_samples(const CircleGrid& grid, std::span<const cplx> samples) {
  if (samples.size() != grid.points()) throw PreconditionError("sample vector does not match grid size");
  double tail = 0.0;
  auto coeffs = fft::analyze(samples, grid.band(), &tail);
  // resynthesize so that samples and coefficients describe the same band-limited function
  auto clean = fft::synthesize(coeffs, grid.points());
  return BoundaryFunction(grid, std::move(clean), std::move(coeffs), tail);
}

BoundaryFunction BoundaryFunction::from_callable(const CircleGrid& grid, const std::function<cplx(cplx)>& f) {
  std::vector<cplx> samples(grid.points());
  for (std::size_t k = 0; k < samples.size(); ++k) samples[k] = f(grid.node(k));
  return from_samples(grid, samples);
}

BoundaryFunction BoundaryFunction::polynomial(const CircleGrid& grid, std::span<const cplx> ascending) {
  std::vector<cplx> coeffs(2 * grid.band() + 1, cplx{0.0, 0.0});
  for (std::size_t k = 0; k < ascending.size(); ++k) {
    if (k > grid.band()) {
      if (ascending[k] != cplx{0.0, 0.0}) throw PreconditionError("polynomial degree exceeds grid band");
      continue;
    }
    coeffs[grid.band() + k] = ascending[k];
  }
  return from_coefficients(grid, std::move(coeffs));
}

BoundaryFunction BoundaryFunction::constant(const CircleGrid& grid, cplx value) {
  std::vector<cplx> coeffs(2 * grid.band() + 1, cplx{0.0, 0.0});
  coeffs[grid.band()] = value;
  return BoundaryFunction(grid, std::vector<cplx>(grid.points(), value), std::move(coeffs), 0.0);
}

BoundaryFunction BoundaryFunction::chi(const CircleGrid& grid, int n) {
  const long band = static_cast<long>(grid.band());
  if (n > band || n < -band) throw PreconditionError("chi_n index outside grid band");
  std::vector<cplx> coeffs(2 * grid.band() + 1, cplx{0.0, 0.0});
  coeffs[static_cast<std::size_t>(n + band)] = 1.0;
  return from_coefficients(grid, std::move(coeffs));
}

cplx BoundaryFunction::coefficient(long k) const {
  const long band = static_cast<long>(grid_.band());
  if (k < -band || k > band) return {0.0, 0.0};
  return coeffs_[static_cast<std::size_t>(k + band)];
}

double BoundaryFunction::negative_mass() const {
  double s = 0.0;
  for (std::size_t i = 0; i < grid_.band(); ++i) s += std::norm(coeffs_[i]);
  return std::sqrt(s);
}

double BoundaryFunction::nonnegative_mass() const {
  double s = 0.0;
  for (std::size_t i = grid_.band(); i < coeffs_.size(); ++i) s += std::norm(coeffs_[i]);
  return std::sqrt(s);
}

double BoundaryFunction::l2_norm() const { return std::hypot(negative_mass(), nonnegative_mass()); }

bool BoundaryFunction::is_analytic(double rel_tol) const {
  return negative_mass() <= rel_tol * std::max(l2_norm(), 1e-300) || negative_mass() == 0.0;
}

bool BoundaryFunction::is_coanalytic_vanishing(double rel_tol) const {
  return nonnegative_mass() <= rel_tol * std::max(l2_norm(), 1e-300) || nonnegative_mass() == 0.0;
}

cplx BoundaryFunction::eval_analytic(cplx z) const {
  cplx acc{0.0, 0.0};
  for (std::size_t k = coeffs_.size(); k-- > grid_.band();) acc = acc * z + coeffs_[k];
  return acc;
}

BoundaryFunction BoundaryFunction::conj() const {
  std::vector<cplx> samples(samples_.size());
  for (std::size_t i = 0; i < samples.size(); ++i) samples[i] = std::conj(samples_[i]);
  // conj(sum c_k z^k) = sum conj(c_{-k}) z^k on the circle
  std::vector<cplx> coeffs(coeffs_.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = std::conj(coeffs_[coeffs.size() - 1 - i]);
  return BoundaryFunction(grid_, std::move(samples), std::move(coeffs), tail_);
}

void BoundaryFunction::require_same_grid(const BoundaryFunction& other) const {
  if (!(grid_ == other.grid_)) throw PreconditionError("boundary functions live on different grids");
}

BoundaryFunction BoundaryFunction::operator+(const BoundaryFunction& rhs) const {
  require_same_grid(rhs);
  std::vector<cplx> samples(samples_.size());
  std::vector<cplx> coeffs(coeffs_.size());
  for (std::size_t i = 0; i < samples.size(); ++i) samples[i] = samples_[i] + rhs.samples_[i];
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = coeffs_[i] + rhs.coeffs_[i];
  return BoundaryFunction(grid_, std::move(samples), std::move(coeffs), std::max(tail_, rhs.tail_));
}

BoundaryFunction BoundaryFunction::operator-(const BoundaryFunction& rhs) const { return *this + rhs * cplx{-1.0, 0.0}; }

BoundaryFunction BoundaryFunction::operator*(const BoundaryFunction& rhs) const {
  require_same_grid(rhs);
  std::vector<cplx> samples(samples_.size());
  kernels::omp::multiply(samples_, rhs.samples_, samples);
  auto out = from_samples(grid_, samples);
  out.tail_ = std::max({out.tail_, tail_, rhs.tail_});
  return out;
}

BoundaryFunction BoundaryFunction::times_conj(const BoundaryFunction& rhs) const {
  require_same_grid(rhs);
  std::vector<cplx> samples(samples_.size());
  kernels::omp::multiply_conj(samples_, rhs.samples_, samples);
  auto out = from_samples(grid_, samples);
  out.tail_ = std::max({out.tail_, tail_, rhs.tail_});
  return out;
}

BoundaryFunction BoundaryFunction::operator*(cplx scalar) const {
  std::vector<cplx> samples(samples_);
  std::vector<cplx> coeffs(coeffs_);
  for (auto& v : samples) v *= scalar;
  for (auto& v : coeffs) v *= scalar;
  return BoundaryFunction(grid_, std::move(samples), std::move(coeffs), tail_);
}

cplx pairing(const BoundaryFunction& f, const BoundaryFunction& g) {
  if (!(f.grid() == g.grid())) throw PreconditionError("pairing of functions on different grids");
  const auto fc = f.coefficients();
  const auto gc = g.coefficients();
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < fc.size(); ++i) acc += fc[i] * std::conj(gc[i]);
  return acc;
}

double hp_norm(const BoundaryFunction& f, const HardyParams& params) {
  return std::pow(kernels::omp::power_mean(f.samples(), params.p()), 1.0 / params.p());
}

namespace {

BoundaryFunction keep_indices(const BoundaryFunction& f, bool nonnegative) {
  const std::size_t band = f.grid().band();
  std::vector<cplx> coeffs(f.coefficients().begin(), f.coefficients().end());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const bool is_nonneg = i >= band;
    if (is_nonneg != nonnegative) coeffs[i] = 0.0;
  }
  return BoundaryFunction::from_coefficients(f.grid(), std::move(coeffs));
}

void require_analytic(const BoundaryFunction& f, const char* op) {
  if (!f.is_analytic()) throw PreconditionError(std::string(op) + ": argument is not analytic");
}

}  // namespace

BoundaryFunction riesz_plus(const BoundaryFunction& f) { return keep_indices(f, true); }

BoundaryFunction riesz_minus(const BoundaryFunction& f) { return keep_indices(f, false); }

std::pair<BoundaryFunction, BoundaryFunction> riesz_split(const BoundaryFunction& f) {
  return {riesz_plus(f), riesz_minus(f)};
}

BoundaryFunction forward_shift(const BoundaryFunction& f) {
  require_analytic(f, "forward shift");
  const std::size_t band = f.grid().band();
  const auto c = f.coefficients();
  if (std::abs(c.back()) > 1e-12 * std::max(f.l2_norm(), 1e-300)) {
    throw PreconditionError("forward shift would push the top band coefficient out of the grid");
  }
  std::vector<cplx> coeffs(c.size(), cplx{0.0, 0.0});
  for (std::size_t i = band + 1; i < c.size(); ++i) coeffs[i] = c[i - 1];
  return BoundaryFunction::from_coefficients(f.grid(), std::move(coeffs));
}

BoundaryFunction backward_shift(const BoundaryFunction& f) {
  require_analytic(f, "backward shift");
  const std::size_t band = f.grid().band();
  const auto c = f.coefficients();
  std::vector<cplx> coeffs(c.size(), cplx{0.0, 0.0});
  for (std::size_t i = band; i + 1 < c.size(); ++i) coeffs[i] = c[i + 1];
  return BoundaryFunction::from_coefficients(f.grid(), std::move(coeffs));
}

std::pair<BoundaryFunction, BoundaryFunction> shifts(const BoundaryFunction& f) {
  return {forward_shift(f), backward_shift(f)};
}

double integral_mean(cplx z, const HardyParams& params, double rel_tol) {
  if (!(std::abs(z) < 1.0)) throw PreconditionError("integral mean needs |z| < 1");
  constexpr std::size_t kMaxPoints = std::size_t{1} << 26;
  const double p = params.p();
  auto trapezoid = [&](std::size_t m) {
    return 2.0 * std::numbers::pi / static_cast<double>(m) * kernels::omp::kernel_power_sum(z, p, m);
  };
  std::size_t m = 64;
  double prev = trapezoid(m);
  while (m < kMaxPoints) {
    m *= 2;
    const double next = trapezoid(m);
    if (std::abs(next - prev) <= rel_tol * std::abs(next)) return std::pow(next, 1.0 / p);
    prev = next;
  }
  throw NumericalError("IllConditioned", "integral mean quadrature did not converge");
}

}  // namespace hardyop
