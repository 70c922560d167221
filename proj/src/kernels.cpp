#include "hardyop/kernels.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>

namespace hardyop::kernels {

namespace {

inline cplx node(std::size_t k, std::size_t m) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m));
}

inline cplx horner(std::span<const cplx> coeffs, cplx z) {
  cplx acc{0.0, 0.0};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

inline double kernel_term(cplx z, double p, std::size_t k, std::size_t m) {
  return std::pow(std::abs(1.0 - z * std::conj(node(k, m))), -p);
}

std::size_t chunk_count(std::size_t n) { return (n + kReduceChunk - 1) / kReduceChunk; }

}  // namespace

namespace serial {

void multiply(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out) {
  assert(a.size() == b.size() && a.size() == out.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
}

void multiply_conj(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out) {
  assert(a.size() == b.size() && a.size() == out.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * std::conj(b[i]);
}

double power_mean(std::span<const cplx> f, double p) {
  double sum = 0.0;
  for (const auto& v : f) sum += std::pow(std::abs(v), p);
  return sum / static_cast<double>(f.size());
}

double kernel_power_sum(cplx z, double p, std::size_t m) {
  double sum = 0.0;
  for (std::size_t k = 0; k < m; ++k) sum += kernel_term(z, p, k, m);
  return sum;
}

void sample_rational(std::span<const cplx> num, std::span<const cplx> den, std::span<cplx> out) {
  const std::size_t m = out.size();
  for (std::size_t k = 0; k < m; ++k) {
    const cplx w = node(k, m);
    out[k] = horner(num, w) / horner(den, w);
  }
}

std::vector<cplx> direct_analyze(std::span<const cplx> samples, std::size_t band) {
  const std::size_t m = samples.size();
  std::vector<cplx> coeffs(2 * band + 1);
  for (std::size_t idx = 0; idx < coeffs.size(); ++idx) {
    const long j = static_cast<long>(idx) - static_cast<long>(band);
    cplx acc{0.0, 0.0};
    for (std::size_t k = 0; k < m; ++k) {
      // reduce j*k mod m to keep the angle small
      const long long r = ((static_cast<long long>(j) * static_cast<long long>(k)) % static_cast<long long>(m) +
                           static_cast<long long>(m)) %
                          static_cast<long long>(m);
      acc += samples[k] * std::conj(node(static_cast<std::size_t>(r), m));
    }
    coeffs[idx] = acc / static_cast<double>(m);
  }
  return coeffs;
}

std::vector<cplx> direct_synthesize(std::span<const cplx> coeffs, std::size_t m) {
  const long band = static_cast<long>((coeffs.size() - 1) / 2);
  std::vector<cplx> samples(m);
  for (std::size_t k = 0; k < m; ++k) {
    cplx acc{0.0, 0.0};
    for (std::size_t idx = 0; idx < coeffs.size(); ++idx) {
      const long j = static_cast<long>(idx) - band;
      const long long r = ((static_cast<long long>(j) * static_cast<long long>(k)) % static_cast<long long>(m) +
                           static_cast<long long>(m)) %
                          static_cast<long long>(m);
      acc += coeffs[idx] * node(static_cast<std::size_t>(r), m);
    }
    samples[k] = acc;
  }
  return samples;
}

}  // namespace serial

namespace omp {

void multiply(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out) {
  assert(a.size() == b.size() && a.size() == out.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(a.size());
#pragma omp parallel for schedule(static) if (a.size() >= kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void multiply_conj(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out) {
  assert(a.size() == b.size() && a.size() == out.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(a.size());
#pragma omp parallel for schedule(static) if (a.size() >= kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = a[i] * std::conj(b[i]);
}

double power_mean(std::span<const cplx> f, double p) {
  const std::size_t n = f.size();
  const std::ptrdiff_t chunks = static_cast<std::ptrdiff_t>(chunk_count(n));
  std::vector<double> partial(static_cast<std::size_t>(chunks), 0.0);
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (std::ptrdiff_t c = 0; c < chunks; ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * kReduceChunk;
    const std::size_t hi = std::min(n, lo + kReduceChunk);
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += std::pow(std::abs(f[i]), p);
    partial[static_cast<std::size_t>(c)] = s;
  }
  double sum = 0.0;
  for (double s : partial) sum += s;
  return sum / static_cast<double>(n);
}

double kernel_power_sum(cplx z, double p, std::size_t m) {
  const std::ptrdiff_t chunks = static_cast<std::ptrdiff_t>(chunk_count(m));
  std::vector<double> partial(static_cast<std::size_t>(chunks), 0.0);
#pragma omp parallel for schedule(static) if (m >= kParallelThreshold)
  for (std::ptrdiff_t c = 0; c < chunks; ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * kReduceChunk;
    const std::size_t hi = std::min(m, lo + kReduceChunk);
    double s = 0.0;
    for (std::size_t k = lo; k < hi; ++k) s += kernel_term(z, p, k, m);
    partial[static_cast<std::size_t>(c)] = s;
  }
  double sum = 0.0;
  for (double s : partial) sum += s;
  return sum;
}

void sample_rational(std::span<const cplx> num, std::span<const cplx> den, std::span<cplx> out) {
  const std::size_t m = out.size();
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(m);
#pragma omp parallel for schedule(static) if (m >= kParallelThreshold)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const cplx w = node(static_cast<std::size_t>(k), m);
    out[k] = horner(num, w) / horner(den, w);
  }
}

}  // namespace omp

}  // namespace hardyop::kernels
