#pragma once

// Data-parallel inner loops over uniform circle grids.
//
// Every kernel exists twice: `serial::` is the plain reference loop kept for
// testing and benchmarking, `omp::` is the OpenMP version used by the library.
// Reductions in `omp::` sum fixed-size chunks and combine them in chunk order,
// so results are bit-identical for any thread count.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace hardyop::kernels {

using cplx = std::complex<double>;

/// Chunk length used by deterministic reductions.
inline constexpr std::size_t kReduceChunk = 256;

/// Below this length the OpenMP kernels stay on one thread.
inline constexpr std::size_t kParallelThreshold = 2048;

namespace serial {

void multiply(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out);
/// out = a * conj(b)
void multiply_conj(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out);
/// (1/M) sum |f_k|^p
double power_mean(std::span<const cplx> f, double p);
/// sum_k |1 - z e^{-2 pi i k/M}|^{-p} over M nodes
double kernel_power_sum(cplx z, double p, std::size_t m);
/// num(w_k)/den(w_k) at the M roots of unity w_k = e^{2 pi i k/M}; coefficients ascending.
void sample_rational(std::span<const cplx> num, std::span<const cplx> den, std::span<cplx> out);

/// Direct O(M(2N+1)) analysis: c_j = (1/M) sum_k x_k w_k^{-j}, j = -N..N.
std::vector<cplx> direct_analyze(std::span<const cplx> samples, std::size_t band);
/// Direct synthesis of M samples from coefficients ordered j = -N..N.
std::vector<cplx> direct_synthesize(std::span<const cplx> coeffs, std::size_t m);

}  // namespace serial

namespace omp {

void multiply(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out);
void multiply_conj(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out);
double power_mean(std::span<const cplx> f, double p);
double kernel_power_sum(cplx z, double p, std::size_t m);
void sample_rational(std::span<const cplx> num, std::span<const cplx> den, std::span<cplx> out);

}  // namespace omp

}  // namespace hardyop::kernels
