#pragma once

#include <complex>
#include <span>
#include <vector>

namespace hardyop::fft {

/// Fourier coefficients c_j, j = -N..N, of the trigonometric interpolant of
/// M uniform samples.  `tail` (if non-null) receives the fraction of spectral
/// energy outside the band.
std::vector<std::complex<double>> analyze(std::span<const std::complex<double>> samples, std::size_t band,
                                          double* tail = nullptr);

/// M samples of sum_j c_j w^j with coefficients ordered j = -N..N.  Requires M >= 2N+1.
std::vector<std::complex<double>> synthesize(std::span<const std::complex<double>> coeffs, std::size_t m);

}  // namespace hardyop::fft
