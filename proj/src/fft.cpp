#include "hardyop/fft.hpp"

#include <fftw3.h>

#include <cassert>
#include <cmath>
#include <map>
#include <mutex>
#include <utility>

namespace hardyop::fft {

namespace {

using cplx = std::complex<double>;

// FFTW planning is not thread-safe; execution with the new-array interface is.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(std::size_t m, int sign) {
    std::lock_guard lock(mutex_);
    const auto key = std::make_pair(m, sign);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    std::vector<cplx> in(m), out(m);
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(m), reinterpret_cast<fftw_complex*>(in.data()),
                                      reinterpret_cast<fftw_complex*>(out.data()), sign,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

void execute(std::size_t m, int sign, std::vector<cplx>& in, std::vector<cplx>& out) {
  fftw_execute_dft(cache().get(m, sign), reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
}

}  // namespace

std::vector<cplx> analyze(std::span<const cplx> samples, std::size_t band, double* tail) {
  const std::size_t m = samples.size();
  assert(m >= 2 * band + 1);
  std::vector<cplx> in(samples.begin(), samples.end());
  std::vector<cplx> out(m);
  execute(m, FFTW_FORWARD, in, out);

  const double scale = 1.0 / static_cast<double>(m);
  std::vector<cplx> coeffs(2 * band + 1);
  for (std::size_t j = 0; j <= band; ++j) coeffs[band + j] = out[j] * scale;
  for (std::size_t j = 1; j <= band; ++j) coeffs[band - j] = out[m - j] * scale;

  if (tail != nullptr) {
    double total = 0.0;
    double outside = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      const double e = std::norm(out[k]);
      total += e;
      if (k > band && k < m - band) outside += e;
    }
    *tail = total > 0.0 ? std::sqrt(outside / total) : 0.0;
  }
  return coeffs;
}

std::vector<cplx> synthesize(std::span<const cplx> coeffs, std::size_t m) {
  const std::size_t band = (coeffs.size() - 1) / 2;
  assert(m >= 2 * band + 1);
  std::vector<cplx> in(m, cplx{0.0, 0.0});
  for (std::size_t j = 0; j <= band; ++j) in[j] = coeffs[band + j];
  for (std::size_t j = 1; j <= band; ++j) in[m - j] = coeffs[band - j];
  std::vector<cplx> out(m);
  execute(m, FFTW_BACKWARD, in, out);
  return out;
}

}  // namespace hardyop::fft
