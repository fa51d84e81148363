#include "fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace torusfs::detail {

namespace {

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};
using Buffer = std::unique_ptr<fftw_complex[], FftwFree>;

Buffer allocate(std::size_t n) { return Buffer(fftw_alloc_complex(n)); }

struct PlanDeleter {
  void operator()(fftw_plan p) const { fftw_destroy_plan(p); }
};
using Plan = std::unique_ptr<std::remove_pointer_t<fftw_plan>, PlanDeleter>;

// FFTW planning is not thread-safe; execution with the new-array interface
// is. Plans are built once per shape with FFTW_ESTIMATE so every run uses
// the same codelets and produces identical bits.
class PlanCache {
 public:
  fftw_plan get(int rows, int cols, int sign) {
    std::lock_guard lock(mutex_);
    auto key = std::make_tuple(rows, cols, sign);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second.get();
    const std::size_t n = static_cast<std::size_t>(rows) * cols;
    Buffer in = allocate(n);
    Buffer out = allocate(n);
    fftw_plan p = rows == 1 ? fftw_plan_dft_1d(cols, in.get(), out.get(), sign, FFTW_ESTIMATE)
                            : fftw_plan_dft_2d(rows, cols, in.get(), out.get(), sign, FFTW_ESTIMATE);
    plans_.emplace(key, Plan(p));
    return p;
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<int, int, int>, Plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

void run(std::vector<cplx>& data, int rows, int cols, FftDirection dir) {
  const int sign = dir == FftDirection::Forward ? FFTW_FORWARD : FFTW_BACKWARD;
  fftw_plan plan = cache().get(rows, cols, sign);
  const std::size_t n = data.size();
  Buffer in = allocate(n);
  Buffer out = allocate(n);
  for (std::size_t i = 0; i < n; ++i) {
    in[i][0] = data[i].real();
    in[i][1] = data[i].imag();
  }
  fftw_execute_dft(plan, in.get(), out.get());
  for (std::size_t i = 0; i < n; ++i) data[i] = cplx(out[i][0], out[i][1]);
}

}  // namespace

void fft2(std::vector<cplx>& data, int rows, int cols, FftDirection dir) { run(data, rows, cols, dir); }

void fft1(std::vector<cplx>& data, FftDirection dir) {
  run(data, 1, static_cast<int>(data.size()), dir);
}

}  // namespace torusfs::detail
