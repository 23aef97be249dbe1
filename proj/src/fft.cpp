// Copyright 2026 The gcwt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gcwt/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace gcwt {
namespace {

struct FftwFree {
  void operator()(fftw_complex* p) const { fftw_free(p); }
};
using FftwBuffer = std::unique_ptr<fftw_complex[], FftwFree>;

FftwBuffer make_buffer(std::size_t n) {
  auto* p = fftw_alloc_complex(n);
  if (p == nullptr) throw std::bad_alloc();
  return FftwBuffer(p);
}

// Plans are created once per (size, sign) and reused through the new-array
// execute interface. Planner calls are not thread-safe, execution is.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(std::size_t n, int sign) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_pair(n, sign);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    auto in = make_buffer(n);
    auto out = make_buffer(n);
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), in.get(), out.get(),
                                      sign, FFTW_ESTIMATE);
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

std::vector<Complex> execute(FftwBuffer& in, std::size_t n, int sign) {
  auto out = make_buffer(n);
  fftw_execute_dft(plan_cache().get(n, sign), in.get(), out.get());
  std::vector<Complex> result(n);
  for (std::size_t k = 0; k < n; ++k) result[k] = {out[k][0], out[k][1]};
  return result;
}

void check_size(std::size_t input_size, std::size_t size) {
  if (size == 0 || input_size > size)
    throw std::invalid_argument("fft size must be positive and cover the input");
}

}  // namespace

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

std::vector<Complex> fft(std::span<const Complex> input, std::size_t size) {
  check_size(input.size(), size);
  auto in = make_buffer(size);
  for (std::size_t k = 0; k < size; ++k) {
    const Complex v = k < input.size() ? input[k] : Complex{};
    in[k][0] = v.real();
    in[k][1] = v.imag();
  }
  return execute(in, size, FFTW_FORWARD);
}

std::vector<Complex> fft(std::span<const double> input, std::size_t size) {
  check_size(input.size(), size);
  auto in = make_buffer(size);
  for (std::size_t k = 0; k < size; ++k) {
    in[k][0] = k < input.size() ? input[k] : 0.0;
    in[k][1] = 0.0;
  }
  return execute(in, size, FFTW_FORWARD);
}

std::vector<Complex> ifft(std::span<const Complex> spectrum) {
  const std::size_t n = spectrum.size();
  check_size(0, n);
  auto in = make_buffer(n);
  for (std::size_t k = 0; k < n; ++k) {
    in[k][0] = spectrum[k].real();
    in[k][1] = spectrum[k].imag();
  }
  auto out = execute(in, n, FFTW_BACKWARD);
  const double scale = 1.0 / static_cast<double>(n);
  for (auto& v : out) v *= scale;
  return out;
}

}  // namespace gcwt
