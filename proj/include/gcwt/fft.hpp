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

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace gcwt {

using Complex = std::complex<double>;

std::size_t next_pow2(std::size_t n);

// Forward DFT, X[k] = sum_n x[n] exp(-2 pi j k n / size). The input is
// zero-padded (or must fit) to `size` points.
std::vector<Complex> fft(std::span<const Complex> input, std::size_t size);
std::vector<Complex> fft(std::span<const double> input, std::size_t size);

// Inverse DFT including the 1/size factor.
std::vector<Complex> ifft(std::span<const Complex> spectrum);

}  // namespace gcwt
