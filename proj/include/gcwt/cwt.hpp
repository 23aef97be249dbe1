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

#include <cstddef>
#include <span>
#include <vector>

#include "gcwt/fft.hpp"
#include "gcwt/kernels.hpp"
#include "gcwt/scalespace.hpp"

namespace gcwt {

struct Signal {
  std::vector<double> samples;
  double sample_rate = 0.0;

  // Throws DomainError for an empty or non-finite signal, ConfigError for a
  // bad rate.
  void validate() const;
};

struct Scalogram {
  // coefficients[m][i]: inner product of the signal with the level-m daughter
  // translated to sample i.
  std::vector<std::vector<Complex>> coefficients;
  std::vector<double> level_center_freqs;
  double sample_rate = 0.0;
  WaveletFamily family;
  // Kernel placement per level: sample i reads input samples
  // [i + kernel_offset[m], i + kernel_offset[m] + kernel_length[m]).
  std::vector<long long> kernel_offset;
  std::vector<std::size_t> kernel_length;

  std::size_t num_levels() const { return coefficients.size(); }
  std::size_t num_samples() const { return coefficients.empty() ? 0 : coefficients[0].size(); }
  // True when the kernel at (level, i) overhangs either end of the input.
  bool is_edge(std::size_t level, std::size_t i) const;
};

struct CwtOptions {
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

// Frequency-domain correlation of `sig` with every ladder daughter.
Scalogram cwt(const Signal& sig, const WaveletFamily& fam, const ScaleLadder& ladder,
              CwtOptions options = {});

// Same, with precomputed daughters (all with translation 0).
Scalogram cwt(const Signal& sig, const WaveletFamily& fam, const ScaleLadder& ladder,
              const std::vector<DaughterWavelet>& daughters, CwtOptions options = {});

constexpr double kSpectrumFloorDb = -120.0;

struct LevelSpectrum {
  int level = 0;
  std::vector<double> freqs;          // Hz, 0 .. rate/2
  std::vector<double> log_magnitude;  // dB, floored
};

// Hann-windowed power spectrum, scaled so that the one-sided bins sum to
// the signal energy (sum of squares), in dB and floored. The FFT size is the
// next power of two >= the signal length.
LevelSpectrum log_spectrum(std::span<const double> samples, double sample_rate,
                           double floor_db = kSpectrumFloorDb);

// log_spectrum() of the real part of one scalogram row.
LevelSpectrum level_log_spectrum(const Scalogram& scal, int level,
                                 double floor_db = kSpectrumFloorDb);

// Real part of the sum of rows m .. num_levels-1 with unit weights.
Signal approximation(const Scalogram& scal, int level);

}  // namespace gcwt
