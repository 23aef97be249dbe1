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

#include <cmath>
#include <vector>

#include "gcwt/kernels.hpp"

namespace gcwt {

// Discretized dilation ladder a = a0^m. Level 0 is the finest (highest
// frequency) level; level m is centered at top_center_freq / a0^m.
//
// The default top frequency is 8 kHz brought down by six ladder steps, so
// level m here corresponds to level m + 6 of an 8 kHz-topped ladder while
// staying clear of Nyquist at 16 kHz.
struct ScaleLadder {
  double dilation_base = 1.13;    // a0
  double translation_base = 1.0;  // b0; the engine translates densely
  int num_levels = 23;
  double top_center_freq = 8000.0 / std::pow(1.13, 6);

  void validate() const;
  double center_freq(int level) const;

  bool operator==(const ScaleLadder&) const = default;
};

// Upper frequency limit of level m (its center frequency).
double level_limit_frequency(const ScaleLadder& ladder, int level);

struct DaughterWavelet {
  WaveletFamily base;
  double dilation = 1.0;
  double translation = 0.0;  // seconds
  SampledWavelet samples;
};

DaughterWavelet daughter(const WaveletFamily& fam, double dilation, double translation,
                         double sample_rate);

// One daughter per level, dilated so that level 0 has its spectral centroid
// at top_center_freq. Translations are left at zero; the transform slides
// the kernels itself.
std::vector<DaughterWavelet> ladder_daughters(const WaveletFamily& fam, const ScaleLadder& ladder,
                                              double sample_rate);

}  // namespace gcwt
