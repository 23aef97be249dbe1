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

#include <array>
#include <string>

#include "gcwt/cwt.hpp"

namespace gcwt {

// Source-filter description of a sustained vowel.
struct VowelSpec {
  std::string label;
  double pitch = 100.0;                         // Hz
  std::array<double, 3> formants{};             // F1..F3, Hz
  std::array<double, 3> bandwidths{60.0, 90.0, 120.0};  // Hz
  double duration = 0.5;                        // s
  double sample_rate = 16000.0;                 // Hz

  void validate() const;
  bool operator==(const VowelSpec&) const = default;
};

// "a", "i" or "u" with pitch 100 Hz and the classic formant triples.
VowelSpec builtin_vowel(const std::string& label);

// Unit impulses every sample_rate / pitch samples (rounded), starting at 0.
Signal impulse_train(double pitch, double duration, double sample_rate);

// Three cascaded two-pole resonators (unity DC gain, pole radius
// exp(-pi B / fs)), then peak normalization to kPeakLevel.
Signal resonator_cascade(const Signal& src, const VowelSpec& spec);

constexpr double kPeakLevel = 0.9;

// impulse_train followed by resonator_cascade.
Signal synthesize(const VowelSpec& spec);

}  // namespace gcwt
