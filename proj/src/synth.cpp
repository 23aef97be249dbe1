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

#include "gcwt/synth.hpp"

#include <algorithm>
#include <cmath>

#include "gcwt/errors.hpp"

namespace gcwt {

void VowelSpec::validate() const {
  if (!(sample_rate > 0.0) || !std::isfinite(sample_rate))
    throw ConfigError("sample_rate", "must be positive");
  if (!(pitch > 0.0) || !std::isfinite(pitch)) throw ConfigError("pitch", "must be positive");
  if (!(duration > 0.0) || !std::isfinite(duration))
    throw ConfigError("duration", "must be positive");
  double prev = pitch;
  for (std::size_t i = 0; i < formants.size(); ++i) {
    const std::string name = "F" + std::to_string(i + 1);
    if (!(formants[i] > prev)) throw ConfigError(name, "formants must increase above the pitch");
    if (!(bandwidths[i] > 0.0) || !std::isfinite(bandwidths[i]))
      throw ConfigError("B" + std::to_string(i + 1), "bandwidth must be positive");
    prev = formants[i];
  }
  if (!(formants[2] < sample_rate / 2.0)) throw ConfigError("F3", "must lie below Nyquist");
}

VowelSpec builtin_vowel(const std::string& label) {
  VowelSpec spec;
  spec.label = label;
  if (label == "a") {
    spec.formants = {730.0, 1090.0, 2440.0};
  } else if (label == "i") {
    spec.formants = {270.0, 2290.0, 3010.0};
  } else if (label == "u") {
    spec.formants = {300.0, 870.0, 2240.0};
  } else {
    throw DomainError("unknown vowel '" + label + "' (expected a, i or u)");
  }
  return spec;
}

Signal impulse_train(double pitch, double duration, double sample_rate) {
  if (!(sample_rate > 0.0)) throw DomainError("impulse_train: sample rate must be positive");
  if (!(pitch > 0.0) || !(pitch < sample_rate / 2.0))
    throw DomainError("impulse_train: pitch must lie in (0, sample_rate / 2)");
  if (!(duration > 0.0)) throw DomainError("impulse_train: duration must be positive");
  Signal out;
  out.sample_rate = sample_rate;
  out.samples.assign(static_cast<std::size_t>(std::llround(duration * sample_rate)), 0.0);
  const double period = sample_rate / pitch;
  for (long long k = 0;; ++k) {
    const auto idx = static_cast<std::size_t>(std::llround(static_cast<double>(k) * period));
    if (idx >= out.samples.size()) break;
    out.samples[idx] = 1.0;
  }
  return out;
}

Signal resonator_cascade(const Signal& src, const VowelSpec& spec) {
  spec.validate();
  if (src.sample_rate != spec.sample_rate)
    throw ConfigError("sample_rate", "source and vowel spec rates differ");
  Signal out = src;
  for (std::size_t f = 0; f < spec.formants.size(); ++f) {
    const double r = std::exp(-kPi * spec.bandwidths[f] / spec.sample_rate);
    const double b = 2.0 * r * std::cos(2.0 * kPi * spec.formants[f] / spec.sample_rate);
    const double c = -r * r;
    const double a = 1.0 - b - c;
    double y1 = 0.0;
    double y2 = 0.0;
    for (double& v : out.samples) {
      const double y = a * v + b * y1 + c * y2;
      y2 = y1;
      y1 = y;
      v = y;
    }
  }
  double peak = 0.0;
  for (double v : out.samples) peak = std::max(peak, std::abs(v));
  if (peak > 0.0)
    for (double& v : out.samples) v *= kPeakLevel / peak;
  return out;
}

Signal synthesize(const VowelSpec& spec) {
  spec.validate();
  return resonator_cascade(impulse_train(spec.pitch, spec.duration, spec.sample_rate), spec);
}

}  // namespace gcwt
