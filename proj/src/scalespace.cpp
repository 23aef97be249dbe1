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

#include "gcwt/scalespace.hpp"

#include <string>

#include "gcwt/errors.hpp"

namespace gcwt {

void ScaleLadder::validate() const {
  if (!(dilation_base > 1.0) || !std::isfinite(dilation_base))
    throw ConfigError("a0", "dilation base must be > 1");
  if (!(translation_base > 0.0) || !std::isfinite(translation_base))
    throw ConfigError("b0", "translation base must be > 0");
  if (num_levels < 1) throw ConfigError("num_levels", "must be >= 1");
  if (!(top_center_freq > 0.0) || !std::isfinite(top_center_freq))
    throw ConfigError("top_center_freq", "must be > 0");
}

double ScaleLadder::center_freq(int level) const {
  return top_center_freq / std::pow(dilation_base, level);
}

double level_limit_frequency(const ScaleLadder& ladder, int level) {
  if (level < 0 || level >= ladder.num_levels)
    throw DomainError("level " + std::to_string(level) + " outside [0, " +
                      std::to_string(ladder.num_levels) + ")");
  return ladder.center_freq(level);
}

DaughterWavelet daughter(const WaveletFamily& fam, double dilation, double translation,
                         double sample_rate) {
  if (!(dilation > 0.0)) throw DomainError("daughter: dilation must be positive");
  return {fam, dilation, translation, sample_dilated(fam, dilation, translation, sample_rate)};
}

std::vector<DaughterWavelet> ladder_daughters(const WaveletFamily& fam, const ScaleLadder& ladder,
                                              double sample_rate) {
  ladder.validate();
  if (!(ladder.top_center_freq < sample_rate / 2.0))
    throw ConfigError("top_center_freq", "must lie below Nyquist (" +
                                             std::to_string(sample_rate / 2.0) + " Hz)");
  // The mother centroid is taken at a rate high enough that it is not
  // clipped by Nyquist.
  double mother_rate = sample_rate;
  while (energy_above(fam, mother_rate / 2.0) > kTailEnergy) mother_rate *= 2.0;
  const double mother_centroid = sample_mother(fam, mother_rate).center_freq;
  const double base = mother_centroid / ladder.top_center_freq;

  std::vector<DaughterWavelet> out;
  out.reserve(static_cast<std::size_t>(ladder.num_levels));
  for (int m = 0; m < ladder.num_levels; ++m) {
    const double a = base * std::pow(ladder.dilation_base, m);
    try {
      out.push_back(daughter(fam, a, 0.0, sample_rate));
    } catch (const ConfigError& e) {
      throw ConfigError("ladder", "level " + std::to_string(m) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace gcwt
