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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gcwt/cwt.hpp"
#include "gcwt/scalespace.hpp"
#include "gcwt/synth.hpp"

namespace gcwt {

enum class Presence { kAbsent = 0, kAttenuated = 1, kDetected = 2 };

// "detected", "attenuated" or "absent".
const char* presence_name(Presence p);

struct Peak {
  double freq_hz = 0.0;        // raw-spectrum maximum near the envelope peak
  double level_db = 0.0;       // envelope level at the peak
  double prominence_db = 0.0;  // envelope level above its local median

  bool operator==(const Peak&) const = default;
};

struct PeakOptions {
  // Harmonic spacing. Sets the envelope smoothing width and the matching
  // tolerance (+-pitch/2).
  double pitch_hz = 100.0;
  double median_half_width_hz = 1000.0;
  double detect_prominence_db = 6.0;
  double attenuate_prominence_db = 1.0;
  // Peaks further than this below the spectrum's envelope maximum are
  // treated as invisible.
  double visibility_range_db = 50.0;
};

// Spectral envelope: running maximum over one pitch period, then a running
// mean of the same width.
std::vector<double> spectral_envelope(const LevelSpectrum& spec, double pitch_hz);

// All local maxima of the envelope, strongest first, that are visible and
// reach the attenuation prominence.
std::vector<Peak> detect_peaks(const LevelSpectrum& spec, const PeakOptions& options = {});

// For each expected frequency, the strongest envelope maximum within
// +-pitch/2 of it, whatever its prominence; nullopt if there is none.
std::vector<std::optional<Peak>> detect_peaks(const LevelSpectrum& spec,
                                              std::span<const double> expected,
                                              const PeakOptions& options = {});

// Classification of a matched peak against the thresholds in `options`.
// `envelope_max_db` is the envelope maximum of the same spectrum.
Presence classify(const std::optional<Peak>& peak, double envelope_max_db,
                  const PeakOptions& options = {});

struct AnalysisOptions {
  // Levels to report, finest first. Empty selects default_report_levels().
  std::vector<int> report_levels;
  PeakOptions peaks;
  CwtOptions cwt;
  // Gammachirp used by compare_families(); normalized before use.
  GammachirpParams gammachirp;
};

// floor(k (L - 1) / 4) for k = 0..4: five levels spread over the ladder,
// 0/5/11/16/22 for 23 levels.
std::vector<int> default_report_levels(const ScaleLadder& ladder);

struct LevelReport {
  int level = 0;
  double limit_hz = 0.0;
  std::vector<Peak> peaks;
  std::array<Presence, 3> presence{};
  std::array<std::optional<Peak>, 3> formant_peaks;

  bool operator==(const LevelReport&) const = default;
};

struct FormantReport {
  std::string vowel;
  WaveletFamily family;
  std::array<double, 3> formants{};
  std::vector<LevelReport> per_level;

  bool operator==(const FormantReport&) const = default;
};

// Runs the transform and classifies each formant on the spectrum of the
// level-m approximation, for every report level m.
FormantReport formant_report(const Signal& sig, const WaveletFamily& fam,
                             const ScaleLadder& ladder, const VowelSpec& spec,
                             const AnalysisOptions& options = {});

// The three families compared on identical input: the unit-energy
// gammachirp with default parameters, Morlet and Mexican hat.
std::vector<WaveletFamily> comparison_families(const GammachirpParams& gammachirp = {});

struct ComparisonReport {
  std::string vowel;
  std::vector<FormantReport> families;
  // agreement[k][j]: number of families detecting formant j at report level k.
  std::vector<std::array<int, 3>> agreement;

  bool operator==(const ComparisonReport&) const = default;
};

ComparisonReport compare_families(const VowelSpec& spec, const ScaleLadder& ladder,
                                  const AnalysisOptions& options = {});

// Same, on a given signal.
ComparisonReport compare_families(const Signal& sig, const VowelSpec& spec,
                                  const ScaleLadder& ladder, const AnalysisOptions& options = {});

}  // namespace gcwt
