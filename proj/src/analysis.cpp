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


#include "gcwt/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "gcwt/errors.hpp"

namespace gcwt {
namespace {

double bin_width(const LevelSpectrum& spec) {
  if (spec.freqs.size() < 2) return 1.0;
  return spec.freqs[1] - spec.freqs[0];
}

// Odd window length covering `hz`.
std::size_t odd_bins(double hz, double df) {
  return static_cast<std::size_t>(std::lround(hz / df)) | 1u;
}

double median(std::vector<double> v) {
  const std::size_t n = v.size();
  auto mid = v.begin() + static_cast<std::ptrdiff_t>(n / 2);
  std::nth_element(v.begin(), mid, v.end());
  if (n % 2 == 1) return *mid;
  const double upper = *mid;
  const double lower = *std::max_element(v.begin(), mid);
  return 0.5 * (lower + upper);
}

// Indices of the envelope's local maxima; a plateau counts once, at its
// middle.
std::vector<std::size_t> local_maxima(const std::vector<double>& e) {
  std::vector<std::size_t> out;
  const std::size_t n = e.size();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!(e[i] > e[i - 1])) continue;
    std::size_t j = i;
    while (j + 1 < n && e[j + 1] == e[i]) ++j;
    if (j + 1 < n && e[j + 1] < e[i]) out.push_back((i + j) / 2);
    i = j;
  }
  return out;
}

Peak make_peak(const LevelSpectrum& spec, const std::vector<double>& env, std::size_t i,
               const PeakOptions& options) {
  const double df = bin_width(spec);
  const std::size_t n = env.size();

  const auto half = static_cast<std::size_t>(options.pitch_hz / 2.0 / df);
  const std::size_t lo = i > half ? i - half : 0;
  const std::size_t hi = std::min(n, i + half + 1);
  const auto raw = std::max_element(spec.log_magnitude.begin() + static_cast<std::ptrdiff_t>(lo),
                                    spec.log_magnitude.begin() + static_cast<std::ptrdiff_t>(hi));
  Peak p;
  p.freq_hz = spec.freqs[static_cast<std::size_t>(raw - spec.log_magnitude.begin())];
  p.level_db = env[i];

  const auto w = static_cast<std::size_t>(options.median_half_width_hz / df);
  const std::size_t mlo = i > w ? i - w : 0;
  const std::size_t mhi = std::min(n, i + w + 1);
  p.prominence_db =
      env[i] - median(std::vector<double>(env.begin() + static_cast<std::ptrdiff_t>(mlo),
                                          env.begin() + static_cast<std::ptrdiff_t>(mhi)));
  return p;
}

double envelope_max(const std::vector<double>& env) {
  return env.empty() ? kSpectrumFloorDb : *std::max_element(env.begin(), env.end());
}

}  // namespace

const char* presence_name(Presence p) {
  switch (p) {
    case Presence::kDetected:
      return "detected";
    case Presence::kAttenuated:
      return "attenuated";
    case Presence::kAbsent:
      break;
  }
  return "absent";
}

std::vector<double> spectral_envelope(const LevelSpectrum& spec, double pitch_hz) {
  const std::vector<double>& db = spec.log_magnitude;
  const std::size_t n = db.size();
  if (n == 0) return {};
  const std::size_t w = odd_bins(pitch_hz, bin_width(spec));
  const auto h = static_cast<long long>(w / 2);
  auto at = [&](const std::vector<double>& v, long long k) {
    return v[static_cast<std::size_t>(std::clamp<long long>(k, 0, static_cast<long long>(n) - 1))];
  };

  std::vector<double> peak(n);
  for (std::size_t i = 0; i < n; ++i) {
    double m = db[i];
    for (long long k = -h; k <= h; ++k) m = std::max(m, at(db, static_cast<long long>(i) + k));
    peak[i] = m;
  }
  std::vector<double> env(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (long long k = -h; k <= h; ++k) s += at(peak, static_cast<long long>(i) + k);
    env[i] = s / static_cast<double>(w);
  }
  return env;
}

std::vector<Peak> detect_peaks(const LevelSpectrum& spec, const PeakOptions& options) {
  const std::vector<double> env = spectral_envelope(spec, options.pitch_hz);
  const double top = envelope_max(env);
  std::vector<Peak> out;
  for (std::size_t i : local_maxima(env)) {
    Peak p = make_peak(spec, env, i, options);
    if (classify(p, top, options) != Presence::kAbsent) out.push_back(p);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Peak& a, const Peak& b) { return a.level_db > b.level_db; });
  return out;
}

std::vector<std::optional<Peak>> detect_peaks(const LevelSpectrum& spec,
                                              std::span<const double> expected,
                                              const PeakOptions& options) {
  const std::vector<double> env = spectral_envelope(spec, options.pitch_hz);
  const std::vector<std::size_t> maxima = local_maxima(env);
  std::vector<std::optional<Peak>> out;
  for (double target : expected) {
    std::optional<std::size_t> best;
    for (std::size_t i : maxima) {
      if (std::abs(spec.freqs[i] - target) > options.pitch_hz / 2.0) continue;
      if (!best || env[i] > env[*best]) best = i;
    }
    if (best) {
      out.push_back(make_peak(spec, env, *best, options));
    } else {
      out.push_back(std::nullopt);
    }
  }
  return out;
}

Presence classify(const std::optional<Peak>& peak, double envelope_max_db,
                  const PeakOptions& options) {
  if (!peak) return Presence::kAbsent;
  if (peak->level_db < envelope_max_db - options.visibility_range_db) return Presence::kAbsent;
  if (peak->prominence_db >= options.detect_prominence_db) return Presence::kDetected;
  if (peak->prominence_db >= options.attenuate_prominence_db) return Presence::kAttenuated;
  return Presence::kAbsent;
}

std::vector<int> default_report_levels(const ScaleLadder& ladder) {
  std::vector<int> levels;
  for (int k = 0; k <= 4; ++k) {
    const int m = k * (ladder.num_levels - 1) / 4;
    if (levels.empty() || levels.back() != m) levels.push_back(m);
  }
  return levels;
}

FormantReport formant_report(const Signal& sig, const WaveletFamily& fam,
                             const ScaleLadder& ladder, const VowelSpec& spec,
                             const AnalysisOptions& options) {
  spec.validate();
  if (sig.sample_rate != spec.sample_rate)
    throw ConfigError("sample_rate", "signal and vowel spec rates differ");
  std::vector<int> levels = options.report_levels;
  if (levels.empty()) levels = default_report_levels(ladder);
  for (int m : levels) {
    if (m < 0 || m >= ladder.num_levels)
      throw ConfigError("report_levels", "level " + std::to_string(m) + " outside the ladder");
  }

  const Scalogram scal = cwt(sig, fam, ladder, options.cwt);
  PeakOptions peak_options = options.peaks;
  peak_options.pitch_hz = spec.pitch;

  FormantReport report;
  report.vowel = spec.label;
  report.family = fam;
  report.formants = spec.formants;
  for (int m : levels) {
    const Signal approx = approximation(scal, m);
    const LevelSpectrum ls = log_spectrum(approx.samples, approx.sample_rate);
    LevelReport lr;
    lr.level = m;
    lr.limit_hz = level_limit_frequency(ladder, m);
    lr.peaks = detect_peaks(ls, peak_options);
    const double top = envelope_max(spectral_envelope(ls, peak_options.pitch_hz));
    const auto matched = detect_peaks(ls, spec.formants, peak_options);
    for (std::size_t j = 0; j < 3; ++j) {
      lr.formant_peaks[j] = matched[j];
      lr.presence[j] = classify(matched[j], top, peak_options);
    }
    report.per_level.push_back(std::move(lr));
  }
  return report;
}

std::vector<WaveletFamily> comparison_families(const GammachirpParams& gammachirp) {
  return {Gammachirp{normalize(gammachirp)}, Morlet{}, MexicanHat{}};
}

ComparisonReport compare_families(const Signal& sig, const VowelSpec& spec,
                                  const ScaleLadder& ladder, const AnalysisOptions& options) {
  ComparisonReport out;
  out.vowel = spec.label;
  for (const WaveletFamily& fam : comparison_families(options.gammachirp))
    out.families.push_back(formant_report(sig, fam, ladder, spec, options));
  const std::size_t levels = out.families.front().per_level.size();
  out.agreement.assign(levels, {0, 0, 0});
  for (const FormantReport& r : out.families) {
    for (std::size_t k = 0; k < levels; ++k) {
      for (std::size_t j = 0; j < 3; ++j) {
        if (r.per_level[k].presence[j] == Presence::kDetected) ++out.agreement[k][j];
      }
    }
  }
  return out;
}

ComparisonReport compare_families(const VowelSpec& spec, const ScaleLadder& ladder,
                                  const AnalysisOptions& options) {
  return compare_families(synthesize(spec), spec, ladder, options);
}

}  // namespace gcwt
