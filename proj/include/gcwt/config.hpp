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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gcwt/kernels.hpp"
#include "gcwt/scalespace.hpp"
#include "gcwt/synth.hpp"

namespace gcwt {

// Wavelet selection. `name` is one of gammachirp, gammatone, morlet,
// mexican_hat, gaussian_derivative; only the fields of that family are used.
struct FamilyConfig {
  std::string name = "gammachirp";
  GammachirpParams gammachirp;  // amplitude is ignored when normalize is set
  bool normalize = true;
  double morlet_w0 = kDefaultMorletW0;
  double center_hz = 1000.0;  // real families
  int gaussian_order = 1;

  WaveletFamily to_family() const;
  bool operator==(const FamilyConfig&) const = default;
};

// A built-in vowel with optional overrides, or a custom label with explicit
// formants.
struct SynthConfig {
  std::string vowel = "a";
  std::optional<double> pitch;
  std::optional<std::array<double, 3>> formants;
  std::optional<std::array<double, 3>> bandwidths;
  double duration = 0.5;
  double sample_rate = 16000.0;

  VowelSpec to_spec() const;
  bool operator==(const SynthConfig&) const = default;
};

struct IoConfig {
  std::string input;
  std::string output;
  bool operator==(const IoConfig&) const = default;
};

struct RenderConfig {
  bool plots = false;
  int width = 800;
  int height = 300;
  bool operator==(const RenderConfig&) const = default;
};

struct AnalysisConfig {
  std::vector<int> report_levels;  // empty: default_report_levels()
  unsigned threads = 0;
  // Source of the per-level spectra written by analyze: "band" (one row) or
  // "approximation" (rows >= m).
  std::string spectra = "band";
  bool operator==(const AnalysisConfig&) const = default;
};

struct RunConfig {
  FamilyConfig family;
  ScaleLadder ladder;
  SynthConfig synth;
  IoConfig io;
  RenderConfig render;
  AnalysisConfig analysis;

  // Throws ConfigError with a dotted field path, e.g. "family.c".
  void validate() const;
  bool operator==(const RunConfig&) const = default;
};

std::string to_json(const RunConfig& config);
// Unknown keys and ill-typed values are rejected with ConfigError.
RunConfig run_config_from_json(const std::string& text);

RunConfig load_run_config(const std::filesystem::path& path);
void save_run_config(const std::filesystem::path& path, const RunConfig& config);

}  // namespace gcwt
