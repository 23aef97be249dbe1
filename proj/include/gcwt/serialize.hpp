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

#include <iosfwd>
#include <string>
#include <vector>

#include "gcwt/analysis.hpp"
#include "gcwt/cwt.hpp"

namespace gcwt {

// Shortest decimal form that reads back to the same double.
std::string format_double(double x);

// Header `time_s,level_0@<fc>Hz,...`, then one row per sample holding the
// time and the coefficient magnitude of every level.
void write_scalogram_csv(std::ostream& out, const Scalogram& scal);

// Parses write_scalogram_csv() output. Coefficients come back as real
// magnitudes; the family is not stored and is left default.
Scalogram read_scalogram_csv(std::istream& in);

// Header `level,freq_hz,log_mag_db`, then the rows of each spectrum.
void write_spectra_csv(std::ostream& out, const std::vector<LevelSpectrum>& spectra);
std::vector<LevelSpectrum> read_spectra_csv(std::istream& in);

std::string family_to_json(const WaveletFamily& fam);
WaveletFamily family_from_json(const std::string& text);

// {vowel, formants, families: [{name, family, per_level: [{level, limit_hz,
// peaks, formant_peaks, presence}]}], agreement: [{level, limit_hz, counts}]}
std::string report_json(const ComparisonReport& report);
ComparisonReport comparison_report_from_json(const std::string& text);

// One row per (level, formant) with the classification of each family.
std::string report_table(const ComparisonReport& report);

}  // namespace gcwt
