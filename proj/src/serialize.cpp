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


#include "gcwt/serialize.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "gcwt/errors.hpp"
#include "json.hpp"

namespace gcwt {
namespace {

using nlohmann::json;

double parse_double(const std::string& s, const std::string& what) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw IoError("bad number '" + s + "' in " + what);
  return v;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

bool read_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

json peak_json(const Peak& p) {
  return {{"freq_hz", p.freq_hz}, {"level_db", p.level_db}, {"prominence_db", p.prominence_db}};
}

Peak peak_from(const json& j) {
  return {j.at("freq_hz").get<double>(), j.at("level_db").get<double>(),
          j.at("prominence_db").get<double>()};
}

Presence presence_from(const std::string& s) {
  if (s == "detected") return Presence::kDetected;
  if (s == "attenuated") return Presence::kAttenuated;
  if (s == "absent") return Presence::kAbsent;
  throw IoError("unknown presence '" + s + "'");
}

json family_json(const WaveletFamily& fam) {
  json j = {{"name", family_name(fam)}};
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Gammachirp>) {
          j["n"] = f.params.order;
          j["b"] = f.params.bandwidth_factor;
          j["c"] = f.params.chirp;
          j["f0"] = f.params.center_freq;
          j["phi"] = f.params.phase;
          j["amplitude"] = f.params.amplitude;
        } else if constexpr (std::is_same_v<T, Morlet>) {
          j["w0"] = f.w0;
          j["center_hz"] = f.center_hz;
        } else if constexpr (std::is_same_v<T, MexicanHat>) {
          j["center_hz"] = f.center_hz;
        } else {
          j["order"] = f.order;
          j["center_hz"] = f.center_hz;
        }
      },
      fam);
  return j;
}

WaveletFamily family_from(const json& j) {
  const std::string name = j.at("name").get<std::string>();
  if (name == "gammachirp" || name == "gammatone") {
    GammachirpParams p;
    p.order = j.at("n").get<int>();
    p.bandwidth_factor = j.at("b").get<double>();
    p.chirp = j.at("c").get<double>();
    p.center_freq = j.at("f0").get<double>();
    p.phase = j.at("phi").get<double>();
    p.amplitude = j.at("amplitude").get<double>();
    return Gammachirp{p};
  }
  if (name == "morlet") return Morlet{j.at("w0").get<double>(), j.at("center_hz").get<double>()};
  if (name == "mexican_hat") return MexicanHat{j.at("center_hz").get<double>()};
  if (name == "gaussian_derivative")
    return GaussianDerivative{j.at("order").get<int>(), j.at("center_hz").get<double>()};
  throw IoError("unknown wavelet family '" + name + "'");
}

template <typename F>
auto parse_json(const std::string& text, F&& build) {
  try {
    return build(json::parse(text));
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

void write_scalogram_csv(std::ostream& out, const Scalogram& scal) {
  out << "time_s";
  for (std::size_t m = 0; m < scal.num_levels(); ++m)
    out << ",level_" << m << '@' << format_double(scal.level_center_freqs[m]) << "Hz";
  out << '\n';
  std::string row;
  for (std::size_t i = 0; i < scal.num_samples(); ++i) {
    row = format_double(static_cast<double>(i) / scal.sample_rate);
    for (std::size_t m = 0; m < scal.num_levels(); ++m) {
      row += ',';
      row += format_double(std::abs(scal.coefficients[m][i]));
    }
    row += '\n';
    out << row;
  }
}

Scalogram read_scalogram_csv(std::istream& in) {
  std::string line;
  if (!read_line(in, line)) throw IoError("scalogram CSV: empty input");
  const std::vector<std::string> header = split(line);
  if (header.empty() || header[0] != "time_s") throw IoError("scalogram CSV: bad header");
  Scalogram scal;
  for (std::size_t m = 1; m < header.size(); ++m) {
    const std::string& h = header[m];
    const auto at = h.find('@');
    const std::string prefix = "level_" + std::to_string(m - 1);
    if (h.compare(0, at, prefix) != 0 || at == std::string::npos || h.size() < at + 3 ||
        h.compare(h.size() - 2, 2, "Hz") != 0)
      throw IoError("scalogram CSV: bad column '" + h + "'");
    scal.level_center_freqs.push_back(
        parse_double(h.substr(at + 1, h.size() - at - 3), "scalogram header"));
  }
  scal.coefficients.resize(header.size() - 1);
  std::vector<double> times;
  while (read_line(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> cells = split(line);
    if (cells.size() != header.size())
      throw IoError("scalogram CSV: row " + std::to_string(times.size() + 1) +
                    " has the wrong number of columns");
    times.push_back(parse_double(cells[0], "scalogram CSV"));
    for (std::size_t m = 1; m < cells.size(); ++m)
      scal.coefficients[m - 1].emplace_back(parse_double(cells[m], "scalogram CSV"), 0.0);
  }
  if (times.size() >= 2) {
    double rate = 1.0 / (times[1] - times[0]);
    const double nearest = std::round(rate);
    if (std::abs(rate - nearest) <= 1e-9 * nearest) rate = nearest;
    scal.sample_rate = rate;
  }
  return scal;
}

void write_spectra_csv(std::ostream& out, const std::vector<LevelSpectrum>& spectra) {
  out << "level,freq_hz,log_mag_db\n";
  std::string row;
  for (const LevelSpectrum& s : spectra) {
    for (std::size_t k = 0; k < s.freqs.size(); ++k) {
      row = std::to_string(s.level);
      row += ',';
      row += format_double(s.freqs[k]);
      row += ',';
      row += format_double(s.log_magnitude[k]);
      row += '\n';
      out << row;
    }
  }
}

std::vector<LevelSpectrum> read_spectra_csv(std::istream& in) {
  std::string line;
  if (!read_line(in, line) || line != "level,freq_hz,log_mag_db")
    throw IoError("spectra CSV: bad header");
  std::vector<LevelSpectrum> out;
  while (read_line(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> cells = split(line);
    if (cells.size() != 3) throw IoError("spectra CSV: expected 3 columns");
    const int level = static_cast<int>(parse_double(cells[0], "spectra CSV"));
    if (out.empty() || out.back().level != level) {
      out.emplace_back();
      out.back().level = level;
    }
    out.back().freqs.push_back(parse_double(cells[1], "spectra CSV"));
    out.back().log_magnitude.push_back(parse_double(cells[2], "spectra CSV"));
  }
  return out;
}

std::string family_to_json(const WaveletFamily& fam) { return family_json(fam).dump(); }

WaveletFamily family_from_json(const std::string& text) {
  return parse_json(text, [](const json& j) { return family_from(j); });
}

std::string report_json(const ComparisonReport& report) {
  json families = json::array();
  for (const FormantReport& r : report.families) {
    json levels = json::array();
    for (const LevelReport& l : r.per_level) {
      json peaks = json::array();
      for (const Peak& p : l.peaks) peaks.push_back(peak_json(p));
      json matched = json::array();
      json presence = json::array();
      for (std::size_t j = 0; j < 3; ++j) {
        matched.push_back(l.formant_peaks[j] ? peak_json(*l.formant_peaks[j]) : json(nullptr));
        presence.push_back(presence_name(l.presence[j]));
      }
      levels.push_back({{"level", l.level},
                        {"limit_hz", l.limit_hz},
                        {"peaks", peaks},
                        {"formant_peaks", matched},
                        {"presence", presence}});
    }
    families.push_back(
        {{"name", family_name(r.family)}, {"family", family_json(r.family)}, {"per_level", levels}});
  }
  json agreement = json::array();
  if (!report.families.empty()) {
    const auto& ref = report.families.front().per_level;
    for (std::size_t k = 0; k < report.agreement.size(); ++k) {
      agreement.push_back({{"level", ref[k].level},
                           {"limit_hz", ref[k].limit_hz},
                           {"counts", report.agreement[k]}});
    }
  }
  const std::array<double, 3> formants =
      report.families.empty() ? std::array<double, 3>{} : report.families.front().formants;
  json j = {{"vowel", report.vowel},
            {"formants", formants},
            {"families", families},
            {"agreement", agreement}};
  return j.dump(2) + "\n";
}

ComparisonReport comparison_report_from_json(const std::string& text) {
  return parse_json(text, [](const json& j) {
    ComparisonReport report;
    report.vowel = j.at("vowel").get<std::string>();
    const auto formants = j.at("formants").get<std::array<double, 3>>();
    for (const json& f : j.at("families")) {
      FormantReport r;
      r.vowel = report.vowel;
      r.formants = formants;
      r.family = family_from(f.at("family"));
      for (const json& l : f.at("per_level")) {
        LevelReport lr;
        lr.level = l.at("level").get<int>();
        lr.limit_hz = l.at("limit_hz").get<double>();
        for (const json& p : l.at("peaks")) lr.peaks.push_back(peak_from(p));
        for (std::size_t k = 0; k < 3; ++k) {
          const json& p = l.at("formant_peaks").at(k);
          if (!p.is_null()) lr.formant_peaks[k] = peak_from(p);
          lr.presence[k] = presence_from(l.at("presence").at(k).get<std::string>());
        }
        r.per_level.push_back(std::move(lr));
      }
      report.families.push_back(std::move(r));
    }
    for (const json& a : j.at("agreement"))
      report.agreement.push_back(a.at("counts").get<std::array<int, 3>>());
    return report;
  });
}

std::string report_table(const ComparisonReport& report) {
  std::ostringstream out;
  char buf[160];
  out << "vowel /" << report.vowel << "/";
  if (!report.families.empty()) {
    const auto& f = report.families.front().formants;
    std::snprintf(buf, sizeof(buf), "  F1=%g Hz  F2=%g Hz  F3=%g Hz", f[0], f[1], f[2]);
    out << buf;
  }
  out << "\n";
  std::snprintf(buf, sizeof(buf), "%-6s %-9s %-8s", "level", "limit_hz", "formant");
  out << buf;
  for (const FormantReport& r : report.families) {
    std::snprintf(buf, sizeof(buf), " %-12s", family_name(r.family).c_str());
    out << buf;
  }
  out << " agreement\n";
  if (report.families.empty()) return out.str();
  const auto& ref = report.families.front().per_level;
  for (std::size_t k = 0; k < ref.size(); ++k) {
    for (std::size_t j = 0; j < 3; ++j) {
      std::snprintf(buf, sizeof(buf), "%-6d %-9.1f F%-7zu", ref[k].level, ref[k].limit_hz, j + 1);
      out << buf;
      for (const FormantReport& r : report.families) {
        std::snprintf(buf, sizeof(buf), " %-12s", presence_name(r.per_level[k].presence[j]));
        out << buf;
      }
      out << ' ' << report.agreement[k][j] << "/" << report.families.size() << "\n";
    }
  }
  return out.str();
}

}  // namespace gcwt
