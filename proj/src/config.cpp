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


#include "gcwt/config.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "gcwt/analysis.hpp"
#include "gcwt/errors.hpp"
#include "json.hpp"

namespace gcwt {
namespace {

using nlohmann::json;

// Re-raises a ConfigError from a component validator under `section`.
template <typename F>
void scoped(const std::string& section, F&& check,
            const std::map<std::string, std::string>& rename = {}) {
  try {
    check();
  } catch (const ConfigError& e) {
    const auto it = rename.find(e.field());
    const std::string& field = it == rename.end() ? e.field() : it->second;
    throw ConfigError(section + "." + field, e.message());
  }
}

const std::map<std::string, std::string> kFamilyFields = {
    {"lambda", "amplitude"}, {"order", "gaussian_order"}, {"w0", "w0"}};

// Typed access to one JSON object with unknown-key detection.
class Section {
 public:
  Section(const json& j, std::string name) : j_(j), name_(std::move(name)) {
    if (!j_.is_object()) throw ConfigError(name_, "expected an object");
  }

  template <typename T>
  void get(const char* key, T& out) {
    seen_.insert(key);
    const auto it = j_.find(key);
    if (it == j_.end()) return;
    try {
      out = it->template get<T>();
    } catch (const json::exception&) {
      throw ConfigError(name_ + "." + key, "wrong type");
    }
  }

  template <typename T>
  void get_optional(const char* key, std::optional<T>& out) {
    seen_.insert(key);
    const auto it = j_.find(key);
    if (it == j_.end()) return;
    if (it->is_null()) {
      out.reset();
      return;
    }
    try {
      out = it->template get<T>();
    } catch (const json::exception&) {
      throw ConfigError(name_ + "." + key, "wrong type");
    }
  }

  void finish() const {
    for (const auto& [key, value] : j_.items()) {
      if (!seen_.count(key)) throw ConfigError(name_ + "." + key, "unknown key");
    }
  }

 private:
  const json& j_;
  std::string name_;
  std::set<std::string> seen_;
};

const json& child(const json& root, const char* key, const json& empty) {
  const auto it = root.find(key);
  return it == root.end() ? empty : *it;
}

}  // namespace

WaveletFamily FamilyConfig::to_family() const {
  if (name == "gammachirp") {
    return Gammachirp{normalize ? gcwt::normalize(gammachirp) : gammachirp};
  }
  if (name == "gammatone") {
    GammachirpParams p = gammachirp;
    p.chirp = 0.0;
    return make_gammatone(normalize ? gcwt::normalize(p) : p);
  }
  if (name == "morlet") return Morlet{morlet_w0, center_hz};
  if (name == "mexican_hat") return MexicanHat{center_hz};
  if (name == "gaussian_derivative") return GaussianDerivative{gaussian_order, center_hz};
  throw ConfigError("name",
                    "unknown wavelet '" + name +
                        "' (expected gammachirp, gammatone, morlet, mexican_hat or "
                        "gaussian_derivative)");
}

VowelSpec SynthConfig::to_spec() const {
  VowelSpec spec;
  if (vowel == "a" || vowel == "i" || vowel == "u") {
    spec = builtin_vowel(vowel);
  } else if (!formants) {
    throw ConfigError("vowel", "unknown vowel '" + vowel +
                                   "' (expected a, i or u, or give explicit formants)");
  } else if (vowel.empty()) {
    throw ConfigError("vowel", "label must not be empty");
  }
  spec.label = vowel;
  if (pitch) spec.pitch = *pitch;
  if (formants) spec.formants = *formants;
  if (bandwidths) spec.bandwidths = *bandwidths;
  spec.duration = duration;
  spec.sample_rate = sample_rate;
  return spec;
}

void RunConfig::validate() const {
  scoped(
      "family",
      [&] {
        if (family.name == "gammachirp" || family.name == "gammatone") {
          GammachirpParams p = family.gammachirp;
          if (family.normalize) p.amplitude = 1.0;
          p.validate();
        }
        gcwt::validate(family.to_family());
      },
      kFamilyFields);
  scoped("ladder", [&] { ladder.validate(); });
  scoped("synth", [&] { synth.to_spec().validate(); });
  if (render.width < 16 || render.width > 10000)
    throw ConfigError("render.width", "must lie in [16, 10000]");
  if (render.height < 16 || render.height > 10000)
    throw ConfigError("render.height", "must lie in [16, 10000]");
  if (analysis.spectra != "band" && analysis.spectra != "approximation")
    throw ConfigError("analysis.spectra", "expected 'band' or 'approximation'");
  for (int m : analysis.report_levels) {
    if (m < 0 || m >= ladder.num_levels)
      throw ConfigError("analysis.report_levels",
                        "level " + std::to_string(m) + " outside the ladder");
  }
}

std::string to_json(const RunConfig& c) {
  json j;
  const GammachirpParams& g = c.family.gammachirp;
  j["family"] = {{"name", c.family.name},
                 {"n", g.order},
                 {"b", g.bandwidth_factor},
                 {"c", g.chirp},
                 {"f0", g.center_freq},
                 {"phi", g.phase},
                 {"amplitude", g.amplitude},
                 {"normalize", c.family.normalize},
                 {"w0", c.family.morlet_w0},
                 {"center_hz", c.family.center_hz},
                 {"gaussian_order", c.family.gaussian_order}};
  j["ladder"] = {{"a0", c.ladder.dilation_base},
                 {"b0", c.ladder.translation_base},
                 {"num_levels", c.ladder.num_levels},
                 {"top_center_freq", c.ladder.top_center_freq}};
  json s = {{"vowel", c.synth.vowel},
            {"duration", c.synth.duration},
            {"sample_rate", c.synth.sample_rate}};
  if (c.synth.pitch) s["pitch"] = *c.synth.pitch;
  if (c.synth.formants) s["formants"] = *c.synth.formants;
  if (c.synth.bandwidths) s["bandwidths"] = *c.synth.bandwidths;
  j["synth"] = s;
  j["io"] = {{"input", c.io.input}, {"output", c.io.output}};
  j["render"] = {
      {"plots", c.render.plots}, {"width", c.render.width}, {"height", c.render.height}};
  j["analysis"] = {{"report_levels", c.analysis.report_levels},
                   {"threads", c.analysis.threads},
                   {"spectra", c.analysis.spectra}};
  return j.dump(2) + "\n";
}

RunConfig run_config_from_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("config", std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config", "expected a JSON object");
  const json empty = json::object();
  RunConfig c;

  Section family(child(root, "family", empty), "family");
  GammachirpParams& g = c.family.gammachirp;
  family.get("name", c.family.name);
  family.get("n", g.order);
  family.get("b", g.bandwidth_factor);
  family.get("c", g.chirp);
  family.get("f0", g.center_freq);
  family.get("phi", g.phase);
  family.get("amplitude", g.amplitude);
  family.get("normalize", c.family.normalize);
  family.get("w0", c.family.morlet_w0);
  family.get("center_hz", c.family.center_hz);
  family.get("gaussian_order", c.family.gaussian_order);
  family.finish();

  Section ladder(child(root, "ladder", empty), "ladder");
  ladder.get("a0", c.ladder.dilation_base);
  ladder.get("b0", c.ladder.translation_base);
  ladder.get("num_levels", c.ladder.num_levels);
  ladder.get("top_center_freq", c.ladder.top_center_freq);
  ladder.finish();

  Section synth(child(root, "synth", empty), "synth");
  synth.get("vowel", c.synth.vowel);
  synth.get_optional("pitch", c.synth.pitch);
  synth.get_optional("formants", c.synth.formants);
  synth.get_optional("bandwidths", c.synth.bandwidths);
  synth.get("duration", c.synth.duration);
  synth.get("sample_rate", c.synth.sample_rate);
  synth.finish();

  Section io(child(root, "io", empty), "io");
  io.get("input", c.io.input);
  io.get("output", c.io.output);
  io.finish();

  Section render(child(root, "render", empty), "render");
  render.get("plots", c.render.plots);
  render.get("width", c.render.width);
  render.get("height", c.render.height);
  render.finish();

  Section analysis(child(root, "analysis", empty), "analysis");
  analysis.get("report_levels", c.analysis.report_levels);
  analysis.get("threads", c.analysis.threads);
  analysis.get("spectra", c.analysis.spectra);
  analysis.finish();

  for (const auto& [key, value] : root.items()) {
    static const std::set<std::string> kSections = {"family", "ladder", "synth",
                                                    "io",     "render", "analysis"};
    if (!kSections.count(key)) throw ConfigError(key, "unknown section");
  }
  return c;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return run_config_from_json(text.str());
}

void save_run_config(const std::filesystem::path& path, const RunConfig& config) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << to_json(config);
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace gcwt
