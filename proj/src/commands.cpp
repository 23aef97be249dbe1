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


#include "gcwt/commands.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gcwt/analysis.hpp"
#include "gcwt/config.hpp"
#include "gcwt/errors.hpp"
#include "gcwt/plot.hpp"
#include "gcwt/serialize.hpp"
#include "gcwt/wav.hpp"
#include "json.hpp"

namespace gcwt::cli {
namespace {

namespace fs = std::filesystem;

// Command-line values; only the ones given override the configuration.
struct Flags {
  std::string config_path;
  std::string save_config;
  std::optional<unsigned> threads;

  std::optional<std::string> family;
  std::optional<int> n;
  std::optional<double> b, c, f0, phi, w0, center;
  std::optional<int> gaussian_order;
  bool raw_amplitude = false;

  std::optional<int> levels;
  std::optional<double> a0, top;

  std::optional<std::string> vowel;
  std::optional<double> rate, dur, pitch;
  std::vector<double> formants, bandwidths;

  std::optional<std::string> input, output;
  bool plots = false;
  std::optional<std::string> spectra;
  std::vector<int> report_levels;
  bool json = false;
};

void add_common(CLI::App* app, Flags& f) {
  app->add_option("--config", f.config_path, "Read a JSON run configuration");
  app->add_option("--save-config", f.save_config, "Write the effective configuration as JSON");
}

void add_family(CLI::App* app, Flags& f) {
  app->add_option("--wavelet,--family", f.family,
                  "gammachirp, gammatone, morlet, mexican_hat or gaussian_derivative");
  app->add_option("--n", f.n, "Gammachirp order");
  app->add_option("--b", f.b, "Gammachirp bandwidth factor");
  app->add_option("--c", f.c, "Gammachirp chirp");
  app->add_option("--f0", f.f0, "Gammachirp center frequency (Hz)");
  app->add_option("--phi", f.phi, "Gammachirp phase (rad)");
  app->add_flag("--raw-amplitude", f.raw_amplitude, "Keep amplitude 1 instead of unit energy");
  app->add_option("--w0", f.w0, "Morlet central angular frequency");
  app->add_option("--center", f.center, "Center frequency of the real families (Hz)");
  app->add_option("--gaussian-order", f.gaussian_order, "Gaussian derivative order");
}

void add_ladder(CLI::App* app, Flags& f) {
  app->add_option("--levels", f.levels, "Number of ladder levels");
  app->add_option("--a0", f.a0, "Dilation base");
  app->add_option("--top", f.top, "Center frequency of level 0 (Hz)");
  app->add_option("--threads", f.threads, "Worker threads (0: all cores)");
}

void add_synth(CLI::App* app, Flags& f) {
  app->add_option("--vowel", f.vowel, "Vowel label: a, i, u, or a custom label with --formants");
  app->add_option("--rate", f.rate, "Sample rate (Hz)");
  app->add_option("--dur", f.dur, "Duration (s)");
  app->add_option("--pitch", f.pitch, "Pitch (Hz)");
  app->add_option("--formants", f.formants, "F1,F2,F3 (Hz)")->expected(3)->delimiter(',');
  app->add_option("--bandwidths", f.bandwidths, "B1,B2,B3 (Hz)")->expected(3)->delimiter(',');
}

template <typename T>
void set_if(const std::optional<T>& v, T& target) {
  if (v) target = *v;
}

std::array<double, 3> triple(const std::vector<double>& v) { return {v[0], v[1], v[2]}; }

RunConfig resolve(const Flags& f) {
  RunConfig c = f.config_path.empty() ? RunConfig{} : load_run_config(f.config_path);
  set_if(f.family, c.family.name);
  GammachirpParams& g = c.family.gammachirp;
  set_if(f.n, g.order);
  set_if(f.b, g.bandwidth_factor);
  set_if(f.c, g.chirp);
  set_if(f.f0, g.center_freq);
  set_if(f.phi, g.phase);
  if (f.raw_amplitude) c.family.normalize = false;
  set_if(f.w0, c.family.morlet_w0);
  set_if(f.center, c.family.center_hz);
  set_if(f.gaussian_order, c.family.gaussian_order);
  set_if(f.levels, c.ladder.num_levels);
  set_if(f.a0, c.ladder.dilation_base);
  set_if(f.top, c.ladder.top_center_freq);
  set_if(f.vowel, c.synth.vowel);
  set_if(f.rate, c.synth.sample_rate);
  set_if(f.dur, c.synth.duration);
  if (f.pitch) c.synth.pitch = *f.pitch;
  if (!f.formants.empty()) c.synth.formants = triple(f.formants);
  if (!f.bandwidths.empty()) c.synth.bandwidths = triple(f.bandwidths);
  set_if(f.input, c.io.input);
  set_if(f.output, c.io.output);
  if (f.plots) c.render.plots = true;
  set_if(f.spectra, c.analysis.spectra);
  if (!f.report_levels.empty()) c.analysis.report_levels = f.report_levels;
  set_if(f.threads, c.analysis.threads);
  c.validate();
  if (!f.save_config.empty()) save_run_config(f.save_config, c);
  return c;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

fs::path output_dir(const RunConfig& c) {
  const fs::path dir = c.io.output.empty() ? fs::path(".") : fs::path(c.io.output);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create '" + dir.string() + "': " + ec.message());
  return dir;
}

AnalysisOptions analysis_options(const RunConfig& c) {
  AnalysisOptions o;
  o.report_levels = c.analysis.report_levels;
  o.cwt.threads = c.analysis.threads;
  o.gammachirp = c.family.gammachirp;
  return o;
}

int cmd_synth(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const VowelSpec spec = c.synth.to_spec();
  const Signal sig = synthesize(spec);
  const fs::path path = c.io.output.empty() ? fs::path(spec.label + ".wav") : fs::path(c.io.output);
  const std::size_t clipped = write_wav(path, sig);
  if (clipped > 0) err << "warning: " << clipped << " samples clipped to 16-bit range\n";
  out << "wrote " << sig.samples.size() << " samples at " << spec.sample_rate << " Hz to "
      << path.string() << "\n";
  return kOk;
}

int cmd_analyze(const RunConfig& c, std::ostream& out) {
  if (c.io.input.empty()) throw ConfigError("io.input", "an input WAV file is required");
  const Signal sig = read_wav(c.io.input);
  const ScaleLadder& ladder = c.ladder;
  const Scalogram scal = cwt(sig, c.family.to_family(), ladder, CwtOptions{c.analysis.threads});

  std::vector<LevelSpectrum> spectra;
  for (int m = 0; m < ladder.num_levels; ++m) {
    if (c.analysis.spectra == "approximation") {
      const Signal approx = approximation(scal, m);
      spectra.push_back(log_spectrum(approx.samples, approx.sample_rate));
      spectra.back().level = m;
    } else {
      spectra.push_back(level_log_spectrum(scal, m));
    }
  }

  const fs::path dir = output_dir(c);
  std::ostringstream scal_csv, spec_csv;
  write_scalogram_csv(scal_csv, scal);
  write_spectra_csv(spec_csv, spectra);
  write_text(dir / "scalogram.csv", scal_csv.str());
  write_text(dir / "spectra.csv", spec_csv.str());
  out << "wrote " << (dir / "scalogram.csv").string() << " (" << scal.num_levels() << " levels x "
      << scal.num_samples() << " samples)\n";
  out << "wrote " << (dir / "spectra.csv").string() << "\n";

  if (c.render.plots) {
    const int w = c.render.width, h = c.render.height;
    write_png(dir / "scalogram.png", plot_scalogram(scal, w, h));
    std::vector<double> t(scal.num_samples());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<double>(i) / scal.sample_rate;
    for (int m = 0; m < ladder.num_levels; ++m) {
      std::vector<double> mag;
      mag.reserve(t.size());
      for (const Complex& z : scal.coefficients[m]) mag.push_back(std::abs(z));
      const std::string stem = "level_" + std::to_string(m);
      write_png(dir / (stem + "_scalogram.png"), plot_series(t, mag, w, h));
      write_png(dir / (stem + "_spectrum.png"),
                plot_series(spectra[m].freqs, spectra[m].log_magnitude, w, h));
    }
    out << "wrote " << 2 * ladder.num_levels + 1 << " images to " << dir.string() << "\n";
  }
  return kOk;
}

int cmd_compare(const RunConfig& c, bool as_json, std::ostream& out) {
  const VowelSpec spec = c.synth.to_spec();
  Signal sig;
  if (c.io.input.empty()) {
    sig = synthesize(spec);
  } else {
    sig = read_wav(c.io.input);
  }
  VowelSpec used = spec;
  used.sample_rate = sig.sample_rate;
  used.validate();
  const ComparisonReport report = compare_families(sig, used, c.ladder, analysis_options(c));
  const std::string json = report_json(report);
  const std::string table = report_table(report);
  if (!c.io.output.empty()) {
    const fs::path dir = output_dir(c);
    write_text(dir / ("compare_" + spec.label + ".json"), json);
    write_text(dir / ("compare_" + spec.label + ".txt"), table);
  }
  out << (as_json ? json : table);
  return kOk;
}

int cmd_kernel_info(const RunConfig& c, bool as_json, std::ostream& out) {
  const WaveletFamily fam = c.family.to_family();
  const double rate = c.synth.sample_rate;
  const SampledWavelet w = sample_mother(fam, rate);
  const AdmissibilityReport adm = check_admissibility(w);
  const Support sup = support(fam);

  nlohmann::ordered_json j;
  j["family"] = family_name(fam);
  j["parameters"] = nlohmann::ordered_json::parse(family_to_json(fam));
  j["parameters"].erase("name");
  j["sample_rate"] = rate;
  j["energy"] = w.energy();
  j["c_g"] = adm.c_g;
  j["dc_leakage"] = adm.dc_leakage;
  j["admissible"] = adm.is_admissible;
  j["center_freq_hz"] = w.center_freq;
  j["support_start_s"] = sup.start;
  j["support_end_s"] = sup.end;
  j["support_duration_s"] = sup.end - sup.start;
  j["num_samples"] = w.samples.size();
  if (as_json) {
    out << j.dump(2) << "\n";
    return kOk;
  }
  for (const auto& [key, value] : j.items()) {
    if (key == "parameters") {
      for (const auto& [pk, pv] : value.items())
        out << std::left << std::setw(20) << pk << ' ' << pv.dump() << "\n";
      continue;
    }
    out << std::left << std::setw(20) << key << ' '
        << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continuous wavelet analysis with gammachirp, Morlet and Mexican hat wavelets",
               "gcwt"};
  app.require_subcommand(1);
  Flags f;

  CLI::App* synth = app.add_subcommand("synth", "Synthesize a vowel to a 16-bit WAV file");
  add_common(synth, f);
  add_synth(synth, f);
  synth->add_option("-o,--output", f.output, "Output WAV path (default <vowel>.wav)");

  CLI::App* analyze = app.add_subcommand("analyze", "Scalogram and per-level spectra of a WAV file");
  add_common(analyze, f);
  add_family(analyze, f);
  add_ladder(analyze, f);
  analyze->add_option("-i,--input", f.input, "Input WAV file");
  analyze->add_option("-o,--output-dir", f.output, "Output directory (default .)");
  analyze->add_option("--spectra", f.spectra, "band or approximation");
  analyze->add_flag("--plots", f.plots, "Also write PNG images");

  CLI::App* compare =
      app.add_subcommand("compare", "Formant visibility of gammachirp, Morlet and Mexican hat");
  add_common(compare, f);
  add_synth(compare, f);
  add_ladder(compare, f);
  compare->add_option("--n", f.n, "Gammachirp order");
  compare->add_option("--b", f.b, "Gammachirp bandwidth factor");
  compare->add_option("--c", f.c, "Gammachirp chirp");
  compare->add_option("-i,--input", f.input, "Analyze this WAV instead of synthesizing");
  compare->add_option("-o,--output-dir", f.output, "Also write compare_<vowel>.json/.txt here");
  compare->add_option("--report-levels", f.report_levels, "Levels to report")->delimiter(',');
  compare->add_flag("--json", f.json, "Print JSON instead of the table");

  CLI::App* kinfo = app.add_subcommand("kernel-info", "Energy, admissibility and support of a kernel");
  add_common(kinfo, f);
  add_family(kinfo, f);
  kinfo->add_option("--rate", f.rate, "Sample rate for the discrete checks (Hz)");
  kinfo->add_flag("--json", f.json, "Print JSON");

  try {
    app.parse(argc, argv);
    const RunConfig config = resolve(f);
    if (synth->parsed()) return cmd_synth(config, out, err);
    if (analyze->parsed()) return cmd_analyze(config, out);
    if (compare->parsed()) return cmd_compare(config, f.json, out);
    return cmd_kernel_info(config, f.json, out);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidationError;
  } catch (const ConfigError& e) {
    err << "error: invalid " << e.field() << ": " << e.message() << "\n";
    return kValidationError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kComputationError;
  }
}

}  // namespace gcwt::cli
