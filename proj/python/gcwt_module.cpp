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


#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <string>
#include <vector>

#include "gcwt/analysis.hpp"
#include "gcwt/config.hpp"
#include "gcwt/cwt.hpp"
#include "gcwt/errors.hpp"
#include "gcwt/kernels.hpp"
#include "gcwt/scalespace.hpp"
#include "gcwt/serialize.hpp"
#include "gcwt/synth.hpp"
#include "gcwt/wav.hpp"

namespace py = pybind11;

namespace gcwt {
namespace {

using RealArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

std::vector<double> ToVector(const RealArray& a) {
  if (a.ndim() != 1) throw py::value_error("expected a 1-D array");
  return {a.data(), a.data() + a.size()};
}

RealArray ToArray(const std::vector<double>& v) {
  RealArray a(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), a.mutable_data());
  return a;
}

py::array_t<Complex> ToArray(const std::vector<Complex>& v) {
  py::array_t<Complex> a(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), a.mutable_data());
  return a;
}

py::array_t<Complex> Coefficients(const Scalogram& s) {
  py::array_t<Complex> a({static_cast<py::ssize_t>(s.num_levels()),
                          static_cast<py::ssize_t>(s.num_samples())});
  auto view = a.mutable_unchecked<2>();
  for (std::size_t m = 0; m < s.num_levels(); ++m)
    for (std::size_t i = 0; i < s.num_samples(); ++i)
      view(static_cast<py::ssize_t>(m), static_cast<py::ssize_t>(i)) = s.coefficients[m][i];
  return a;
}

py::tuple SpectrumTuple(const LevelSpectrum& s) {
  return py::make_tuple(ToArray(s.freqs), ToArray(s.log_magnitude));
}

template <typename Fn>
py::array_t<Complex> MapComplex(const RealArray& x, Fn fn) {
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(x.size()));
  for (double v : ToVector(x)) out.push_back(fn(v));
  return ToArray(out);
}

ComparisonReport SingleFamilyReport(FormantReport r) {
  ComparisonReport c;
  c.vowel = r.vowel;
  for (const auto& lr : r.per_level) {
    std::array<int, 3> n{};
    for (std::size_t j = 0; j < 3; ++j) n[j] = lr.presence[j] == Presence::kDetected;
    c.agreement.push_back(n);
  }
  c.families.push_back(std::move(r));
  return c;
}

}  // namespace
}  // namespace gcwt

PYBIND11_MODULE(_gcwt, m) {
  using namespace gcwt;
  m.doc() = "Gammachirp continuous wavelet transform";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  m.def("erb", &erb, py::arg("freq_hz"));

  py::class_<GammachirpParams>(m, "GammachirpParams")
      .def(py::init([](int n, double b, double c, double f0, double phi, double amplitude) {
             GammachirpParams p;
             p.order = n;
             p.bandwidth_factor = b;
             p.chirp = c;
             p.center_freq = f0;
             p.phase = phi;
             p.amplitude = amplitude;
             return p;
           }),
           py::arg("n") = 4, py::arg("b") = 1.019, py::arg("c") = -0.5, py::arg("f0") = 1000.0,
           py::arg("phi") = 0.0, py::arg("amplitude") = 1.0)
      .def_readwrite("n", &GammachirpParams::order)
      .def_readwrite("b", &GammachirpParams::bandwidth_factor)
      .def_readwrite("c", &GammachirpParams::chirp)
      .def_readwrite("f0", &GammachirpParams::center_freq)
      .def_readwrite("phi", &GammachirpParams::phase)
      .def_readwrite("amplitude", &GammachirpParams::amplitude)
      .def_property_readonly("beta", &GammachirpParams::beta)
      .def("validate", &GammachirpParams::validate)
      .def(py::self == py::self);

  m.def("normalize", &normalize, py::arg("params"));
  m.def("gammachirp_energy", &gammachirp_energy, py::arg("params"));
  m.def("gammachirp_ir", [](const GammachirpParams& p, const RealArray& t) {
    return MapComplex(t, [&](double v) { return gammachirp_ir(p, v); });
  }, py::arg("params"), py::arg("t"));
  m.def("gammachirp_spectrum", [](const GammachirpParams& p, const RealArray& f) {
    return MapComplex(f, [&](double v) { return gammachirp_spectrum(p, v); });
  }, py::arg("params"), py::arg("f"));

  py::class_<Gammachirp>(m, "Gammachirp")
      .def(py::init([](const GammachirpParams& p) { return Gammachirp{p}; }),
           py::arg("params") = GammachirpParams{})
      .def_readwrite("params", &Gammachirp::params);
  py::class_<Morlet>(m, "Morlet")
      .def(py::init([](double w0, double center_hz) { return Morlet{w0, center_hz}; }),
           py::arg("w0") = kDefaultMorletW0, py::arg("center_hz") = 1000.0)
      .def_readwrite("w0", &Morlet::w0)
      .def_readwrite("center_hz", &Morlet::center_hz);
  py::class_<MexicanHat>(m, "MexicanHat")
      .def(py::init([](double center_hz) {
             MexicanHat h;
             h.center_hz = center_hz;
             return h;
           }),
           py::arg("center_hz") = 1000.0)
      .def_readwrite("center_hz", &MexicanHat::center_hz);
  py::class_<GaussianDerivative>(m, "GaussianDerivative")
      .def(py::init([](int order, double center_hz) {
             GaussianDerivative g;
             g.order = order;
             g.center_hz = center_hz;
             return g;
           }),
           py::arg("order") = 1, py::arg("center_hz") = 1000.0)
      .def_readwrite("order", &GaussianDerivative::order)
      .def_readwrite("center_hz", &GaussianDerivative::center_hz);

  m.def("make_gammatone", &make_gammatone, py::arg("params") = GammachirpParams{});
  m.def("family_name", &family_name, py::arg("family"));
  m.def("family_spectrum", [](const WaveletFamily& fam, const RealArray& f) {
    return MapComplex(f, [&](double v) { return spectrum(fam, v); });
  }, py::arg("family"), py::arg("f"));

  m.def("sample_mother", [](const WaveletFamily& fam, double rate) {
    const SampledWavelet w = sample_mother(fam, rate);
    py::dict d;
    d["samples"] = ToArray(w.samples);
    d["sample_rate"] = w.sample_rate;
    d["t_start"] = w.t_start;
    d["center_freq"] = w.center_freq;
    d["energy"] = w.energy();
    return d;
  }, py::arg("family"), py::arg("sample_rate"));
  m.def("check_admissibility", [](const WaveletFamily& fam, double rate) {
    const AdmissibilityReport r = check_admissibility(fam, rate);
    py::dict d;
    d["c_g"] = r.c_g;
    d["dc_leakage"] = r.dc_leakage;
    d["admissible"] = r.is_admissible;
    return d;
  }, py::arg("family"), py::arg("sample_rate"));

  py::class_<ScaleLadder>(m, "ScaleLadder")
      .def(py::init([](double a0, double b0, int num_levels, std::optional<double> top) {
             ScaleLadder l;
             l.dilation_base = a0;
             l.translation_base = b0;
             l.num_levels = num_levels;
             if (top) l.top_center_freq = *top;
             return l;
           }),
           py::arg("a0") = 1.13, py::arg("b0") = 1.0, py::arg("num_levels") = 23,
           py::arg("top_center_freq") = py::none())
      .def_readwrite("a0", &ScaleLadder::dilation_base)
      .def_readwrite("b0", &ScaleLadder::translation_base)
      .def_readwrite("num_levels", &ScaleLadder::num_levels)
      .def_readwrite("top_center_freq", &ScaleLadder::top_center_freq)
      .def("center_freq", &ScaleLadder::center_freq, py::arg("level"))
      .def("validate", &ScaleLadder::validate);

  py::class_<VowelSpec>(m, "VowelSpec")
      .def(py::init<>())
      .def_readwrite("label", &VowelSpec::label)
      .def_readwrite("pitch", &VowelSpec::pitch)
      .def_readwrite("formants", &VowelSpec::formants)
      .def_readwrite("bandwidths", &VowelSpec::bandwidths)
      .def_readwrite("duration", &VowelSpec::duration)
      .def_readwrite("sample_rate", &VowelSpec::sample_rate)
      .def("validate", &VowelSpec::validate);
  m.def("builtin_vowel", &builtin_vowel, py::arg("label"));
  m.def("synthesize", [](const VowelSpec& spec) { return ToArray(synthesize(spec).samples); },
        py::arg("spec"));

  py::class_<Scalogram>(m, "Scalogram")
      .def_property_readonly("coefficients", &Coefficients)
      .def_property_readonly("level_center_freqs",
                             [](const Scalogram& s) { return ToArray(s.level_center_freqs); })
      .def_readonly("sample_rate", &Scalogram::sample_rate)
      .def_readonly("family", &Scalogram::family)
      .def_property_readonly("num_levels", &Scalogram::num_levels)
      .def_property_readonly("num_samples", &Scalogram::num_samples)
      .def("is_edge", &Scalogram::is_edge, py::arg("level"), py::arg("index"));

  m.def("cwt", [](const RealArray& x, double rate, const WaveletFamily& fam,
                  const ScaleLadder& ladder, unsigned threads) {
    const Signal sig{ToVector(x), rate};
    py::gil_scoped_release release;
    return cwt(sig, fam, ladder, CwtOptions{threads});
  }, py::arg("samples"), py::arg("sample_rate"), py::arg("family"),
        py::arg("ladder") = ScaleLadder{}, py::arg("threads") = 0u);
  m.def("log_spectrum", [](const RealArray& x, double rate) {
    const std::vector<double> v = ToVector(x);
    return SpectrumTuple(log_spectrum(v, rate));
  }, py::arg("samples"), py::arg("sample_rate"));
  m.def("level_log_spectrum", [](const Scalogram& s, int level) {
    return SpectrumTuple(level_log_spectrum(s, level));
  }, py::arg("scalogram"), py::arg("level"));
  m.def("approximation", [](const Scalogram& s, int level) {
    return ToArray(approximation(s, level).samples);
  }, py::arg("scalogram"), py::arg("level"));

  m.def("formant_report_json", [](const RealArray& x, const WaveletFamily& fam,
                                  const ScaleLadder& ladder, const VowelSpec& spec,
                                  std::vector<int> levels, unsigned threads) {
    AnalysisOptions opts;
    opts.report_levels = std::move(levels);
    opts.cwt.threads = threads;
    const Signal sig{ToVector(x), spec.sample_rate};
    return report_json(SingleFamilyReport(formant_report(sig, fam, ladder, spec, opts)));
  }, py::arg("samples"), py::arg("family"), py::arg("ladder"), py::arg("spec"),
        py::arg("report_levels") = std::vector<int>{}, py::arg("threads") = 0u);
  m.def("compare_families_json", [](const VowelSpec& spec, const ScaleLadder& ladder,
                                    const GammachirpParams& gammachirp, std::vector<int> levels,
                                    unsigned threads, bool table) {
    AnalysisOptions opts;
    opts.report_levels = std::move(levels);
    opts.cwt.threads = threads;
    opts.gammachirp = gammachirp;
    const ComparisonReport r = compare_families(spec, ladder, opts);
    return table ? report_table(r) : report_json(r);
  }, py::arg("spec"), py::arg("ladder"), py::arg("gammachirp"), py::arg("report_levels"),
        py::arg("threads"), py::arg("table"));

  m.def("read_wav", [](const std::string& path) {
    const Signal s = read_wav(path);
    return py::make_tuple(ToArray(s.samples), s.sample_rate);
  }, py::arg("path"));
  m.def("write_wav", [](const std::string& path, const RealArray& x, double rate) {
    return write_wav(path, Signal{ToVector(x), rate});
  }, py::arg("path"), py::arg("samples"), py::arg("sample_rate"));

  m.def("normalize_config_json", [](const std::string& text) {
    const RunConfig c = run_config_from_json(text);
    c.validate();
    return to_json(c);
  }, py::arg("text"));
}
