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

#include "gcwt/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <type_traits>

#include "gcwt/errors.hpp"

namespace gcwt {
namespace {

constexpr std::complex<double> kJ{0.0, 1.0};

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

// Odd double factorial (2n-1)!!.
double odd_double_factorial(int n) {
  double r = 1.0;
  for (int k = 2 * n - 1; k > 1; k -= 2) r *= k;
  return r;
}

double gaussian_derivative_norm(int order) {
  return 1.0 / std::sqrt(std::sqrt(kPi / 2.0) * odd_double_factorial(order));
}

double morlet_norm(double w0) {
  return std::sqrt(std::sqrt(kPi) / 2.0 * (1.0 + std::exp(-w0 * w0)) / (2.0 * kPi));
}

// Time scale mapping the dimensionless axis of a real family to seconds so
// that the spectral peak lands at center_hz.
double time_scale(const Morlet& m) { return m.w0 / (2.0 * kPi * m.center_hz); }
double time_scale(const MexicanHat& m) { return std::sqrt(2.0) / (2.0 * kPi * m.center_hz); }
double time_scale(const GaussianDerivative& g) {
  return std::sqrt(2.0 * g.order) / (2.0 * kPi * g.center_hz);
}

// Unit-norm shape functions on the dimensionless axis and their transforms
// H(w) = int h(x) e^(-j w x) dx.
double shape(const Morlet& m, double x) { return morlet(x, m.w0) / morlet_norm(m.w0); }
double shape(const MexicanHat&, double x) { return mexican_hat(x); }
double shape(const GaussianDerivative& g, double x) { return gaussian_derivative(x, g.order); }

std::complex<double> shape_spectrum(const Morlet& m, double w) {
  const double a = w - m.w0;
  const double b = w + m.w0;
  return 0.5 * (std::exp(-a * a / 2.0) + std::exp(-b * b / 2.0)) / morlet_norm(m.w0);
}
std::complex<double> shape_spectrum(const MexicanHat&, double w) {
  return mexican_hat(0.0) * std::sqrt(2.0 * kPi) * w * w * std::exp(-w * w / 2.0);
}
std::complex<double> shape_spectrum(const GaussianDerivative& g, double w) {
  return gaussian_derivative_norm(g.order) * std::pow(kJ * w, g.order) * std::sqrt(kPi) *
         std::exp(-w * w / 4.0);
}

// Smallest half-width X with int_{|x|>X} h^2 <= kTailEnergy * int h^2, for
// an even or odd shape.
template <class Shape>
double shape_half_width(const Shape& s) {
  constexpr double kLimit = 40.0;
  constexpr double kStep = 1e-3;
  const int n = static_cast<int>(kLimit / kStep);
  std::vector<double> tail(n + 1, 0.0);
  double prev = std::pow(shape(s, kLimit), 2);
  for (int i = n - 1; i >= 0; --i) {
    const double cur = std::pow(shape(s, i * kStep), 2);
    tail[i] = tail[i + 1] + 0.5 * (prev + cur) * kStep;
    prev = cur;
  }
  const double total = 2.0 * tail[0];
  int i = n;
  while (i > 0 && 2.0 * tail[i - 1] <= kTailEnergy * total) --i;
  return i * kStep;
}

// Regularized upper incomplete gamma Q(k, x) for integer k.
double upper_gamma_q(int k, double x) {
  double term = 1.0;
  double sum = 1.0;
  for (int i = 1; i < k; ++i) {
    term *= x / i;
    sum += term;
  }
  return std::exp(-x) * sum;
}

// Simpson integration of |Psi|^2 over [cutoff, inf) via f = cutoff / u.
template <class Fn>
double tail_integral(Fn&& power, double cutoff) {
  constexpr int kIntervals = 4000;
  const double h = 1.0 / kIntervals;
  double acc = 0.0;
  for (int i = 1; i <= kIntervals; ++i) {
    const double u = i * h;
    const double w = (i == kIntervals) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    acc += w * power(cutoff / u) * cutoff / (u * u);
  }
  // The u = 0 end point contributes zero for every family here.
  return acc * h / 3.0;
}

}  // namespace

double erb(double freq_hz) {
  if (!(freq_hz >= 0.0)) throw DomainError("erb: frequency must be non-negative");
  return 24.7 * (4.37 * freq_hz / 1000.0 + 1.0);
}

void GammachirpParams::validate() const {
  if (order < 1) throw ConfigError("n", "filter order must be >= 1");
  if (!(bandwidth_factor > 0.0) || !std::isfinite(bandwidth_factor))
    throw ConfigError("b", "bandwidth factor must be positive");
  if (!std::isfinite(chirp)) throw ConfigError("c", "chirp must be finite");
  if (!(center_freq > 0.0) || !std::isfinite(center_freq))
    throw ConfigError("f0", "center frequency must be positive");
  if (!std::isfinite(phase)) throw ConfigError("phi", "phase must be finite");
  if (!(amplitude > 0.0) || !std::isfinite(amplitude))
    throw ConfigError("lambda", "amplitude must be positive");
}

GammachirpParams normalize(GammachirpParams p) {
  p.validate();
  const double k = 2.0 * p.order - 1.0;
  p.amplitude = std::exp(0.5 * (k * std::log(4.0 * kPi * p.beta()) - std::lgamma(k)));
  return p;
}

double gammachirp_energy(const GammachirpParams& p) {
  const double k = 2.0 * p.order - 1.0;
  return p.amplitude * p.amplitude *
         std::exp(std::lgamma(k) - k * std::log(4.0 * kPi * p.beta()));
}

std::complex<double> gammachirp_ir(const GammachirpParams& p, double t) {
  if (t <= 0.0) return {0.0, 0.0};
  const double magnitude =
      p.amplitude * std::pow(t, p.order - 1) * std::exp(-2.0 * kPi * p.beta() * t);
  const double arg = 2.0 * kPi * p.center_freq * t + p.chirp * std::log(t) + p.phase;
  return std::polar(magnitude, arg);
}

std::complex<double> gammatone_ir(const GammachirpParams& p, double t) {
  if (t <= 0.0) return {0.0, 0.0};
  const double magnitude =
      p.amplitude * std::pow(t, p.order - 1) * std::exp(-2.0 * kPi * p.beta() * t);
  const double arg = 2.0 * kPi * p.center_freq * t + p.phase;
  return {magnitude * std::cos(arg), magnitude * std::sin(arg)};
}

std::complex<double> complex_gamma(std::complex<double> z) {
  static constexpr std::array<double, 9> kCoeffs = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  constexpr double kG = 7.0;
  if (z.real() < 0.5) return kPi / (std::sin(kPi * z) * complex_gamma(1.0 - z));
  z -= 1.0;
  std::complex<double> x = kCoeffs[0];
  for (std::size_t i = 1; i < kCoeffs.size(); ++i) x += kCoeffs[i] / (z + static_cast<double>(i));
  const std::complex<double> t = z + kG + 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

std::complex<double> gammachirp_spectrum(const GammachirpParams& p, double f) {
  const std::complex<double> s = 2.0 * kPi * std::complex<double>(p.beta(), f - p.center_freq);
  const std::complex<double> z(p.order, p.chirp);
  const std::complex<double> alpha = p.amplitude * complex_gamma(z) * std::polar(1.0, p.phase);
  return alpha * std::exp(-z * std::log(s));
}

double asymmetric_factor(const GammachirpParams& p, double f) {
  return std::exp(p.chirp * std::atan((f - p.center_freq) / p.beta()));
}

double gamma_gain(const GammachirpParams& p) {
  return std::abs(complex_gamma({static_cast<double>(p.order), p.chirp})) / std::tgamma(p.order);
}

double morlet(double x, double w0) {
  return std::cos(w0 * x) * std::exp(-x * x / 2.0) / std::sqrt(2.0 * kPi);
}

double mexican_hat(double x) {
  const double c = 2.0 / (std::sqrt(3.0) * std::pow(kPi, 0.25));
  return c * (1.0 - x * x) * std::exp(-x * x / 2.0);
}

double gaussian_derivative(double x, int order) {
  if (order < 1) throw DomainError("gaussian_derivative: order must be >= 1");
  // d^n/dx^n exp(-x^2) = (-1)^n H_n(x) exp(-x^2), physicists' Hermite H_n.
  double h_prev = 1.0;
  double h = 2.0 * x;
  for (int k = 1; k < order; ++k) {
    const double next = 2.0 * x * h - 2.0 * k * h_prev;
    h_prev = h;
    h = next;
  }
  const double sign = (order % 2 == 0) ? 1.0 : -1.0;
  return gaussian_derivative_norm(order) * sign * h * std::exp(-x * x);
}

WaveletFamily make_gammatone(GammachirpParams p) {
  p.chirp = 0.0;
  return Gammachirp{p};
}

std::string family_name(const WaveletFamily& fam) {
  return std::visit(Overloaded{
                        [](const Gammachirp& g) -> std::string {
                          return g.params.chirp == 0.0 ? "gammatone" : "gammachirp";
                        },
                        [](const Morlet&) -> std::string { return "morlet"; },
                        [](const MexicanHat&) -> std::string { return "mexican_hat"; },
                        [](const GaussianDerivative&) -> std::string {
                          return "gaussian_derivative";
                        },
                    },
                    fam);
}

void validate(const WaveletFamily& fam) {
  auto check_center = [](double hz) {
    if (!(hz > 0.0) || !std::isfinite(hz))
      throw ConfigError("center_hz", "center frequency must be positive");
  };
  std::visit(Overloaded{
                 [](const Gammachirp& g) { g.params.validate(); },
                 [&](const Morlet& m) {
                   if (!(m.w0 > 0.0) || !std::isfinite(m.w0))
                     throw ConfigError("w0", "Morlet w0 must be positive");
                   check_center(m.center_hz);
                 },
                 [&](const MexicanHat& m) { check_center(m.center_hz); },
                 [&](const GaussianDerivative& g) {
                   if (g.order < 1) throw ConfigError("order", "derivative order must be >= 1");
                   check_center(g.center_hz);
                 },
             },
             fam);
}

std::complex<double> evaluate(const WaveletFamily& fam, double t) {
  return std::visit(Overloaded{
                        [t](const Gammachirp& g) { return gammachirp_ir(g.params, t); },
                        [t](const auto& real) -> std::complex<double> {
                          const double tau = time_scale(real);
                          return shape(real, t / tau) / std::sqrt(tau);
                        },
                    },
                    fam);
}

std::complex<double> spectrum(const WaveletFamily& fam, double f) {
  return std::visit(Overloaded{
                        [f](const Gammachirp& g) { return gammachirp_spectrum(g.params, f); },
                        [f](const auto& real) {
                          const double tau = time_scale(real);
                          return std::sqrt(tau) * shape_spectrum(real, 2.0 * kPi * f * tau);
                        },
                    },
                    fam);
}

Support support(const WaveletFamily& fam) {
  return std::visit(Overloaded{
                        [](const Gammachirp& g) {
                          const int k = 2 * g.params.order - 1;
                          double lo = 0.0;
                          double hi = 1.0;
                          while (upper_gamma_q(k, hi) > kTailEnergy) hi *= 2.0;
                          for (int i = 0; i < 200; ++i) {
                            const double mid = 0.5 * (lo + hi);
                            (upper_gamma_q(k, mid) > kTailEnergy ? lo : hi) = mid;
                          }
                          return Support{0.0, hi / (4.0 * kPi * g.params.beta())};
                        },
                        [](const auto& real) {
                          const double half = shape_half_width(real) * time_scale(real);
                          return Support{-half, half};
                        },
                    },
                    fam);
}

double energy_above(const WaveletFamily& fam, double cutoff_hz) {
  if (!(cutoff_hz > 0.0)) throw DomainError("energy_above: cutoff must be positive");
  auto power = [&](double f) { return std::norm(spectrum(fam, f)); };
  auto power_neg = [&](double f) { return std::norm(spectrum(fam, -f)); };
  const double total = std::visit(
      Overloaded{[](const Gammachirp& g) { return gammachirp_energy(g.params); },
                 [](const auto&) { return 1.0; }},
      fam);
  return (tail_integral(power, cutoff_hz) + tail_integral(power_neg, cutoff_hz)) / total;
}

double SampledWavelet::energy() const {
  double acc = 0.0;
  for (const auto& s : samples) acc += std::norm(s);
  return acc / sample_rate;
}

SampledWavelet sample_mother(const WaveletFamily& fam, double sample_rate) {
  return sample_dilated(fam, 1.0, 0.0, sample_rate);
}

SampledWavelet sample_dilated(const WaveletFamily& fam, double dilation, double shift,
                              double sample_rate) {
  validate(fam);
  if (!(sample_rate > 0.0) || !std::isfinite(sample_rate))
    throw ConfigError("sample_rate", "sample rate must be positive");
  if (!(dilation > 0.0) || !std::isfinite(dilation))
    throw DomainError("dilation must be positive");
  const double aliased = energy_above(fam, dilation * sample_rate / 2.0);
  if (aliased > kAliasEnergyTolerance)
    throw ConfigError("sample_rate", "kernel aliases: " + std::to_string(aliased) +
                                         " of its energy lies above Nyquist");

  const Support sup = support(fam);
  const auto k_lo = static_cast<long long>(std::floor((shift + dilation * sup.start) * sample_rate));
  const auto k_hi = static_cast<long long>(std::ceil((shift + dilation * sup.end) * sample_rate));
  const double gain = 1.0 / std::sqrt(dilation);

  SampledWavelet out;
  out.sample_rate = sample_rate;
  out.t_start = static_cast<double>(k_lo) / sample_rate;
  out.samples.reserve(static_cast<std::size_t>(k_hi - k_lo + 1));
  for (long long k = k_lo; k <= k_hi; ++k) {
    const double t = static_cast<double>(k) / sample_rate;
    out.samples.push_back(gain * evaluate(fam, (t - shift) / dilation));
  }
  out.center_freq = spectral_centroid(out.samples, sample_rate);
  return out;
}

double spectral_centroid(const std::vector<Complex>& samples, double sample_rate) {
  const std::size_t n = std::max<std::size_t>(4096, 8 * next_pow2(samples.size()));
  const auto spec = fft(std::span<const Complex>(samples), n);
  double weighted = 0.0;
  double total = 0.0;
  for (std::size_t k = 0; k <= n / 2; ++k) {
    const double mag = std::abs(spec[k]);
    weighted += mag * static_cast<double>(k) * sample_rate / static_cast<double>(n);
    total += mag;
  }
  return total > 0.0 ? weighted / total : 0.0;
}

AdmissibilityReport check_admissibility(const SampledWavelet& wavelet,
                                        AdmissibilityThresholds thresholds) {
  const std::size_t n = std::max<std::size_t>(4096, 8 * next_pow2(wavelet.samples.size()));
  const auto spec = fft(std::span<const Complex>(wavelet.samples), n);
  const double df = wavelet.sample_rate / static_cast<double>(n);
  const double dt = 1.0 / wavelet.sample_rate;

  double peak = 0.0;
  for (const auto& v : spec) peak = std::max(peak, std::abs(v) * dt);

  AdmissibilityReport report;
  for (std::size_t k = 1; k <= n / 2; ++k) {
    const double f = static_cast<double>(k) * df;
    report.c_g += std::norm(spec[k] * dt) / f * df;
  }
  report.dc_leakage = peak > 0.0 ? std::abs(spec[0]) * dt / peak : 0.0;
  report.is_admissible = std::isfinite(report.c_g) && report.c_g > 0.0 &&
                         report.dc_leakage < thresholds.max_dc_leakage;
  return report;
}

AdmissibilityReport check_admissibility(const WaveletFamily& fam, double sample_rate,
                                        AdmissibilityThresholds thresholds) {
  return check_admissibility(sample_mother(fam, sample_rate), thresholds);
}

}  // namespace gcwt
