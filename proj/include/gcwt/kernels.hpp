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

#include <complex>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

#include "gcwt/fft.hpp"

namespace gcwt {

constexpr double kPi = std::numbers::pi;

// Glasberg & Moore equivalent rectangular bandwidth in Hz.
double erb(double freq_hz);

// Parameters of the gammachirp impulse response
//
//   g(t) = A t^(n-1) exp(-2 pi beta t) exp(j (2 pi f0 t + c ln t + phi)),  t > 0
//
// with beta = b * ERB(f0). `amplitude` is the normalization constant A; use
// normalize() to obtain the unit-energy value.
struct GammachirpParams {
  int order = 4;                    // n
  double bandwidth_factor = 1.019;  // b
  double chirp = -0.5;              // c
  double center_freq = 1000.0;      // f0, Hz
  double phase = 0.0;               // phi, radians
  double amplitude = 1.0;           // A

  double beta() const { return bandwidth_factor * erb(center_freq); }
  // Throws ConfigError naming the first invalid field.
  void validate() const;

  bool operator==(const GammachirpParams&) const = default;
};

// Returns `p` with `amplitude` chosen so that the integral of |g|^2 is one.
// Independent of chirp and phase.
GammachirpParams normalize(GammachirpParams p);

// Closed-form energy of the impulse response: A^2 Gamma(2n-1) / (4 pi beta)^(2n-1).
double gammachirp_energy(const GammachirpParams& p);

std::complex<double> gammachirp_ir(const GammachirpParams& p, double t);

// The gammatone expression A t^(n-1) exp(-2 pi beta t) exp(j (2 pi f0 t + phi)),
// written out independently of gammachirp_ir.
std::complex<double> gammatone_ir(const GammachirpParams& p, double t);

// Fourier transform G(f) = A Gamma(n + jc) e^(j phi) / (2 pi (beta + j (f - f0)))^(n + jc).
std::complex<double> gammachirp_spectrum(const GammachirpParams& p, double f);

// exp(c * atan((f - f0) / beta)): the gain turning |G_T| into |G_C| / a_Gamma(c).
double asymmetric_factor(const GammachirpParams& p, double f);

// a_Gamma(c) = |Gamma(n + jc)| / Gamma(n).
double gamma_gain(const GammachirpParams& p);

// Lanczos approximation of the complex gamma function.
std::complex<double> complex_gamma(std::complex<double> z);

constexpr double kDefaultMorletW0 = 5.0;

// (1 / sqrt(2 pi)) cos(w0 x) exp(-x^2 / 2).
double morlet(double x, double w0 = kDefaultMorletW0);

// Unit-norm Mexican hat 2 / (sqrt(3) pi^(1/4)) (1 - x^2) exp(-x^2 / 2).
double mexican_hat(double x);

// C_n d^n/dx^n exp(-x^2) with C_n giving unit L2 norm. order >= 1.
double gaussian_derivative(double x, int order);

// ---------------------------------------------------------------------------
// Wavelet families. The real-valued families are defined on a dimensionless
// axis; they are mapped to physical time by a scale that puts their spectral
// peak at `center_hz`.

struct Gammachirp {
  GammachirpParams params;
  bool operator==(const Gammachirp&) const = default;
};

struct Morlet {
  double w0 = kDefaultMorletW0;
  double center_hz = 1000.0;
  bool operator==(const Morlet&) const = default;
};

struct MexicanHat {
  double center_hz = 1000.0;
  bool operator==(const MexicanHat&) const = default;
};

struct GaussianDerivative {
  int order = 1;
  double center_hz = 1000.0;
  bool operator==(const GaussianDerivative&) const = default;
};

using WaveletFamily = std::variant<Gammachirp, Morlet, MexicanHat, GaussianDerivative>;

// A gammatone is a gammachirp with c = 0; there is no separate representation.
WaveletFamily make_gammatone(GammachirpParams p);

// "gammachirp", "gammatone" (c == 0), "morlet", "mexican_hat" or
// "gaussian_derivative".
std::string family_name(const WaveletFamily& fam);

void validate(const WaveletFamily& fam);

// Mother wavelet in physical time (seconds). Real families are unit-energy;
// the gammachirp carries its own amplitude.
std::complex<double> evaluate(const WaveletFamily& fam, double t);

// Continuous Fourier transform of evaluate(), Psi(f) = int psi(t) e^(-j 2 pi f t) dt.
std::complex<double> spectrum(const WaveletFamily& fam, double f);

// Time interval [start, end] (seconds) outside of which the mother carries
// less than kTailEnergy of its energy.
struct Support {
  double start = 0.0;
  double end = 0.0;
};
constexpr double kTailEnergy = 1e-12;
Support support(const WaveletFamily& fam);

// Fraction of the mother's energy at |f| > cutoff_hz, from the closed-form
// spectrum.
double energy_above(const WaveletFamily& fam, double cutoff_hz);

// ---------------------------------------------------------------------------

struct SampledWavelet {
  std::vector<Complex> samples;
  double sample_rate = 0.0;
  double t_start = 0.0;      // time of samples[0], a multiple of 1 / sample_rate
  double center_freq = 0.0;  // centroid of the magnitude spectrum on [0, rate/2]

  // sum |x|^2 / sample_rate
  double energy() const;
  double duration() const { return static_cast<double>(samples.size()) / sample_rate; }
};

// Largest fraction of a kernel's energy allowed to fold back across Nyquist.
constexpr double kAliasEnergyTolerance = 1e-3;

// Samples `fam` over its support on the grid k / sample_rate. Throws
// ConfigError("sample_rate", ...) if more than kAliasEnergyTolerance of the
// energy lies above Nyquist.
SampledWavelet sample_mother(const WaveletFamily& fam, double sample_rate);

// Samples (1 / sqrt(a)) psi((t - b) / a) on the same integer grid. a = 1 and
// b = 0 reproduce sample_mother().
SampledWavelet sample_dilated(const WaveletFamily& fam, double dilation, double shift,
                              double sample_rate);

// Centroid of |FFT| over [0, rate/2], zero-padded for resolution.
double spectral_centroid(const std::vector<Complex>& samples, double sample_rate);

struct AdmissibilityReport {
  double c_g = 0.0;         // int_{f_min}^{rate/2} |G(f)|^2 / f df
  double dc_leakage = 0.0;  // |G(0)| / max |G(f)|
  bool is_admissible = false;
};

struct AdmissibilityThresholds {
  double max_dc_leakage = 1e-3;
};

AdmissibilityReport check_admissibility(const SampledWavelet& wavelet,
                                        AdmissibilityThresholds thresholds = {});
AdmissibilityReport check_admissibility(const WaveletFamily& fam, double sample_rate,
                                        AdmissibilityThresholds thresholds = {});

}  // namespace gcwt
