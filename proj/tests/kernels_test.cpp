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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "gcwt/errors.hpp"
#include "oracles.hpp"

namespace gcwt {
namespace {

using testing::cd;

GammachirpParams Normalized(int n = 4, double c = GammachirpParams{}.chirp) {
  GammachirpParams p;
  p.order = n;
  p.chirp = c;
  return normalize(p);
}

double QuadratureEnergy(const GammachirpParams& p) {
  return testing::simpson([&](double t) { return std::norm(gammachirp_ir(p, t)); }, 0.0, 0.2,
                          400000);
}

TEST(ErbTest, AffineFormula) {
  EXPECT_DOUBLE_EQ(erb(0.0), 24.7);
  EXPECT_NEAR(erb(1000.0), 132.639, 1e-9);
  EXPECT_NEAR(erb(2000.0), 240.578, 1e-9);
  EXPECT_LT(erb(500.0), erb(501.0));
}

TEST(ErbTest, NegativeFrequencyIsDomainError) { EXPECT_THROW(erb(-1.0), DomainError); }

TEST(GammachirpParamsTest, BetaFollowsCenterFrequency) {
  GammachirpParams p;
  p.center_freq = 2000.0;
  EXPECT_DOUBLE_EQ(p.beta(), 1.019 * erb(2000.0));
}

TEST(GammachirpParamsTest, ValidationNamesTheField) {
  GammachirpParams p;
  p.order = 0;
  try {
    p.validate();
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "n");
  }
  p = GammachirpParams{};
  p.bandwidth_factor = -1.0;
  EXPECT_THROW(p.validate(), ConfigError);
  p = GammachirpParams{};
  p.center_freq = 0.0;
  EXPECT_THROW(p.validate(), ConfigError);
}

TEST(GammachirpIrTest, ZeroForNonPositiveTime) {
  const auto p = Normalized();
  EXPECT_EQ(gammachirp_ir(p, -0.001), cd(0.0));
  EXPECT_EQ(gammachirp_ir(p, 0.0), cd(0.0));
}

TEST(GammachirpIrTest, MatchesDefinition) {
  GammachirpParams p = Normalized(3, 1.7);
  p.phase = 0.4;
  for (double t : {1e-5, 1e-4, 1e-3, 5e-3, 2e-2}) {
    const cd ref = testing::gammachirp_reference(p.amplitude, 3, p.bandwidth_factor, 1.7,
                                                 p.center_freq, 0.4, t);
    EXPECT_LT(std::abs(gammachirp_ir(p, t) - ref), 1e-12 * std::abs(ref)) << t;
  }
}

TEST(GammachirpIrTest, ReducesToGammatoneAtZeroChirp) {
  GammachirpParams p = Normalized(4, 0.0);
  for (int k = 1; k < 2000; ++k) {
    const double t = k * 1.3e-5;
    EXPECT_EQ(gammachirp_ir(p, t), gammatone_ir(p, t)) << t;
  }
}

TEST(GammachirpIrTest, MagnitudeIndependentOfChirpAndPhase) {
  GammachirpParams a = Normalized(4, 0.0);
  GammachirpParams b = a;
  b.chirp = 3.0;
  b.phase = 1.1;
  for (int k = 1; k < 500; ++k) {
    const double t = k * 5e-5;
    EXPECT_NEAR(std::abs(gammachirp_ir(a, t)), std::abs(gammachirp_ir(b, t)),
                1e-12 * std::abs(gammachirp_ir(a, t)));
  }
}

TEST(NormalizeTest, UnitEnergyByQuadrature) {
  for (int n : {1, 2, 3, 4, 5}) {
    const auto p = Normalized(n);
    if (n > 1) EXPECT_NEAR(QuadratureEnergy(p), 1.0, 1e-6) << n;
    EXPECT_NEAR(gammachirp_energy(p), 1.0, 1e-12) << n;
  }
}

TEST(NormalizeTest, ClosedFormEnergyMatchesQuadrature) {
  for (int n : {2, 3, 4}) {
    GammachirpParams p;
    p.order = n;
    p.amplitude = 1e6;
    const double quad = QuadratureEnergy(p);
    EXPECT_NEAR(gammachirp_energy(p) / quad, 1.0, 1e-6) << n;
  }
}

TEST(NormalizeTest, DoublingAmplitudeQuadruplesEnergy) {
  GammachirpParams p = Normalized();
  p.amplitude *= 2.0;
  EXPECT_NEAR(QuadratureEnergy(p), 4.0, 4e-4);
}

TEST(NormalizeTest, IndependentOfChirp) {
  EXPECT_EQ(Normalized(4, 0.0).amplitude, Normalized(4, 5.0).amplitude);
}

TEST(NormalizeTest, UsesGammaOfTwoNMinusOne) {
  // (4 pi beta)^(2n-1) / Gamma(2n-1), Gamma(7) = 6! = 720.
  const auto p = Normalized(4);
  const double expect = std::sqrt(std::pow(4.0 * kPi * p.beta(), 7) / 720.0);
  EXPECT_NEAR(p.amplitude / expect, 1.0, 1e-12);
}

TEST(ComplexGammaTest, RealAxisMatchesTgamma) {
  for (double x : {0.5, 1.0, 2.5, 4.0, 7.3}) {
    const cd g = complex_gamma(cd(x, 0.0));
    EXPECT_NEAR(g.real() / std::tgamma(x), 1.0, 1e-13) << x;
    EXPECT_NEAR(g.imag(), 0.0, 1e-13 * std::tgamma(x));
  }
}

TEST(ComplexGammaTest, ModulusMatchesSinhIdentity) {
  for (int n : {1, 2, 4}) {
    for (double c : {-3.0, -0.5, 0.7, 2.96}) {
      const double got = std::abs(complex_gamma(cd(n, c))) / std::tgamma(n);
      EXPECT_NEAR(got / testing::gamma_gain_identity(n, c), 1.0, 1e-12) << n << " " << c;
    }
  }
}

TEST(GammachirpSpectrumTest, FactorizesIntoGainAndAsymmetry) {
  for (double c : {-3.0, -1.0, 1.0}) {
    const auto pc = Normalized(4, c);
    auto pt = pc;
    pt.chirp = 0.0;
    for (int k = 0; k < 1024; ++k) {
      const double f = 8000.0 * k / 1023.0;
      const double ratio =
          std::abs(gammachirp_spectrum(pc, f)) / std::abs(gammachirp_spectrum(pt, f));
      const double expect = testing::gamma_gain_identity(4, c) *
                            std::exp(c * std::atan((f - pc.center_freq) / pc.beta()));
      EXPECT_NEAR(ratio / expect, 1.0, 1e-6) << c << " " << f;
    }
  }
}

TEST(GammachirpSpectrumTest, ZeroChirpHasUnitRatio) {
  const auto p = Normalized(4, 0.0);
  EXPECT_DOUBLE_EQ(gamma_gain(p), 1.0);
  for (double f : {0.0, 500.0, 1000.0, 3000.0}) EXPECT_DOUBLE_EQ(asymmetric_factor(p, f), 1.0);
}

TEST(GammachirpSpectrumTest, MatchesTransformOfSampledResponse) {
  const auto p = Normalized();
  constexpr double kRate = 262144.0;
  std::vector<cd> x(32768);
  for (std::size_t k = 0; k < x.size(); ++k) x[k] = gammachirp_ir(p, k / kRate);
  for (int k = 0; k <= 200; ++k) {
    const double f = 40.0 * k;
    const double closed = std::abs(gammachirp_spectrum(p, f));
    EXPECT_NEAR(std::abs(testing::dtft(x, kRate, 0.0, f)) / closed, 1.0, 1e-3) << f;
  }
}

TEST(GammachirpSpectrumTest, SampledMotherAt16kHzMatchesClosedForm) {
  // At 16 kHz the tail folds back across Nyquist, so the check is made
  // against the spectral peak.
  const WaveletFamily fam = Gammachirp{Normalized()};
  const SampledWavelet w = sample_mother(fam, 16000.0);
  double peak = 0.0;
  for (int k = 0; k <= 800; ++k) peak = std::max(peak, std::abs(spectrum(fam, 10.0 * k)));
  for (int k = 0; k <= 800; ++k) {
    const double f = 10.0 * k;
    const double diff =
        std::abs(std::abs(testing::dtft(w.samples, 16000.0, w.t_start, f)) - std::abs(spectrum(fam, f)));
    EXPECT_LT(diff, 1e-3 * peak) << f;
  }
}

TEST(AsymmetricFactorTest, ExamplesAndBounds) {
  auto p = Normalized(4, -2.0);
  EXPECT_DOUBLE_EQ(asymmetric_factor(p, p.center_freq), 1.0);
  EXPECT_NEAR(asymmetric_factor(p, 1e12), std::exp(-kPi), 1e-9);
  EXPECT_NEAR(std::exp(-kPi), 0.0432, 1e-4);
  double prev = asymmetric_factor(p, 0.0);
  for (int k = 1; k <= 100; ++k) {
    const double cur = asymmetric_factor(p, 100.0 * k);
    EXPECT_LT(cur, prev);
    EXPECT_GT(cur, std::exp(-2.0 * kPi / 2.0));
    EXPECT_LT(cur, std::exp(2.0 * kPi / 2.0));
    prev = cur;
  }
}

TEST(GammachirpSpectrumTest, NegativeChirpDropsOffOnHighSide) {
  const auto p = Normalized(4, -2.96);
  const double f0 = p.center_freq;
  for (int k = 1; k <= 40; ++k) {
    const double d = 4.0 * p.beta() * k / 40.0;
    EXPECT_LT(std::abs(gammachirp_spectrum(p, f0 + d)), std::abs(gammachirp_spectrum(p, f0 - d)))
        << d;
  }
}

TEST(MorletTest, Examples) {
  EXPECT_NEAR(morlet(0.0), 1.0 / std::sqrt(2.0 * kPi), 1e-15);
  EXPECT_NEAR(morlet(0.0), 0.398942, 1e-6);
  for (double x : {0.3, 1.0, 2.7}) EXPECT_EQ(morlet(x), morlet(-x));
  EXPECT_LT(std::abs(morlet(10.0)), 1e-20);
}

TEST(MexicanHatTest, Examples) {
  EXPECT_NEAR(mexican_hat(1.0), 0.0, 1e-16);
  EXPECT_NEAR(mexican_hat(-1.0), 0.0, 1e-16);
  EXPECT_NEAR(mexican_hat(0.0), 0.867325, 1e-6);
  EXPECT_NEAR(testing::simpson([](double x) { return mexican_hat(x) * mexican_hat(x); }, -20.0,
                               20.0, 40000),
              1.0, 1e-10);
  EXPECT_NEAR(testing::simpson(mexican_hat, -20.0, 20.0, 40000), 0.0, 1e-8);
}

TEST(GaussianDerivativeTest, ParityAndZero) {
  EXPECT_EQ(gaussian_derivative(0.0, 1), 0.0);
  for (int n : {1, 2, 3, 4})
    for (double x : {0.4, 1.3})
      EXPECT_NEAR(gaussian_derivative(-x, n), (n % 2 ? -1.0 : 1.0) * gaussian_derivative(x, n),
                  1e-15);
}

TEST(GaussianDerivativeTest, OrderTwoIsMexicanHatShape) {
  const double g0 = gaussian_derivative(0.0, 2);
  const double m0 = mexican_hat(0.0);
  for (int k = -400; k <= 400; ++k) {
    const double u = k * 0.01;
    EXPECT_NEAR(gaussian_derivative(u / std::sqrt(2.0), 2) / g0, mexican_hat(u) / m0, 1e-6) << u;
  }
}

TEST(GaussianDerivativeTest, UnitEnergy) {
  for (int n : {1, 2, 3, 4}) {
    const double e = testing::simpson(
        [n](double x) { return std::pow(gaussian_derivative(x, n), 2); }, -15.0, 15.0, 60000);
    EXPECT_NEAR(e, 1.0, 1e-6) << n;
  }
}

TEST(GaussianDerivativeTest, OrderZeroIsDomainError) {
  EXPECT_THROW(gaussian_derivative(0.3, 0), DomainError);
}

TEST(FamilyTest, GammatoneIsGammachirpWithZeroChirp) {
  GammachirpParams p = Normalized(4, 1.5);
  const WaveletFamily tone = make_gammatone(p);
  p.chirp = 0.0;
  EXPECT_EQ(tone, WaveletFamily(Gammachirp{p}));
  EXPECT_EQ(family_name(tone), "gammatone");
  EXPECT_EQ(family_name(WaveletFamily(Gammachirp{Normalized()})), "gammachirp");
  EXPECT_EQ(family_name(WaveletFamily(Morlet{})), "morlet");
  EXPECT_EQ(family_name(WaveletFamily(MexicanHat{})), "mexican_hat");
  EXPECT_EQ(family_name(WaveletFamily(GaussianDerivative{})), "gaussian_derivative");
}

TEST(FamilyTest, ClosedFormSpectraMatchSampledTransforms) {
  const std::vector<WaveletFamily> families = {Morlet{}, MexicanHat{}, GaussianDerivative{3}};
  for (const auto& fam : families) {
    const SampledWavelet w = sample_mother(fam, 64000.0);
    for (double f : {200.0, 700.0, 1000.0, 1500.0, 3000.0}) {
      const cd numeric = testing::dtft(w.samples, w.sample_rate, w.t_start, f);
      EXPECT_LT(std::abs(numeric - spectrum(fam, f)), 1e-6 * std::abs(spectrum(fam, 1000.0)))
          << family_name(fam) << " " << f;
    }
  }
}

TEST(SampleMotherTest, GammachirpCenteredNearOneKilohertz) {
  const SampledWavelet w = sample_mother(Gammachirp{Normalized()}, 16000.0);
  EXPECT_GE(w.center_freq, 900.0);
  EXPECT_LE(w.center_freq, 1100.0);
  EXPECT_NEAR(testing::magnitude_centroid(w.samples, 16000.0, 4096), w.center_freq, 1.0);
  EXPECT_EQ(w.t_start, 0.0);
}

TEST(SampleMotherTest, NormalizedFamiliesHaveUnitEnergy) {
  const std::vector<WaveletFamily> families = {Gammachirp{Normalized()},
                                               make_gammatone(Normalized(4, 0.0)), Morlet{},
                                               MexicanHat{}, GaussianDerivative{1},
                                               GaussianDerivative{4}};
  for (const auto& fam : families) {
    const SampledWavelet w = sample_mother(fam, 32000.0);
    EXPECT_NEAR(w.energy(), 1.0, 1e-4) << family_name(fam);
  }
}

TEST(SampleMotherTest, EnergyStableUnderRateDoubling) {
  const std::vector<WaveletFamily> families = {Gammachirp{Normalized()}, Morlet{}};
  for (const auto& fam : families) {
    const double e1 = sample_mother(fam, 16000.0).energy();
    const double e2 = sample_mother(fam, 32000.0).energy();
    EXPECT_LT(std::abs(e1 - e2), 1e-4) << family_name(fam);
  }
}

TEST(SampleMotherTest, TruncatedTailIsNegligible) {
  const WaveletFamily fam = Gammachirp{Normalized()};
  const Support s = support(fam);
  const double tail = testing::simpson(
      [&](double t) { return std::norm(evaluate(fam, t)); }, s.end, s.end + 0.2, 200000);
  EXPECT_LT(tail, 1e-8);
}

TEST(SampleMotherTest, TooLowRateIsConfigError) {
  GammachirpParams p = Normalized();
  p.center_freq = 6000.0;
  try {
    sample_mother(Gammachirp{normalize(p)}, 8000.0);
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "sample_rate");
  }
}

SampledWavelet Gaussian(double rate) {
  SampledWavelet g;
  g.sample_rate = rate;
  const double sigma = 1.0 / (testing::kTwoPi * 200.0);
  const int half = static_cast<int>(8.0 * sigma * rate);
  g.t_start = -half / rate;
  for (int k = -half; k <= half; ++k) {
    const double t = k / rate;
    g.samples.emplace_back(std::exp(-t * t / (2.0 * sigma * sigma)), 0.0);
  }
  return g;
}

TEST(AdmissibilityTest, GammachirpIsApproximatelyAnalytic) {
  const auto r = check_admissibility(Gammachirp{Normalized()}, 16000.0);
  EXPECT_TRUE(std::isfinite(r.c_g));
  EXPECT_GT(r.c_g, 0.0);
  EXPECT_GT(r.dc_leakage, 0.0);
  EXPECT_LT(r.dc_leakage, 1e-3);
  EXPECT_TRUE(r.is_admissible);
}

TEST(AdmissibilityTest, MexicanHatHasNoDcLeakage) {
  const auto r = check_admissibility(MexicanHat{}, 16000.0);
  EXPECT_LT(r.dc_leakage, 1e-6);
  EXPECT_TRUE(r.is_admissible);
}

TEST(AdmissibilityTest, PlainGaussianFails) {
  const auto r = check_admissibility(Gaussian(16000.0));
  EXPECT_FALSE(r.is_admissible);
  EXPECT_NEAR(r.dc_leakage, 1.0, 1e-9);
}

TEST(AdmissibilityTest, DcLeakageMatchesDirectTransform) {
  const SampledWavelet w = sample_mother(Gammachirp{Normalized()}, 16000.0);
  double peak = 0.0;
  for (int k = 0; k <= 1600; ++k)
    peak = std::max(peak, std::abs(testing::dtft(w.samples, 16000.0, 0.0, 5.0 * k)));
  const double dc = std::abs(testing::dtft(w.samples, 16000.0, 0.0, 0.0)) / peak;
  EXPECT_NEAR(check_admissibility(w).dc_leakage / dc, 1.0, 1e-3);
}

TEST(AdmissibilityTest, ThresholdIsConfigurable) {
  const auto strict = check_admissibility(Gammachirp{Normalized()}, 16000.0,
                                          AdmissibilityThresholds{1e-5});
  EXPECT_FALSE(strict.is_admissible);
}

TEST(FamilyTest, InvalidParametersAreRejected) {
  EXPECT_THROW(validate(WaveletFamily(Morlet{-1.0, 1000.0})), ConfigError);
  EXPECT_THROW(validate(WaveletFamily(MexicanHat{0.0})), ConfigError);
  EXPECT_THROW(validate(WaveletFamily(GaussianDerivative{0, 1000.0})), ConfigError);
}

}  // namespace
}  // namespace gcwt
