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


#include "gcwt/scalespace.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "gcwt/errors.hpp"
#include "oracles.hpp"

namespace gcwt {
namespace {

WaveletFamily DefaultGammachirp() { return Gammachirp{normalize(GammachirpParams{})}; }

ScaleLadder EightKilohertzLadder() {
  ScaleLadder ladder;
  ladder.top_center_freq = 8000.0;
  ladder.num_levels = 30;
  return ladder;
}

TEST(ScaleLadderTest, Defaults) {
  const ScaleLadder ladder;
  EXPECT_DOUBLE_EQ(ladder.dilation_base, 1.13);
  EXPECT_DOUBLE_EQ(ladder.translation_base, 1.0);
  EXPECT_NO_THROW(ladder.validate());
  EXPECT_LT(ladder.top_center_freq, 8000.0);
}

TEST(ScaleLadderTest, ValidationNamesTheField) {
  ScaleLadder ladder;
  ladder.dilation_base = 1.0;
  try {
    ladder.validate();
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "a0");
  }
  ladder = ScaleLadder{};
  ladder.num_levels = 0;
  EXPECT_THROW(ladder.validate(), ConfigError);
  ladder = ScaleLadder{};
  ladder.translation_base = 0.0;
  EXPECT_THROW(ladder.validate(), ConfigError);
}

TEST(LevelLimitTest, LevelZeroIsTop) {
  const ScaleLadder ladder = EightKilohertzLadder();
  EXPECT_EQ(level_limit_frequency(ladder, 0), 8000.0);
}

TEST(LevelLimitTest, GeometricAndDecreasing) {
  const ScaleLadder ladder;
  for (int m = 0; m + 1 < ladder.num_levels; ++m) {
    const double lo = level_limit_frequency(ladder, m + 1);
    const double hi = level_limit_frequency(ladder, m);
    EXPECT_GT(lo, 0.0);
    EXPECT_LT(lo, hi);
    EXPECT_NEAR(lo / hi, 1.0 / ladder.dilation_base, 1e-15);
  }
}

TEST(LevelLimitTest, EightKilohertzLadderLimits) {
  const ScaleLadder ladder = EightKilohertzLadder();
  EXPECT_NEAR(level_limit_frequency(ladder, 11), 2086.0, 1.0);
  EXPECT_NEAR(level_limit_frequency(ladder, 17), 1002.0, 1.0);
  EXPECT_NEAR(level_limit_frequency(ladder, 22), 544.0, 1.0);
}

TEST(LevelLimitTest, DefaultLadderIsShiftedBySixLevels) {
  const ScaleLadder ladder;
  const ScaleLadder eight = EightKilohertzLadder();
  for (int m = 0; m < ladder.num_levels; ++m)
    EXPECT_NEAR(level_limit_frequency(ladder, m) / level_limit_frequency(eight, m + 6), 1.0,
                1e-12);
}

TEST(LevelLimitTest, OutOfRangeIsDomainError) {
  const ScaleLadder ladder;
  EXPECT_THROW(level_limit_frequency(ladder, -1), DomainError);
  EXPECT_THROW(level_limit_frequency(ladder, ladder.num_levels), DomainError);
}

TEST(DaughterTest, IdentityDilationReproducesMother) {
  for (const WaveletFamily& fam :
       std::vector<WaveletFamily>{DefaultGammachirp(), Morlet{}, MexicanHat{}}) {
    const SampledWavelet mother = sample_mother(fam, 16000.0);
    const DaughterWavelet d = daughter(fam, 1.0, 0.0, 16000.0);
    ASSERT_EQ(d.samples.samples.size(), mother.samples.size());
    EXPECT_EQ(d.samples.t_start, mother.t_start);
    for (std::size_t k = 0; k < mother.samples.size(); ++k)
      EXPECT_EQ(d.samples.samples[k], mother.samples[k]);
  }
}

TEST(DaughterTest, DilationPreservesEnergy) {
  const WaveletFamily fam = DefaultGammachirp();
  const double mother = sample_mother(fam, 16000.0).energy();
  EXPECT_NEAR(daughter(fam, 2.0, 0.0, 16000.0).samples.energy(), mother, 1e-4);
}

TEST(DaughterTest, DilationHalvesCentroid) {
  const WaveletFamily fam = DefaultGammachirp();
  const double mother = sample_mother(fam, 16000.0).center_freq;
  const auto d = daughter(fam, 2.0, 0.0, 16000.0);
  const double oracle = testing::magnitude_centroid(d.samples.samples, 16000.0, 4096);
  EXPECT_NEAR(oracle / (mother / 2.0), 1.0, 0.02);
  EXPECT_NEAR(d.samples.center_freq / (mother / 2.0), 1.0, 0.02);
}

TEST(DaughterTest, TranslationShiftsSupport) {
  const WaveletFamily fam = Morlet{};
  const auto a = daughter(fam, 1.5, 0.0, 16000.0);
  const auto b = daughter(fam, 1.5, 0.01, 16000.0);
  EXPECT_NEAR(b.samples.t_start - a.samples.t_start, 0.01, 1.0 / 16000.0 + 1e-12);
  EXPECT_EQ(b.translation, 0.01);
}

TEST(DaughterTest, NonPositiveDilationIsDomainError) {
  EXPECT_THROW(daughter(Morlet{}, 0.0, 0.0, 16000.0), DomainError);
  EXPECT_THROW(daughter(Morlet{}, -2.0, 0.0, 16000.0), DomainError);
}

TEST(DaughterTest, DilationCovariance) {
  // daughter(a) at rate r equals the mother at rate r a, scaled by 1/sqrt(a).
  const double a = 2.0;
  for (const WaveletFamily& fam : std::vector<WaveletFamily>{DefaultGammachirp(), Morlet{}}) {
    const auto d = daughter(fam, a, 0.0, 16000.0).samples;
    const auto m = sample_mother(fam, 16000.0 * a);
    ASSERT_EQ(d.samples.size(), m.samples.size());
    double peak = 0.0;
    for (const auto& z : m.samples) peak = std::max(peak, std::abs(z));
    for (std::size_t k = 0; k < m.samples.size(); ++k)
      EXPECT_LT(std::abs(d.samples[k] - m.samples[k] / std::sqrt(a)), 1e-6 * peak / std::sqrt(a));
  }
}

TEST(LadderDaughtersTest, CentroidsFollowGeometricLaw) {
  const ScaleLadder ladder;
  const auto daughters = ladder_daughters(DefaultGammachirp(), ladder, 16000.0);
  ASSERT_EQ(daughters.size(), static_cast<std::size_t>(ladder.num_levels));
  std::vector<double> x, y;
  for (int m = 0; m < ladder.num_levels; ++m) {
    const auto& d = daughters[static_cast<std::size_t>(m)];
    EXPECT_EQ(d.translation, 0.0);
    const double fc = testing::magnitude_centroid(d.samples.samples, 16000.0, 2048);
    if (m > 0) EXPECT_NEAR(fc / y.back() * ladder.dilation_base, 1.0, 0.005) << m;
    x.push_back(m);
    y.push_back(fc);
  }
  EXPECT_NEAR(y.front() / ladder.top_center_freq, 1.0, 0.02);

  // Least-squares fit of log centroid against level.
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double my = 0.0;
  for (double v : y) my += std::log(v) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dy = std::log(y[i]) - my;
    sxy += (x[i] - mx) * dy;
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += dy * dy;
  }
  EXPECT_NEAR(sxy / sxx, -std::log(ladder.dilation_base), 1e-3);
  EXPECT_GT(sxy * sxy / (sxx * syy), 0.999);
}

TEST(LadderDaughtersTest, EnergyPreservedAcrossLadder) {
  const ScaleLadder ladder;
  for (const WaveletFamily& fam : std::vector<WaveletFamily>{DefaultGammachirp(), Morlet{}}) {
    for (const auto& d : ladder_daughters(fam, ladder, 16000.0))
      EXPECT_NEAR(d.samples.energy(), 1.0, 1e-4) << family_name(fam);
  }
  // The Mexican hat's broad spectrum needs a higher rate at level 0.
  for (const auto& d : ladder_daughters(MexicanHat{}, ladder, 32000.0))
    EXPECT_NEAR(d.samples.energy(), 1.0, 1e-4);
}

TEST(LadderDaughtersTest, SingleLevelIsRecenteredMother) {
  ScaleLadder ladder;
  ladder.num_levels = 1;
  ladder.top_center_freq = 2000.0;
  const WaveletFamily fam = DefaultGammachirp();
  const auto daughters = ladder_daughters(fam, ladder, 16000.0);
  ASSERT_EQ(daughters.size(), 1u);
  const double mother = sample_mother(fam, 16000.0).center_freq;
  EXPECT_NEAR(daughters[0].dilation, mother / 2000.0, 0.01 * mother / 2000.0);
  EXPECT_NEAR(daughters[0].samples.center_freq, 2000.0, 20.0);
}

TEST(LadderDaughtersTest, AliasingLadderIsConfigError) {
  ScaleLadder ladder;
  ladder.top_center_freq = 8000.0;
  EXPECT_THROW(ladder_daughters(DefaultGammachirp(), ladder, 16000.0), ConfigError);
  ladder.top_center_freq = 7000.0;
  EXPECT_THROW(ladder_daughters(DefaultGammachirp(), ladder, 16000.0), ConfigError);
}

}  // namespace
}  // namespace gcwt
