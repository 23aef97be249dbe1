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

#include "gcwt/cwt.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "gcwt/errors.hpp"

namespace gcwt {
namespace {

void check_level(const Scalogram& scal, int level) {
  if (level < 0 || static_cast<std::size_t>(level) >= scal.num_levels())
    throw DomainError("level " + std::to_string(level) + " outside [0, " +
                      std::to_string(scal.num_levels()) + ")");
}

}  // namespace

void Signal::validate() const {
  if (!(sample_rate > 0.0) || !std::isfinite(sample_rate))
    throw ConfigError("sample_rate", "must be positive");
  if (samples.empty()) throw DomainError("signal is empty");
  for (double v : samples)
    if (!std::isfinite(v)) throw DomainError("signal contains non-finite samples");
}

bool Scalogram::is_edge(std::size_t level, std::size_t i) const {
  const long long first = static_cast<long long>(i) + kernel_offset.at(level);
  const long long last = first + static_cast<long long>(kernel_length.at(level));
  return first < 0 || last > static_cast<long long>(num_samples());
}

Scalogram cwt(const Signal& sig, const WaveletFamily& fam, const ScaleLadder& ladder,
              CwtOptions options) {
  sig.validate();
  return cwt(sig, fam, ladder, ladder_daughters(fam, ladder, sig.sample_rate), options);
}

Scalogram cwt(const Signal& sig, const WaveletFamily& fam, const ScaleLadder& ladder,
              const std::vector<DaughterWavelet>& daughters, CwtOptions options) {
  sig.validate();
  ladder.validate();
  if (daughters.size() != static_cast<std::size_t>(ladder.num_levels))
    throw ConfigError("ladder", "daughter count does not match num_levels");

  const std::size_t n = sig.samples.size();
  const double dt = 1.0 / sig.sample_rate;
  std::size_t max_len = 0;
  for (const auto& d : daughters) {
    if (d.samples.sample_rate != sig.sample_rate)
      throw ConfigError("sample_rate", "daughter sampled at a different rate than the signal");
    max_len = std::max(max_len, d.samples.samples.size());
  }

  Scalogram scal;
  scal.sample_rate = sig.sample_rate;
  scal.family = fam;
  scal.coefficients.assign(daughters.size(), std::vector<Complex>(n));
  for (int m = 0; m < ladder.num_levels; ++m) scal.level_center_freqs.push_back(ladder.center_freq(m));
  for (const auto& d : daughters) {
    const auto offset = std::llround(d.samples.t_start * sig.sample_rate);
    const auto len = d.samples.samples.size();
    if (offset > 0 || -offset >= static_cast<long long>(len))
      throw ConfigError("ladder", "kernel support must contain t = 0");
    scal.kernel_offset.push_back(offset);
    scal.kernel_length.push_back(len);
  }

  // Linear correlation through one shared transform size:
  //   W[i] = dt * sum_k x[i + k0 + k] conj(psi[k])
  // equals the convolution of x with h[j] = conj(psi[L-1-j]) read at
  // i + k0 + L - 1.
  const std::size_t size = next_pow2(n + max_len - 1);
  const auto x_spec = fft(std::span<const double>(sig.samples), size);

  auto run_level = [&](std::size_t m) {
    const auto& psi = daughters[m].samples.samples;
    const std::size_t len = psi.size();
    std::vector<Complex> h(len);
    for (std::size_t j = 0; j < len; ++j) h[j] = std::conj(psi[len - 1 - j]);
    auto spec = fft(std::span<const Complex>(h), size);
    for (std::size_t k = 0; k < size; ++k) spec[k] *= x_spec[k];
    const auto conv = ifft(spec);
    const long long shift = scal.kernel_offset[m] + static_cast<long long>(len) - 1;
    auto& row = scal.coefficients[m];
    for (std::size_t i = 0; i < n; ++i)
      row[i] = dt * conv[static_cast<std::size_t>(static_cast<long long>(i) + shift)];
  };

  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1u, static_cast<unsigned>(daughters.size()));
  if (threads == 1) {
    for (std::size_t m = 0; m < daughters.size(); ++m) run_level(m);
  } else {
    // Rows are disjoint; each is computed the same way whichever thread
    // picks it up.
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t m = next++; m < daughters.size(); m = next++) run_level(m);
      });
  }
  return scal;
}

LevelSpectrum log_spectrum(std::span<const double> samples, double sample_rate,
                           double floor_db) {
  const std::size_t len = samples.size();
  if (len == 0) throw DomainError("log_spectrum: empty input");
  const std::size_t size = next_pow2(len);

  std::vector<double> windowed(len);
  double window_power = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    const double w =
        len > 1 ? 0.5 - 0.5 * std::cos(2.0 * kPi * static_cast<double>(i) / (len - 1)) : 1.0;
    windowed[i] = w * samples[i];
    window_power += w * w;
  }
  window_power /= static_cast<double>(len);

  const auto spec = fft(std::span<const double>(windowed), size);
  LevelSpectrum out;
  const double scale = 1.0 / (static_cast<double>(size) * window_power);
  for (std::size_t k = 0; k <= size / 2; ++k) {
    double power = std::norm(spec[k]) * scale;
    if (k != 0 && k != size / 2) power *= 2.0;
    const double db = power > 0.0 ? 10.0 * std::log10(power) : floor_db;
    out.freqs.push_back(static_cast<double>(k) * sample_rate / static_cast<double>(size));
    out.log_magnitude.push_back(std::max(db, floor_db));
  }
  return out;
}

LevelSpectrum level_log_spectrum(const Scalogram& scal, int level, double floor_db) {
  check_level(scal, level);
  const auto& row = scal.coefficients[static_cast<std::size_t>(level)];
  std::vector<double> real(row.size());
  std::transform(row.begin(), row.end(), real.begin(), [](Complex c) { return c.real(); });
  auto out = log_spectrum(real, scal.sample_rate, floor_db);
  out.level = level;
  return out;
}

Signal approximation(const Scalogram& scal, int level) {
  check_level(scal, level);
  Signal out;
  out.sample_rate = scal.sample_rate;
  out.samples.assign(scal.num_samples(), 0.0);
  for (std::size_t m = static_cast<std::size_t>(level); m < scal.num_levels(); ++m)
    for (std::size_t i = 0; i < out.samples.size(); ++i)
      out.samples[i] += scal.coefficients[m][i].real();
  return out;
}

}  // namespace gcwt
