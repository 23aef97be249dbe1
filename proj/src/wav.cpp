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


#include "gcwt/wav.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "gcwt/errors.hpp"

namespace gcwt {
namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint32_t u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void put_u32(std::vector<unsigned char>& out, std::uint32_t v) {
  for (int k = 0; k < 4; ++k) out.push_back(static_cast<unsigned char>(v >> (8 * k)));
}

void put_u16(std::vector<unsigned char>& out, std::uint16_t v) {
  out.push_back(static_cast<unsigned char>(v & 0xFF));
  out.push_back(static_cast<unsigned char>(v >> 8));
}

void put_tag(std::vector<unsigned char>& out, const char* tag) {
  out.insert(out.end(), tag, tag + 4);
}

}  // namespace

Signal read_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  const std::vector<unsigned char> bytes{std::istreambuf_iterator<char>(in),
                                         std::istreambuf_iterator<char>()};
  const std::string where = "'" + path.string() + "': ";
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0)
    throw IoError(where + "not a RIFF/WAVE file");

  bool have_fmt = false;
  std::uint32_t rate = 0;
  const unsigned char* data = nullptr;
  std::size_t data_size = 0;
  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const unsigned char* chunk = bytes.data() + pos;
    const std::size_t size = u32(chunk + 4);
    const std::size_t body = pos + 8;
    const std::size_t avail = std::min(size, bytes.size() - body);
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (avail < 16) throw IoError(where + "truncated fmt chunk");
      const unsigned char* f = bytes.data() + body;
      std::uint16_t format = u16(f);
      const std::uint16_t channels = u16(f + 2);
      rate = u32(f + 4);
      const std::uint16_t bits = u16(f + 14);
      if (format == kFormatExtensible && avail >= 26) format = u16(f + 24);
      if (format != kFormatPcm) throw IoError(where + "only PCM WAV files are supported");
      if (channels != 1) throw IoError(where + "only mono WAV files are supported");
      if (bits != 16) throw IoError(where + "only 16-bit WAV files are supported");
      if (rate == 0) throw IoError(where + "sample rate is zero");
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      data = bytes.data() + body;
      data_size = avail;
    }
    pos = body + size + (size & 1u);
  }
  if (!have_fmt) throw IoError(where + "missing fmt chunk");
  if (data == nullptr) throw IoError(where + "missing data chunk");

  Signal sig;
  sig.sample_rate = rate;
  sig.samples.resize(data_size / 2);
  for (std::size_t i = 0; i < sig.samples.size(); ++i) {
    const auto v = static_cast<std::int16_t>(u16(data + 2 * i));
    sig.samples[i] = static_cast<double>(v) / kPcmScale;
  }
  return sig;
}

std::size_t write_wav(const std::filesystem::path& path, const Signal& sig) {
  if (!(sig.sample_rate > 0.0) || sig.sample_rate != std::round(sig.sample_rate) ||
      sig.sample_rate > 4294967295.0)
    throw ConfigError("sample_rate", "WAV needs a positive integer sample rate");
  const auto rate = static_cast<std::uint32_t>(sig.sample_rate);
  const std::size_t n = sig.samples.size();
  if (n > (0xFFFFFFFFu - 36u) / 2u) throw IoError("signal too long for a WAV file");
  const auto data_size = static_cast<std::uint32_t>(2 * n);

  std::vector<unsigned char> out;
  out.reserve(44 + data_size);
  put_tag(out, "RIFF");
  put_u32(out, 36 + data_size);
  put_tag(out, "WAVE");
  put_tag(out, "fmt ");
  put_u32(out, 16);
  put_u16(out, kFormatPcm);
  put_u16(out, 1);
  put_u32(out, rate);
  put_u32(out, rate * 2);
  put_u16(out, 2);
  put_u16(out, 16);
  put_tag(out, "data");
  put_u32(out, data_size);

  std::size_t clipped = 0;
  for (double x : sig.samples) {
    double q = std::round(x * kPcmScale);
    if (!(q >= -32768.0 && q <= 32767.0)) {
      ++clipped;
      q = std::isnan(q) ? 0.0 : std::clamp(q, -32768.0, 32767.0);
    }
    put_u16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(q)));
  }

  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path.string() + "' for writing");
  file.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
  if (!file) throw IoError("write to '" + path.string() + "' failed");
  return clipped;
}

}  // namespace gcwt
