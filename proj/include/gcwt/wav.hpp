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

#include <cstddef>
#include <filesystem>

#include "gcwt/cwt.hpp"

namespace gcwt {

// Full-scale value of 16-bit PCM: a sample x is stored as round(x * 32768),
// clamped to [-32768, 32767].
constexpr double kPcmScale = 32768.0;

// Reads a 16-bit PCM mono RIFF/WAVE file. Throws IoError for unreadable or
// unsupported files.
Signal read_wav(const std::filesystem::path& path);

// Writes 16-bit PCM mono. Out-of-range samples are clamped; the return value
// is the number of clamped samples so callers can warn.
std::size_t write_wav(const std::filesystem::path& path, const Signal& sig);

}  // namespace gcwt
