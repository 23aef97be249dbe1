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

#include <cstdint>
#include <filesystem>
#include <vector>

#include "gcwt/cwt.hpp"

namespace gcwt {

// 8-bit RGB raster, row-major from the top-left corner.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rgb;

  Image(int w, int h);
  void set(int x, int y, std::uint8_t r, std::uint8_t g, std::uint8_t b);
};

void write_png(const std::filesystem::path& path, const Image& image);

// Polyline of y over x inside a framed plot area. Axis ranges come from
// the data.
Image plot_series(const std::vector<double>& x, const std::vector<double>& y, int width,
                  int height);

// Magnitude scalogram in dB (60 dB range): level 0 at the top, time along x.
Image plot_scalogram(const Scalogram& scal, int width, int height);

}  // namespace gcwt
