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


#include "gcwt/plot.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>

#include "gcwt/errors.hpp"

namespace gcwt {
namespace {

constexpr int kMargin = 8;
constexpr double kHeatRangeDb = 60.0;

// Black-body style ramp: black, red, yellow, white.
void heat_color(double v, std::uint8_t& r, std::uint8_t& g, std::uint8_t& b) {
  v = std::clamp(v, 0.0, 1.0);
  r = static_cast<std::uint8_t>(255.0 * std::min(1.0, 3.0 * v));
  g = static_cast<std::uint8_t>(255.0 * std::clamp(3.0 * v - 1.0, 0.0, 1.0));
  b = static_cast<std::uint8_t>(255.0 * std::clamp(3.0 * v - 2.0, 0.0, 1.0));
}

void line(Image& img, int x0, int y0, int x1, int y1) {
  const int dx = std::abs(x1 - x0);
  const int dy = -std::abs(y1 - y0);
  const int sx = x0 < x1 ? 1 : -1;
  const int sy = y0 < y1 ? 1 : -1;
  int err = dx + dy;
  for (;;) {
    img.set(x0, y0, 20, 60, 160);
    if (x0 == x1 && y0 == y1) break;
    const int e2 = 2 * err;
    if (e2 >= dy) {
      err += dy;
      x0 += sx;
    }
    if (e2 <= dx) {
      err += dx;
      y0 += sy;
    }
  }
}

}  // namespace

Image::Image(int w, int h) : width(w), height(h), rgb(static_cast<std::size_t>(w) * h * 3, 255) {}

void Image::set(int x, int y, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  if (x < 0 || y < 0 || x >= width || y >= height) return;
  const std::size_t i = (static_cast<std::size_t>(y) * width + x) * 3;
  rgb[i] = r;
  rgb[i + 1] = g;
  rgb[i + 2] = b;
}

void write_png(const std::filesystem::path& path, const Image& image) {
  std::unique_ptr<FILE, int (*)(FILE*)> file(std::fopen(path.string().c_str(), "wb"), &std::fclose);
  if (!file) throw IoError("cannot open '" + path.string() + "' for writing");
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_write_struct(&png, nullptr);
    throw IoError("libpng initialization failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("PNG encoding failed for '" + path.string() + "'");
  }
  png_init_io(png, file.get());
  png_set_IHDR(png, info, static_cast<png_uint_32>(image.width),
               static_cast<png_uint_32>(image.height), 8, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (int y = 0; y < image.height; ++y) {
    png_write_row(png, image.rgb.data() + static_cast<std::size_t>(y) * image.width * 3);
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

Image plot_series(const std::vector<double>& x, const std::vector<double>& y, int width,
                  int height) {
  Image img(width, height);
  const int left = kMargin, right = width - 1 - kMargin;
  const int top = kMargin, bottom = height - 1 - kMargin;
  for (int px = left; px <= right; ++px) {
    img.set(px, top, 0, 0, 0);
    img.set(px, bottom, 0, 0, 0);
  }
  for (int py = top; py <= bottom; ++py) {
    img.set(left, py, 0, 0, 0);
    img.set(right, py, 0, 0, 0);
  }
  const std::size_t n = std::min(x.size(), y.size());
  if (n == 0) return img;
  const auto [xmin, xmax] = std::minmax_element(x.begin(), x.begin() + static_cast<long>(n));
  const auto [ymin, ymax] = std::minmax_element(y.begin(), y.begin() + static_cast<long>(n));
  const double xspan = *xmax > *xmin ? *xmax - *xmin : 1.0;
  const double yspan = *ymax > *ymin ? *ymax - *ymin : 1.0;
  auto px = [&](std::size_t i) {
    return left + 1 + static_cast<int>(std::lround((x[i] - *xmin) / xspan * (right - left - 2)));
  };
  auto py = [&](std::size_t i) {
    return bottom - 1 - static_cast<int>(std::lround((y[i] - *ymin) / yspan * (bottom - top - 2)));
  };
  for (std::size_t i = 1; i < n; ++i) line(img, px(i - 1), py(i - 1), px(i), py(i));
  if (n == 1) img.set(px(0), py(0), 20, 60, 160);
  return img;
}

Image plot_scalogram(const Scalogram& scal, int width, int height) {
  Image img(width, height);
  const std::size_t levels = scal.num_levels();
  const std::size_t samples = scal.num_samples();
  if (levels == 0 || samples == 0) return img;
  double peak = 0.0;
  for (const auto& row : scal.coefficients)
    for (const Complex& c : row) peak = std::max(peak, std::abs(c));
  if (peak == 0.0) peak = 1.0;
  for (int y = 0; y < height; ++y) {
    const std::size_t m = std::min(levels - 1, static_cast<std::size_t>(y) * levels / height);
    for (int x = 0; x < width; ++x) {
      const std::size_t i0 = static_cast<std::size_t>(x) * samples / width;
      const std::size_t i1 = std::max(i0 + 1, static_cast<std::size_t>(x + 1) * samples / width);
      double v = 0.0;
      for (std::size_t i = i0; i < std::min(i1, samples); ++i)
        v = std::max(v, std::abs(scal.coefficients[m][i]));
      const double db = v > 0.0 ? 20.0 * std::log10(v / peak) : -kHeatRangeDb;
      std::uint8_t r, g, b;
      heat_color(1.0 + db / kHeatRangeDb, r, g, b);
      img.set(x, y, r, g, b);
    }
  }
  return img;
}

}  // namespace gcwt
