// Copyright 2026 The mixaug Authors
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

#include <algorithm>
#include <cmath>
#include <string>

#include "mixaug/error.hpp"
#include "mixaug/geometry.hpp"

namespace mixaug {

void BoxMask::validate() const {
  if (image_w < 1 || image_h < 1 || w < 0 || h < 0 || x0 < 0 || y0 < 0 || x0 + w > image_w ||
      y0 + h > image_h) {
    throw ParameterError("box (" + std::to_string(x0) + "," + std::to_string(y0) + "," +
                         std::to_string(w) + "," + std::to_string(h) + ") outside " +
                         std::to_string(image_w) + "x" + std::to_string(image_h) + " frame");
  }
}

BoxMask centered_box(int image_w, int image_h, double lambda, double cx, double cy) {
  const double side = std::sqrt(std::clamp(1.0 - lambda, 0.0, 1.0));
  const int rw = static_cast<int>(std::lround(image_w * side));
  const int rh = static_cast<int>(std::lround(image_h * side));
  const int ix = std::clamp(static_cast<int>(std::floor(cx)), 0, image_w - 1);
  const int iy = std::clamp(static_cast<int>(std::floor(cy)), 0, image_h - 1);
  if (rw == 0 || rh == 0) return {ix, iy, 0, 0, image_w, image_h};

  const int x_lo = std::clamp(ix - rw / 2, 0, image_w);
  const int x_hi = std::clamp(ix - rw / 2 + rw, 0, image_w);
  const int y_lo = std::clamp(iy - rh / 2, 0, image_h);
  const int y_hi = std::clamp(iy - rh / 2 + rh, 0, image_h);
  return {x_lo, y_lo, x_hi - x_lo, y_hi - y_lo, image_w, image_h};
}

namespace {

struct Tap {
  int lo;
  int hi;
  double frac;
};

// Half-pixel-centre source coordinate for output index i, clamped into the
// source span [origin, origin + len).
Tap source_tap(int i, int origin, int len, int out_len) {
  double s = (i + 0.5) * static_cast<double>(len) / out_len - 0.5;
  s = std::clamp(s, 0.0, static_cast<double>(len - 1));
  const int lo = static_cast<int>(std::floor(s));
  const int hi = std::min(lo + 1, len - 1);
  return {origin + lo, origin + hi, s - lo};
}

template <typename T>
void resample_plane(const T* src, int src_w, const BoxMask& box, T* dst, int out_h, int out_w) {
  std::vector<Tap> xs(out_w);
  for (int x = 0; x < out_w; ++x) xs[x] = source_tap(x, box.x0, box.w, out_w);
  for (int y = 0; y < out_h; ++y) {
    const Tap ty = source_tap(y, box.y0, box.h, out_h);
    const T* r0 = src + static_cast<std::size_t>(ty.lo) * src_w;
    const T* r1 = src + static_cast<std::size_t>(ty.hi) * src_w;
    for (int x = 0; x < out_w; ++x) {
      const Tap& tx = xs[x];
      const double top = r0[tx.lo] + tx.frac * (static_cast<double>(r0[tx.hi]) - r0[tx.lo]);
      const double bot = r1[tx.lo] + tx.frac * (static_cast<double>(r1[tx.hi]) - r1[tx.lo]);
      dst[static_cast<std::size_t>(y) * out_w + x] = static_cast<T>(top + ty.frac * (bot - top));
    }
  }
}

}  // namespace

ImageTensor crop_resize(const ImageTensor& img, const BoxMask& box, int height, int width) {
  box.validate();
  if (box.image_w != img.width() || box.image_h != img.height()) {
    throw ShapeError("crop box frame does not match image " + img.shape().str());
  }
  if (box.empty()) throw ParameterError("crop_resize: empty region");
  if (height < 1 || width < 1) throw ParameterError("crop_resize: empty target size");

  const Shape out_shape{img.channels(), height, width};
  if (box == BoxMask::full(img.width(), img.height()) && height == img.height() &&
      width == img.width()) {
    return img;
  }
  std::vector<float> out(out_shape.size());
  for (int c = 0; c < img.channels(); ++c) {
    resample_plane(img.plane(c).data(), img.width(), box, out.data() + c * out_shape.plane(),
                   height, width);
  }
  for (auto& v : out) v = std::clamp(v, 0.0f, 1.0f);
  return ImageTensor(out_shape, std::move(out));
}

ImageTensor resize_bilinear(const ImageTensor& img, int height, int width) {
  return crop_resize(img, BoxMask::full(img.width(), img.height()), height, width);
}

std::vector<double> resize_plane(std::span<const double> plane, int height, int width,
                                 int out_height, int out_width) {
  if (plane.size() != static_cast<std::size_t>(height) * width || height < 1 || width < 1) {
    throw ShapeError("resize_plane: buffer does not match " + std::to_string(height) + "x" +
                     std::to_string(width));
  }
  if (height == out_height && width == out_width) return {plane.begin(), plane.end()};
  std::vector<double> out(static_cast<std::size_t>(out_height) * out_width);
  resample_plane(plane.data(), width, BoxMask::full(width, height), out.data(), out_height,
                 out_width);
  return out;
}

ImageTensor warp_affine(const ImageTensor& img, const AffineMap& m) {
  const int h = img.height();
  const int w = img.width();
  std::vector<float> out(img.size(), 0.0f);
  for (int c = 0; c < img.channels(); ++c) {
    const float* src = img.plane(c).data();
    float* dst = out.data() + c * img.shape().plane();
    auto tap = [&](int x, int y) -> double {
      return (x >= 0 && x < w && y >= 0 && y < h) ? src[static_cast<std::size_t>(y) * w + x]
                                                  : 0.0;
    };
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        const double sx = m[0] * x + m[1] * y + m[2];
        const double sy = m[3] * x + m[4] * y + m[5];
        if (sx <= -1.0 || sy <= -1.0 || sx >= w || sy >= h) continue;
        const int x0 = static_cast<int>(std::floor(sx));
        const int y0 = static_cast<int>(std::floor(sy));
        const double fx = sx - x0;
        const double fy = sy - y0;
        double v = (1.0 - fy) * ((1.0 - fx) * tap(x0, y0) + (fx > 0.0 ? fx * tap(x0 + 1, y0) : 0.0));
        if (fy > 0.0) v += fy * ((1.0 - fx) * tap(x0, y0 + 1) + (fx > 0.0 ? fx * tap(x0 + 1, y0 + 1) : 0.0));
        dst[static_cast<std::size_t>(y) * w + x] = std::clamp(static_cast<float>(v), 0.0f, 1.0f);
      }
    }
  }
  return ImageTensor(img.shape(), std::move(out));
}

}  // namespace mixaug
