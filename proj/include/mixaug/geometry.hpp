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

#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "mixaug/tensor.hpp"

namespace mixaug {

/// Axis-aligned pixel rectangle inside an image_w x image_h frame.
struct BoxMask {
  int x0 = 0;
  int y0 = 0;
  int w = 0;
  int h = 0;
  int image_w = 0;
  int image_h = 0;

  /// Throws ParameterError unless the box lies inside the frame.
  void validate() const;
  std::size_t area() const noexcept {
    return static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
  }
  bool empty() const noexcept { return w == 0 || h == 0; }
  bool contains(int x, int y) const noexcept {
    return x >= x0 && x < x0 + w && y >= y0 && y < y0 + h;
  }
  bool operator==(const BoxMask&) const = default;

  static BoxMask full(int image_w, int image_h) { return {0, 0, image_w, image_h, image_w, image_h}; }
};

/**
 * Box of side W·√(1−λ) x H·√(1−λ) centred on (cx, cy), sides rounded to the
 * nearest pixel, then clipped to the frame. cx, cy are continuous positions
 * in [0, W) x [0, H).
 */
BoxMask centered_box(int image_w, int image_h, double lambda, double cx, double cy);

/// Bilinear resize with half-pixel centres and edge clamping.
ImageTensor resize_bilinear(const ImageTensor& img, int height, int width);

/// Resamples the region of `img` under `box` onto a height x width grid.
ImageTensor crop_resize(const ImageTensor& img, const BoxMask& box, int height, int width);

/// Bilinear resize of a single double plane.
std::vector<double> resize_plane(std::span<const double> plane, int height, int width,
                                 int out_height, int out_width);

/// Row-major 2x3 matrix mapping output pixel (x, y, 1) to a source position.
using AffineMap = std::array<double, 6>;

/// Inverse-mapped bilinear warp; taps that fall outside the source read 0.
ImageTensor warp_affine(const ImageTensor& img, const AffineMap& dst_to_src);

}  // namespace mixaug
