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

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mixaug/rng.hpp"
#include "mixaug/tensor.hpp"

namespace mixaug {

enum class OpKind {
  kFlipH,
  kFlipV,
  kRotate,
  kTranslate,
  kScale,
  kCropResize,
  kShear,
  kBrightness,
  kContrast,
  kSharpen,
  kPosterize,
  kGaussianNoise,
  kColorJitter,
};

inline constexpr std::size_t kNumOpKinds = 13;

std::string_view to_string(OpKind kind);
/// Accepts the snake_case names ("flip_h", "gaussian_noise", ...).
std::optional<OpKind> parse_op_kind(std::string_view name);
std::span<const OpKind> all_op_kinds();

/**
 * One atomic augmentation. `magnitude` in [0, 1] maps linearly onto a
 * per-kind parameter range:
 *
 *   rotate          angle in [-30, +30] degrees (0.5 -> 0)
 *   translate       shift in [-25%, +25%] of the side, axis drawn from rng
 *   scale           zoom factor in [0.75, 1.25] about the centre
 *   crop_resize     kept side fraction in [1, 0.5], position drawn from rng
 *   shear           horizontal shear angle in [-16, +16] degrees
 *   brightness      additive delta in [-0.3, +0.3]
 *   contrast        factor in [0.5, 1.5] about the image mean
 *   sharpen         factor in [1, 2] against a 3x3 smoothed copy
 *   posterize       kept bits in [8, 4]
 *   gaussian_noise  sigma in [0, 0.1]
 *   color_jitter    saturation factor in [0.5, 1.5] (identity on grayscale)
 *
 * flip_h and flip_v ignore the magnitude.
 */
struct PrimitiveOp {
  OpKind kind = OpKind::kFlipH;
  double magnitude = 0.5;

  /// The concrete parameter the magnitude maps to (degrees, delta, factor...).
  double parameter() const;
  /// Whether apply_primitive draws from the rng for this kind.
  bool needs_rng() const noexcept;

  /// Op whose magnitude maps to `value` in the kind's parameter units.
  static PrimitiveOp with_parameter(OpKind kind, double value);

  bool operator==(const PrimitiveOp&) const = default;
};

using OpChain = std::vector<PrimitiveOp>;

/// Shape-preserving, range-preserving application of one op.
ImageTensor apply_primitive(const PrimitiveOp& op, const ImageTensor& img, SeededRng& rng);

/// Chain of length uniform in {1..depth_max}, kinds uniform with replacement
/// from `pool`, magnitudes uniform in [0, 1].
OpChain build_chain(SeededRng& rng, int depth_max, std::span<const OpKind> pool);

/// Left-to-right composition; op i draws from rng.fork(i).
ImageTensor apply_chain(std::span<const PrimitiveOp> chain, const ImageTensor& img,
                        const SeededRng& rng);

/// AugMix default pool: everything except gaussian_noise and sharpen.
std::vector<OpKind> default_augmix_pool();
/// YOCO default pool: flips, rotation and intensity adjustments.
std::vector<OpKind> default_yoco_pool();

}  // namespace mixaug
