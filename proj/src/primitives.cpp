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

#include "mixaug/primitives.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "mixaug/error.hpp"
#include "mixaug/geometry.hpp"

namespace mixaug {
namespace {

struct KindInfo {
  OpKind kind;
  std::string_view name;
  double lo;  // parameter at magnitude 0
  double hi;  // parameter at magnitude 1
  bool rng;
};

constexpr std::array<KindInfo, kNumOpKinds> kKinds{{
    {OpKind::kFlipH, "flip_h", 0.0, 0.0, false},
    {OpKind::kFlipV, "flip_v", 0.0, 0.0, false},
    {OpKind::kRotate, "rotate", -30.0, 30.0, false},
    {OpKind::kTranslate, "translate", -0.25, 0.25, true},
    {OpKind::kScale, "scale", 0.75, 1.25, false},
    {OpKind::kCropResize, "crop_resize", 1.0, 0.5, true},
    {OpKind::kShear, "shear", -16.0, 16.0, false},
    {OpKind::kBrightness, "brightness", -0.3, 0.3, false},
    {OpKind::kContrast, "contrast", 0.5, 1.5, false},
    {OpKind::kSharpen, "sharpen", 1.0, 2.0, false},
    {OpKind::kPosterize, "posterize", 8.0, 4.0, false},
    {OpKind::kGaussianNoise, "gaussian_noise", 0.0, 0.1, true},
    {OpKind::kColorJitter, "color_jitter", 0.5, 1.5, false},
}};

constexpr std::array<OpKind, kNumOpKinds> kAllKinds = [] {
  std::array<OpKind, kNumOpKinds> out{};
  for (std::size_t i = 0; i < kNumOpKinds; ++i) out[i] = kKinds[i].kind;
  return out;
}();

const KindInfo& info(OpKind kind) { return kKinds[static_cast<std::size_t>(kind)]; }

constexpr double kDeg = std::numbers::pi / 180.0;

// Builds the output with a per-value function and clamps into [0, 1].
template <typename F>
ImageTensor map_values(const ImageTensor& img, F&& f) {
  const auto src = img.data();
  std::vector<float> out(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    out[i] = std::clamp(static_cast<float>(f(static_cast<double>(src[i]), i)), 0.0f, 1.0f);
  }
  return ImageTensor(img.shape(), std::move(out));
}

ImageTensor flip(const ImageTensor& img, bool horizontal) {
  const int h = img.height();
  const int w = img.width();
  std::vector<float> out(img.size());
  for (int c = 0; c < img.channels(); ++c) {
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        const int sx = horizontal ? w - 1 - x : x;
        const int sy = horizontal ? y : h - 1 - y;
        out[(static_cast<std::size_t>(c) * h + y) * w + x] = img.at(c, sy, sx);
      }
    }
  }
  return ImageTensor(img.shape(), std::move(out));
}

// Affine map about the image centre: src = A (dst - centre) + centre + shift.
ImageTensor centred_affine(const ImageTensor& img, double a, double b, double c, double d,
                           double shift_x, double shift_y) {
  if (a == 1.0 && b == 0.0 && c == 0.0 && d == 1.0 && shift_x == 0.0 && shift_y == 0.0) {
    return img;
  }
  const double cx = (img.width() - 1) * 0.5;
  const double cy = (img.height() - 1) * 0.5;
  const AffineMap m{a, b, cx - a * cx - b * cy + shift_x, c, d, cy - c * cx - d * cy + shift_y};
  return warp_affine(img, m);
}

ImageTensor sharpen(const ImageTensor& img, double factor) {
  const int h = img.height();
  const int w = img.width();
  std::vector<float> out(img.size());
  for (int ch = 0; ch < img.channels(); ++ch) {
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        double acc = 0.0;
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            const int sy = std::clamp(y + dy, 0, h - 1);
            const int sx = std::clamp(x + dx, 0, w - 1);
            acc += img.at(ch, sy, sx) * ((dx == 0 && dy == 0) ? 5.0 : 1.0);
          }
        }
        const double blurred = acc / 13.0;
        const double v = blurred + factor * (img.at(ch, y, x) - blurred);
        out[(static_cast<std::size_t>(ch) * h + y) * w + x] =
            std::clamp(static_cast<float>(v), 0.0f, 1.0f);
      }
    }
  }
  return ImageTensor(img.shape(), std::move(out));
}

ImageTensor color_jitter(const ImageTensor& img, double factor) {
  if (img.channels() != 3 || factor == 1.0) return img;
  const std::size_t plane = img.shape().plane();
  const auto src = img.data();
  std::vector<float> out(src.size());
  for (std::size_t p = 0; p < plane; ++p) {
    const double gray = 0.299 * src[p] + 0.587 * src[plane + p] + 0.114 * src[2 * plane + p];
    for (std::size_t c = 0; c < 3; ++c) {
      const double v = gray + factor * (src[c * plane + p] - gray);
      out[c * plane + p] = std::clamp(static_cast<float>(v), 0.0f, 1.0f);
    }
  }
  return ImageTensor(img.shape(), std::move(out));
}

}  // namespace

std::string_view to_string(OpKind kind) { return info(kind).name; }

std::optional<OpKind> parse_op_kind(std::string_view name) {
  for (const auto& k : kKinds) {
    if (k.name == name) return k.kind;
  }
  return std::nullopt;
}

std::span<const OpKind> all_op_kinds() { return kAllKinds; }

double PrimitiveOp::parameter() const {
  const auto& k = info(kind);
  return k.lo + magnitude * (k.hi - k.lo);
}

bool PrimitiveOp::needs_rng() const noexcept { return info(kind).rng; }

PrimitiveOp PrimitiveOp::with_parameter(OpKind kind, double value) {
  const auto& k = info(kind);
  if (k.lo == k.hi) return {kind, 0.0};
  const double m = (value - k.lo) / (k.hi - k.lo);
  if (m < -1e-12 || m > 1.0 + 1e-12) {
    throw ParameterError(std::string(k.name) + ": parameter " + std::to_string(value) +
                         " outside [" + std::to_string(std::min(k.lo, k.hi)) + ", " +
                         std::to_string(std::max(k.lo, k.hi)) + "]");
  }
  return {kind, std::clamp(m, 0.0, 1.0)};
}

ImageTensor apply_primitive(const PrimitiveOp& op, const ImageTensor& img, SeededRng& rng) {
  if (!(op.magnitude >= 0.0 && op.magnitude <= 1.0)) {
    throw ParameterError(std::string(to_string(op.kind)) + ": magnitude outside [0,1]");
  }
  const double p = op.parameter();
  const int w = img.width();
  const int h = img.height();

  switch (op.kind) {
    case OpKind::kFlipH:
      return flip(img, true);
    case OpKind::kFlipV:
      return flip(img, false);
    case OpKind::kRotate: {
      const double cs = std::cos(p * kDeg);
      const double sn = std::sin(p * kDeg);
      if (p == 0.0) return img;
      return centred_affine(img, cs, sn, -sn, cs, 0.0, 0.0);
    }
    case OpKind::kTranslate: {
      const bool horizontal = rng.uniform_index(2) == 0;
      const double dx = horizontal ? -p * w : 0.0;
      const double dy = horizontal ? 0.0 : -p * h;
      return centred_affine(img, 1.0, 0.0, 0.0, 1.0, dx, dy);
    }
    case OpKind::kScale:
      return centred_affine(img, 1.0 / p, 0.0, 0.0, 1.0 / p, 0.0, 0.0);
    case OpKind::kShear:
      return centred_affine(img, 1.0, std::tan(p * kDeg), 0.0, 1.0, 0.0, 0.0);
    case OpKind::kCropResize: {
      const int cw = std::clamp(static_cast<int>(std::lround(w * p)), 1, w);
      const int ch = std::clamp(static_cast<int>(std::lround(h * p)), 1, h);
      const int x0 = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(w - cw + 1)));
      const int y0 = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(h - ch + 1)));
      return crop_resize(img, BoxMask{x0, y0, cw, ch, w, h}, h, w);
    }
    case OpKind::kBrightness:
      return map_values(img, [p](double v, std::size_t) { return v + p; });
    case OpKind::kContrast: {
      double mean = 0.0;
      for (float v : img.data()) mean += v;
      mean /= static_cast<double>(img.size());
      return map_values(img, [p, mean](double v, std::size_t) { return mean + p * (v - mean); });
    }
    case OpKind::kSharpen:
      return sharpen(img, p);
    case OpKind::kPosterize: {
      const int bits = static_cast<int>(std::lround(p));
      const long mask = ~((1L << (8 - bits)) - 1) & 0xFF;
      return map_values(img, [mask](double v, std::size_t) {
        return static_cast<double>(std::lround(v * 255.0) & mask) / 255.0;
      });
    }
    case OpKind::kGaussianNoise: {
      if (p == 0.0) return img;
      return map_values(img, [p, &rng](double v, std::size_t) { return v + p * rng.normal(); });
    }
    case OpKind::kColorJitter:
      return color_jitter(img, p);
  }
  throw ParameterError("unknown primitive op");
}

OpChain build_chain(SeededRng& rng, int depth_max, std::span<const OpKind> pool) {
  if (pool.empty()) throw ParameterError("build_chain: empty op pool");
  if (depth_max < 1) throw ParameterError("build_chain: depth_max must be >= 1");
  const auto depth = 1 + rng.uniform_index(static_cast<std::uint64_t>(depth_max));
  OpChain chain;
  chain.reserve(depth);
  for (std::uint64_t i = 0; i < depth; ++i) {
    const OpKind kind = pool[rng.uniform_index(pool.size())];
    chain.push_back({kind, rng.uniform()});
  }
  return chain;
}

ImageTensor apply_chain(std::span<const PrimitiveOp> chain, const ImageTensor& img,
                        const SeededRng& rng) {
  ImageTensor out = img;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    SeededRng op_rng = rng.fork(i);
    out = apply_primitive(chain[i], out, op_rng);
  }
  return out;
}

std::vector<OpKind> default_augmix_pool() {
  std::vector<OpKind> pool;
  for (OpKind k : kAllKinds) {
    if (k != OpKind::kGaussianNoise && k != OpKind::kSharpen) pool.push_back(k);
  }
  return pool;
}

std::vector<OpKind> default_yoco_pool() {
  return {OpKind::kFlipH, OpKind::kFlipV, OpKind::kRotate, OpKind::kBrightness, OpKind::kContrast};
}

}  // namespace mixaug
