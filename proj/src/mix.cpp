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

#include "mixaug/mix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mixaug/error.hpp"
#include "mixaug/sampling.hpp"

namespace mixaug {
namespace {

void require_pair(const ImageTensor& a, const SoftLabel& ya, const ImageTensor& b,
                  const SoftLabel& yb) {
  if (a.shape() != b.shape()) {
    throw ShapeError("image shapes differ: " + a.shape().str() + " vs " + b.shape().str());
  }
  if (ya.num_classes() != yb.num_classes()) {
    throw ShapeError("label class counts differ: " + std::to_string(ya.num_classes()) + " vs " +
                     std::to_string(yb.num_classes()));
  }
}

std::vector<float> copy_data(const ImageTensor& img) {
  const auto d = img.data();
  return {d.begin(), d.end()};
}

// Copies `patch` (shape C x box.h x box.w) into `dst` (shape `frame`) at box.
void paste(std::vector<float>& dst, const Shape& frame, const ImageTensor& patch,
           const BoxMask& box) {
  for (int c = 0; c < frame.channels; ++c) {
    for (int y = 0; y < box.h; ++y) {
      const float* src = patch.plane(c).data() + static_cast<std::size_t>(y) * box.w;
      float* row = dst.data() + (static_cast<std::size_t>(c) * frame.height + box.y0 + y) *
                                    frame.width + box.x0;
      std::copy(src, src + box.w, row);
    }
  }
}

ImageTensor crop(const ImageTensor& img, const BoxMask& box) {
  const Shape out_shape{img.channels(), box.h, box.w};
  std::vector<float> out(out_shape.size());
  for (int c = 0; c < img.channels(); ++c) {
    for (int y = 0; y < box.h; ++y) {
      const float* src = img.plane(c).data() +
                         static_cast<std::size_t>(box.y0 + y) * img.width() + box.x0;
      std::copy(src, src + box.w, out.data() + (static_cast<std::size_t>(c) * box.h + y) * box.w);
    }
  }
  return ImageTensor(out_shape, std::move(out));
}

BoxMask random_centered_box(int w, int h, double lambda, SeededRng& rng) {
  const double cx = rng.uniform(0.0, w);
  const double cy = rng.uniform(0.0, h);
  return centered_box(w, h, lambda, cx, cy);
}

}  // namespace

MixOutput mixup_at(const ImageTensor& a, const SoftLabel& ya, const ImageTensor& b,
                   const SoftLabel& yb, double lambda) {
  require_pair(a, ya, b, yb);
  return {convex_combine(a, b, lambda), mix_labels(ya, yb, lambda), {}, lambda, {}};
}

MixOutput mixup(const ImageTensor& a, const SoftLabel& ya, const ImageTensor& b,
                const SoftLabel& yb, double alpha, SeededRng& rng) {
  require_pair(a, ya, b, yb);
  return mixup_at(a, ya, b, yb, sample_beta(rng, alpha));
}

MixOutput cutmix_with_box(const ImageTensor& a, const SoftLabel& ya, const ImageTensor& b,
                          const SoftLabel& yb, const BoxMask& box) {
  require_pair(a, ya, b, yb);
  box.validate();
  if (box.image_w != a.width() || box.image_h != a.height()) {
    throw ShapeError("cutmix box frame does not match image " + a.shape().str());
  }
  if (box.empty()) return {a, ya, {}, 1.0, {box}};

  std::vector<float> out = copy_data(a);
  paste(out, a.shape(), crop(b, box), box);
  const double lambda_eff =
      1.0 - static_cast<double>(box.area()) / (static_cast<double>(a.width()) * a.height());
  return {ImageTensor(a.shape(), std::move(out)), mix_labels(ya, yb, lambda_eff), {}, lambda_eff,
          {box}};
}

MixOutput cutmix_at(const ImageTensor& a, const SoftLabel& ya, const ImageTensor& b,
                    const SoftLabel& yb, double lambda, SeededRng& rng) {
  require_pair(a, ya, b, yb);
  return cutmix_with_box(a, ya, b, yb, random_centered_box(a.width(), a.height(), lambda, rng));
}

MixOutput cutmix(const ImageTensor& a, const SoftLabel& ya, const ImageTensor& b,
                 const SoftLabel& yb, double alpha, SeededRng& rng) {
  require_pair(a, ya, b, yb);
  const double lambda = sample_beta(rng, alpha);
  return cutmix_at(a, ya, b, yb, lambda, rng);
}

BoxMask sample_crop_box(int image_w, int image_h, double scale, SeededRng& rng) {
  const double side = std::sqrt(scale);
  const int cw = std::clamp(static_cast<int>(std::lround(image_w * side)), 1, image_w);
  const int ch = std::clamp(static_cast<int>(std::lround(image_h * side)), 1, image_h);
  const int x0 = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(image_w - cw + 1)));
  const int y0 = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(image_h - ch + 1)));
  return {x0, y0, cw, ch, image_w, image_h};
}

MixOutput cropmix_with_crops(const ImageTensor& src, const SoftLabel& y,
                             std::span<const BoxMask> crops, std::span<const double> lambdas,
                             FoldMode mode, SeededRng& rng) {
  if (crops.size() < 2) throw ParameterError("cropmix needs at least 2 crops");
  if (lambdas.size() != crops.size() - 1) {
    throw ParameterError("cropmix needs one mixing coefficient per fold");
  }
  auto view = [&](const BoxMask& box) { return crop_resize(src, box, src.height(), src.width()); };

  ImageTensor acc = view(crops[0]);
  for (std::size_t i = 1; i < crops.size(); ++i) {
    const ImageTensor next = view(crops[i]);
    if (mode == FoldMode::kMixup) {
      acc = convex_combine(acc, next, lambdas[i - 1]);
    } else {
      const BoxMask box = random_centered_box(src.width(), src.height(), lambdas[i - 1], rng);
      if (!box.empty()) {
        std::vector<float> out = copy_data(acc);
        paste(out, src.shape(), crop(next, box), box);
        acc = ImageTensor(src.shape(), std::move(out));
      }
    }
  }
  return {std::move(acc), y, {}, 1.0, {crops.begin(), crops.end()}};
}

MixOutput cropmix(const ImageTensor& src, const SoftLabel& y, const MixParams& params,
                  SeededRng& rng) {
  params.validate();
  std::vector<BoxMask> crops;
  for (int i = 0; i < params.num_crops; ++i) {
    const double scale = rng.uniform(params.crop_scale_min, params.crop_scale_max);
    crops.push_back(sample_crop_box(src.width(), src.height(), scale, rng));
  }
  std::vector<double> lambdas;
  for (int i = 1; i < params.num_crops; ++i) lambdas.push_back(sample_beta(rng, params.alpha));
  return cropmix_with_crops(src, y, crops, lambdas, params.fold_mode, rng);
}

ImageTensor yoco_split(const ImageTensor& img, SplitAxis axis, std::span<const PrimitiveOp> aug1,
                       std::span<const PrimitiveOp> aug2, const SeededRng& rng) {
  const int w = img.width();
  const int h = img.height();
  if (w < 2 || h < 2) throw ShapeError("yoco needs an image at least 2x2, got " + img.shape().str());

  BoxMask first;
  BoxMask second;
  if (axis == SplitAxis::kHeight) {
    first = {0, 0, w, h / 2, w, h};
    second = {0, h / 2, w, h - h / 2, w, h};
  } else {
    first = {0, 0, w / 2, h, w, h};
    second = {w / 2, 0, w - w / 2, h, w, h};
  }
  std::vector<float> out(img.size());
  paste(out, img.shape(), apply_chain(aug1, crop(img, first), rng.fork(1)), first);
  paste(out, img.shape(), apply_chain(aug2, crop(img, second), rng.fork(2)), second);
  return ImageTensor(img.shape(), std::move(out));
}

ImageTensor yoco(const ImageTensor& img, std::span<const PrimitiveOp> aug1,
                 std::span<const PrimitiveOp> aug2, SeededRng& rng) {
  const double p = rng.uniform();
  return yoco_split(img, p <= 0.5 ? SplitAxis::kHeight : SplitAxis::kWidth, aug1, aug2, rng);
}

ImageTensor yoco_grid(const ImageTensor& img, int grid_rows, int grid_cols,
                      std::span<const OpChain> augs, const SeededRng& rng) {
  if (grid_rows < 0 || grid_cols < 0) throw ParameterError("yoco grid dimensions must be >= 0");
  const int rows = grid_rows + 1;
  const int cols = grid_cols + 1;
  if (rows > img.height() || cols > img.width()) {
    throw ShapeError("yoco grid " + std::to_string(rows) + "x" + std::to_string(cols) +
                     " is finer than image " + img.shape().str());
  }
  if (augs.size() != static_cast<std::size_t>(rows) * cols) {
    throw ParameterError("yoco grid needs " + std::to_string(rows * cols) + " op lists, got " +
                         std::to_string(augs.size()));
  }
  const int cell_h = img.height() / rows;
  const int cell_w = img.width() / cols;
  std::vector<float> out(img.size());
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const int y0 = i * cell_h;
      const int x0 = j * cell_w;
      const int h = (i == rows - 1) ? img.height() - y0 : cell_h;
      const int w = (j == cols - 1) ? img.width() - x0 : cell_w;
      const BoxMask cell{x0, y0, w, h, img.width(), img.height()};
      const std::size_t idx = static_cast<std::size_t>(i) * cols + j;
      paste(out, img.shape(), apply_chain(augs[idx], crop(img, cell), rng.fork(idx)), cell);
    }
  }
  return ImageTensor(img.shape(), std::move(out));
}

ImageTensor augmix_blend(const ImageTensor& orig, std::span<const ImageTensor> chain_outputs,
                         std::span<const double> weights, double m) {
  if (chain_outputs.empty() || chain_outputs.size() != weights.size()) {
    throw ParameterError("augmix_blend needs one weight per chain output");
  }
  for (const auto& out : chain_outputs) {
    if (out.shape() != orig.shape()) throw ShapeError("augmix chain output changed shape");
  }
  const auto src = orig.data();
  std::vector<double> aug(src.size(), 0.0);
  for (std::size_t k = 0; k < chain_outputs.size(); ++k) {
    const auto d = chain_outputs[k].data();
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i] += weights[k] * d[i];
  }
  std::vector<float> out(src.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::clamp(static_cast<float>(m * src[i] + (1.0 - m) * aug[i]), 0.0f, 1.0f);
  }
  return ImageTensor(orig.shape(), std::move(out));
}

namespace {

ImageTensor augmix_once(const ImageTensor& img, const MixParams& params,
                        std::span<const OpKind> pool, SeededRng rng) {
  const auto k = static_cast<std::size_t>(params.num_chains);
  const std::vector<double> w = sample_dirichlet(rng, params.alpha, k);
  const double m = sample_beta(rng, params.alpha);
  std::vector<ImageTensor> outputs;
  outputs.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    SeededRng chain_rng = rng.fork(i);
    const OpChain chain = build_chain(chain_rng, params.chain_depth_max, pool);
    outputs.push_back(apply_chain(chain, img, chain_rng));
  }
  return augmix_blend(img, outputs, w, m);
}

}  // namespace

MixOutput augmix(const ImageTensor& img, const SoftLabel& y, const MixParams& params,
                 std::span<const OpKind> pool, SeededRng& rng, bool consistency) {
  params.validate();
  if (pool.empty()) throw ParameterError("augmix: empty op pool");
  MixOutput out{augmix_once(img, params, pool, rng.fork(0)), y, {}, 1.0, {}};
  if (consistency) out.aux_images.push_back(augmix_once(img, params, pool, rng.fork(1)));
  return out;
}

MixOutput snapmix_with_boxes(const ImageTensor& a, const SoftLabel& ya, const SaliencyMap& spm_a,
                             const BoxMask& box_a, const ImageTensor& b, const SoftLabel& yb,
                             const SaliencyMap& spm_b, const BoxMask& box_b) {
  require_pair(a, ya, b, yb);
  spm_a.validate();
  spm_b.validate();
  if (spm_a.height != a.height() || spm_a.width != a.width() || spm_b.height != b.height() ||
      spm_b.width != b.width()) {
    throw ShapeError("saliency map does not match image " + a.shape().str());
  }
  box_a.validate();
  box_b.validate();
  if (box_a.empty() || box_b.empty()) return {a, ya, {}, 1.0, {box_a, box_b}};

  const ImageTensor patch = crop_resize(b, box_b, box_a.h, box_a.w);
  std::vector<float> out = copy_data(a);
  paste(out, a.shape(), patch, box_a);

  double sr_a = spm_a.mass() - semantic_ratio(spm_a, box_a);
  double sr_b = semantic_ratio(spm_b, box_b);
  sr_a = std::max(sr_a, 0.0);
  if (sr_a + sr_b <= 0.0) {
    const double frame = static_cast<double>(a.width()) * a.height();
    sr_a = 1.0 - static_cast<double>(box_a.area()) / frame;
    sr_b = static_cast<double>(box_b.area()) / frame;
  }
  const double weight_a = sr_a / (sr_a + sr_b);
  return {ImageTensor(a.shape(), std::move(out)), mix_labels(ya, yb, weight_a), {}, weight_a,
          {box_a, box_b}};
}

MixOutput snapmix(const ImageTensor& a, const SoftLabel& ya, const SaliencyMap& cam_a,
                  const ImageTensor& b, const SoftLabel& yb, const SaliencyMap& cam_b,
                  double alpha, SeededRng& rng) {
  require_pair(a, ya, b, yb);
  const SaliencyMap spm_a = make_spm(resize_saliency(cam_a, a.height(), a.width()));
  const SaliencyMap spm_b = make_spm(resize_saliency(cam_b, b.height(), b.width()));
  const double lambda_a = sample_beta(rng, alpha);
  const double lambda_b = sample_beta(rng, alpha);
  const BoxMask box_a = random_centered_box(a.width(), a.height(), lambda_a, rng);
  const BoxMask box_b = random_centered_box(b.width(), b.height(), lambda_b, rng);
  return snapmix_with_boxes(a, ya, spm_a, box_a, b, yb, spm_b, box_b);
}

}  // namespace mixaug
