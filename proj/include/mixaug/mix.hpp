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

#include <span>
#include <vector>

#include "mixaug/geometry.hpp"
#include "mixaug/params.hpp"
#include "mixaug/primitives.hpp"
#include "mixaug/rng.hpp"
#include "mixaug/saliency.hpp"
#include "mixaug/tensor.hpp"

namespace mixaug {

/// Result of one mix-based augmentation.
struct MixOutput {
  ImageTensor image;
  SoftLabel label;
  /// Extra views; AugMix in consistency mode stores its second draw here.
  std::vector<ImageTensor> aux_images;
  /// Label mass carried by the first operand after any clipping.
  double lambda_effective = 1.0;
  /// Boxes used by the method (CutMix patch, SnapMix target/source, CropMix crops).
  std::vector<BoxMask> regions;
};

// MixUp ---------------------------------------------------------------------

/// Ĩ = λa + (1 − λ)b, ỹ = λya + (1 − λ)yb with λ ~ Beta(α, α).
MixOutput mixup(const ImageTensor& a, const SoftLabel& ya, const ImageTensor& b,
                const SoftLabel& yb, double alpha, SeededRng& rng);
/// MixUp at a fixed λ.
MixOutput mixup_at(const ImageTensor& a, const SoftLabel& ya, const ImageTensor& b,
                   const SoftLabel& yb, double lambda);

// CutMix --------------------------------------------------------------------

/// Pastes b's pixels under `box` into a; label weight 1 − area/(W·H).
MixOutput cutmix_with_box(const ImageTensor& a, const SoftLabel& ya, const ImageTensor& b,
                          const SoftLabel& yb, const BoxMask& box);
/// λ ~ Beta(α, α), box centre uniform over the image, sides W·√(1−λ), H·√(1−λ).
MixOutput cutmix(const ImageTensor& a, const SoftLabel& ya, const ImageTensor& b,
                 const SoftLabel& yb, double alpha, SeededRng& rng);
/// Same geometry as cutmix() at a fixed λ; only the box centre is random.
MixOutput cutmix_at(const ImageTensor& a, const SoftLabel& ya, const ImageTensor& b,
                    const SoftLabel& yb, double lambda, SeededRng& rng);

// CropMix -------------------------------------------------------------------

/// Random-resized crop box covering `scale` of the image area, same aspect.
BoxMask sample_crop_box(int image_w, int image_h, double scale, SeededRng& rng);

/**
 * Folds params.num_crops random-resized crops of src left to right with a
 * fresh λ ~ Beta(α, α) per fold (MixUp blend or CutMix paste, per
 * params.fold_mode). The label is returned unchanged.
 */
MixOutput cropmix(const ImageTensor& src, const SoftLabel& y, const MixParams& params,
                  SeededRng& rng);
/// CropMix over explicit crop boxes and fold coefficients (one per fold).
MixOutput cropmix_with_crops(const ImageTensor& src, const SoftLabel& y,
                             std::span<const BoxMask> crops, std::span<const double> lambdas,
                             FoldMode mode, SeededRng& rng);

// YOCO ----------------------------------------------------------------------

enum class SplitAxis { kHeight, kWidth };

/// Splits along `axis` (part 1 gets floor(extent/2)), augments each part, and
/// concatenates. Part 1 draws from rng.fork(1), part 2 from rng.fork(2).
ImageTensor yoco_split(const ImageTensor& img, SplitAxis axis, std::span<const PrimitiveOp> aug1,
                       std::span<const PrimitiveOp> aug2, const SeededRng& rng);
/// p ~ U(0,1); p <= 0.5 splits along the height, otherwise along the width.
ImageTensor yoco(const ImageTensor& img, std::span<const PrimitiveOp> aug1,
                 std::span<const PrimitiveOp> aug2, SeededRng& rng);
/// (M+1) x (N+1) grid; `augs` is row-major with (M+1)·(N+1) entries. The last
/// row and column absorb the remainder pixels.
ImageTensor yoco_grid(const ImageTensor& img, int grid_rows, int grid_cols,
                      std::span<const OpChain> augs, const SeededRng& rng);

// AugMix --------------------------------------------------------------------

/// m·orig + (1 − m)·Σ wᵢ·chain_outputsᵢ.
ImageTensor augmix_blend(const ImageTensor& orig, std::span<const ImageTensor> chain_outputs,
                         std::span<const double> weights, double m);

/// w ~ Dir(α), m ~ Beta(α, α), k chains from `pool`. With `consistency`, a
/// second independent draw is stored in aux_images. Label unchanged.
MixOutput augmix(const ImageTensor& img, const SoftLabel& y, const MixParams& params,
                 std::span<const OpKind> pool, SeededRng& rng, bool consistency = false);

// SnapMix -------------------------------------------------------------------

/**
 * Resizes b's content under `box_b` onto `box_a` in a. Label weights are
 * SR_a = SPM_a mass outside box_a and SR_b = SPM_b mass inside box_b,
 * normalized to sum to 1 (area fractions when both are zero). An empty box
 * on either side leaves (a, ya) untouched.
 */
MixOutput snapmix_with_boxes(const ImageTensor& a, const SoftLabel& ya, const SaliencyMap& spm_a,
                             const BoxMask& box_a, const ImageTensor& b, const SoftLabel& yb,
                             const SaliencyMap& spm_b, const BoxMask& box_b);

/// Draws independent CutMix-style boxes in a and b. CAMs are resized to the
/// image size when needed and normalized into SPMs.
MixOutput snapmix(const ImageTensor& a, const SoftLabel& ya, const SaliencyMap& cam_a,
                  const ImageTensor& b, const SoftLabel& yb, const SaliencyMap& cam_b,
                  double alpha, SeededRng& rng);

}  // namespace mixaug
