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

#include <string_view>

namespace mixaug {

/// How CropMix folds successive crops into the running mix.
enum class FoldMode { kMixup, kCutmix };

FoldMode parse_fold_mode(std::string_view text);
std::string_view to_string(FoldMode mode);

/// Per-method mixing parameters. Not every method reads every field.
struct MixParams {
  double alpha = 1.0;           // Beta / Dirichlet concentration
  int num_chains = 3;           // AugMix k
  int chain_depth_max = 3;      // AugMix / YOCO chain length upper bound
  int grid_rows = 0;            // YOCO M (M + 1 rows)
  int grid_cols = 0;            // YOCO N (N + 1 columns)
  double crop_scale_min = 0.25; // CropMix area fraction bounds
  double crop_scale_max = 1.0;
  int num_crops = 3;            // CropMix n
  FoldMode fold_mode = FoldMode::kMixup;

  /// Throws ParameterError naming the first violated constraint.
  void validate() const;
};

}  // namespace mixaug
