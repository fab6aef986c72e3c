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

#include "mixaug/params.hpp"

#include <cmath>
#include <string>

#include "mixaug/error.hpp"

namespace mixaug {

FoldMode parse_fold_mode(std::string_view text) {
  if (text == "mixup") return FoldMode::kMixup;
  if (text == "cutmix") return FoldMode::kCutmix;
  throw ParameterError("unknown fold mode '" + std::string(text) + "' (expected mixup|cutmix)");
}

std::string_view to_string(FoldMode mode) {
  return mode == FoldMode::kMixup ? "mixup" : "cutmix";
}

void MixParams::validate() const {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ParameterError("alpha must be > 0");
  if (num_chains < 1) throw ParameterError("number of chains must be >= 1");
  if (chain_depth_max < 1) throw ParameterError("chain depth must be >= 1");
  if (grid_rows < 0 || grid_cols < 0) throw ParameterError("grid dimensions must be >= 0");
  if (!(crop_scale_min > 0.0 && crop_scale_min <= crop_scale_max && crop_scale_max <= 1.0)) {
    throw ParameterError("crop scales must satisfy 0 < min <= max <= 1");
  }
  if (num_crops < 2) throw ParameterError("cropmix needs at least 2 crops");
}

}  // namespace mixaug
