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
#include "mixaug/tensor.hpp"

namespace mixaug {

/// Non-negative per-pixel saliency. When `normalized` is set the values sum
/// to 1 and the map is a semantic percent map (SPM).
struct SaliencyMap {
  int height = 0;
  int width = 0;
  std::vector<double> values;
  bool normalized = false;

  /// Throws ShapeError / ParameterError on a broken map.
  void validate() const;
  double mass() const;
};

/// CAM -> SPM. A zero-mass map becomes the uniform map.
SaliencyMap make_spm(const SaliencyMap& cam);

/// SPM mass inside `region`. Throws ParameterError for an unnormalized map.
double semantic_ratio(const SaliencyMap& spm, const BoxMask& region);

/// Bilinear resample of the map onto height x width (drops normalization).
SaliencyMap resize_saliency(const SaliencyMap& map, int height, int width);

/// Per-pixel luminance (Rec. 601 weights for RGB), used when no CAM is given.
SaliencyMap intensity_saliency(const ImageTensor& img);

}  // namespace mixaug
