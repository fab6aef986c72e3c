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

#include "mixaug/saliency.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "mixaug/error.hpp"

namespace mixaug {

void SaliencyMap::validate() const {
  if (height < 1 || width < 1 ||
      values.size() != static_cast<std::size_t>(height) * static_cast<std::size_t>(width)) {
    throw ShapeError("saliency map buffer does not match " + std::to_string(height) + "x" +
                     std::to_string(width));
  }
  for (double v : values) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw ParameterError("saliency values must be finite and non-negative");
    }
  }
  if (normalized && std::abs(mass() - 1.0) > 1e-6) {
    throw ParameterError("normalized saliency map sums to " + std::to_string(mass()));
  }
}

double SaliencyMap::mass() const { return std::accumulate(values.begin(), values.end(), 0.0); }

SaliencyMap make_spm(const SaliencyMap& cam) {
  SaliencyMap raw = cam;
  raw.normalized = false;
  raw.validate();

  SaliencyMap spm{cam.height, cam.width, std::vector<double>(cam.values.size()), true};
  const double total = raw.mass();
  if (total == 0.0) {
    const double u = 1.0 / static_cast<double>(spm.values.size());
    std::fill(spm.values.begin(), spm.values.end(), u);
  } else {
    for (std::size_t i = 0; i < spm.values.size(); ++i) spm.values[i] = cam.values[i] / total;
  }
  return spm;
}

double semantic_ratio(const SaliencyMap& spm, const BoxMask& region) {
  if (!spm.normalized) throw ParameterError("semantic_ratio needs a normalized map");
  region.validate();
  if (region.image_w != spm.width || region.image_h != spm.height) {
    throw ShapeError("region frame does not match saliency map");
  }
  double sum = 0.0;
  for (int y = region.y0; y < region.y0 + region.h; ++y) {
    const double* row = spm.values.data() + static_cast<std::size_t>(y) * spm.width;
    for (int x = region.x0; x < region.x0 + region.w; ++x) sum += row[x];
  }
  return sum;
}

SaliencyMap resize_saliency(const SaliencyMap& map, int height, int width) {
  map.validate();
  if (map.height == height && map.width == width) return map;
  return {height, width, resize_plane(map.values, map.height, map.width, height, width), false};
}

SaliencyMap intensity_saliency(const ImageTensor& img) {
  const std::size_t plane = img.shape().plane();
  const auto src = img.data();
  SaliencyMap out{img.height(), img.width(), std::vector<double>(plane), false};
  for (std::size_t p = 0; p < plane; ++p) {
    out.values[p] = img.channels() == 3
                        ? 0.299 * src[p] + 0.587 * src[plane + p] + 0.114 * src[2 * plane + p]
                        : static_cast<double>(src[p]);
  }
  return out;
}

}  // namespace mixaug
