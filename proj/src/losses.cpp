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

#include "mixaug/losses.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mixaug/error.hpp"

namespace mixaug {
namespace {

void require_same_classes(const SoftLabel& a, const SoftLabel& b, const char* what) {
  if (a.num_classes() != b.num_classes()) {
    throw ShapeError(std::string(what) + ": class counts differ (" +
                     std::to_string(a.num_classes()) + " vs " + std::to_string(b.num_classes()) +
                     ")");
  }
}

double kl_to_mixture(const SoftLabel& p, std::span<const double> m) {
  double kl = 0.0;
  for (std::size_t c = 0; c < m.size(); ++c) {
    const double pc = std::max(p[c], kLogFloor);
    kl += p[c] * (std::log(pc) - std::log(std::max(m[c], kLogFloor)));
  }
  return kl;
}

}  // namespace

double js_consistency(const SoftLabel& p_orig, const SoftLabel& p1, const SoftLabel& p2) {
  require_same_classes(p_orig, p1, "js_consistency");
  require_same_classes(p_orig, p2, "js_consistency");
  std::vector<double> m(p_orig.num_classes());
  for (std::size_t c = 0; c < m.size(); ++c) m[c] = (p_orig[c] + p1[c] + p2[c]) / 3.0;
  const double js = (kl_to_mixture(p_orig, m) + kl_to_mixture(p1, m) + kl_to_mixture(p2, m)) / 3.0;
  // Rounding can push the value a few ulps outside [0, ln 3].
  return std::clamp(js, 0.0, std::log(3.0));
}

double soft_cross_entropy(const SoftLabel& pred, const SoftLabel& target) {
  require_same_classes(pred, target, "soft_cross_entropy");
  double loss = 0.0;
  for (std::size_t c = 0; c < pred.num_classes(); ++c) {
    if (target[c] != 0.0) loss -= target[c] * std::log(std::max(pred[c], kLogFloor));
  }
  return std::max(loss, 0.0);
}

double mixed_batch_loss(std::span<const SoftLabel> preds, std::span<const SoftLabel> targets) {
  if (preds.size() != targets.size()) throw ShapeError("mixed_batch_loss: batch sizes differ");
  if (preds.empty()) throw ParameterError("mixed_batch_loss: empty batch");
  double total = 0.0;
  for (std::size_t i = 0; i < preds.size(); ++i) total += soft_cross_entropy(preds[i], targets[i]);
  return total / static_cast<double>(preds.size());
}

}  // namespace mixaug
