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

#include "mixaug/tensor.hpp"

namespace mixaug {

/// Probabilities are floored at this value before taking logs.
inline constexpr double kLogFloor = 1e-12;

/// Three-way Jensen-Shannon divergence, natural log:
/// mean of KL(p_i || M) with M the average of the three distributions.
double js_consistency(const SoftLabel& p_orig, const SoftLabel& p1, const SoftLabel& p2);

/// −Σ target_c · ln(max(pred_c, 1e-12)). `pred` is a post-softmax vector.
double soft_cross_entropy(const SoftLabel& pred, const SoftLabel& target);

/// Batch mean of soft_cross_entropy over paired predictions and mixed targets.
double mixed_batch_loss(std::span<const SoftLabel> preds, std::span<const SoftLabel> targets);

}  // namespace mixaug
