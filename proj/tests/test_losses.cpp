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

#include <gtest/gtest.h>

#include <cmath>

#include "mixaug/error.hpp"
#include "mixaug/losses.hpp"
#include "mixaug/rng.hpp"

namespace mixaug {
namespace {

// Direct-summation oracle for the three-way Jensen-Shannon divergence.
double js_oracle(const std::vector<double>& p, const std::vector<double>& q, const std::vector<double>& r) {
  double total = 0.0;
  for (const auto* d : {&p, &q, &r}) {
    for (std::size_t c = 0; c < p.size(); ++c) {
      const double m = (p[c] + q[c] + r[c]) / 3.0;
      if ((*d)[c] > 0.0) total += (*d)[c] * std::log((*d)[c] / m);
    }
  }
  return total / 3.0;
}

SoftLabel random_label(SeededRng& rng, std::size_t k) {
  std::vector<double> w(k);
  double s = 0.0;
  for (auto& x : w) s += (x = rng.uniform() + 1e-3);
  for (auto& x : w) x /= s;
  return SoftLabel(w);
}

TEST(JsConsistency, ZeroOnEqualTriples) {
  const SoftLabel p({0.2, 0.3, 0.5});
  EXPECT_EQ(js_consistency(p, p, p), 0.0);
}

TEST(JsConsistency, DisjointPointMassesGiveLn3) {
  const double js = js_consistency(SoftLabel::one_hot(0, 3), SoftLabel::one_hot(1, 3),
                                   SoftLabel::one_hot(2, 3));
  EXPECT_NEAR(js, std::log(3.0), 1e-9);
  EXPECT_NEAR(js_oracle({1, 0, 0}, {0, 1, 0}, {0, 0, 1}), std::log(3.0), 1e-12);
}

TEST(JsConsistency, MatchesOracleAndBounds) {
  SeededRng rng(9);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t k = 2 + rng.uniform_index(5);
    const auto p = random_label(rng, k);
    const auto q = random_label(rng, k);
    const auto r = random_label(rng, k);
    const double js = js_consistency(p, q, r);
    const auto v = [](const SoftLabel& l) { return std::vector<double>(l.weights().begin(), l.weights().end()); };
    ASSERT_NEAR(js, js_oracle(v(p), v(q), v(r)), 1e-9);
    ASSERT_GE(js, 0.0);
    ASSERT_LE(js, std::log(3.0));
  }
}

TEST(JsConsistency, ShapeMismatch) {
  EXPECT_THROW(js_consistency(SoftLabel::one_hot(0, 2), SoftLabel::one_hot(0, 3), SoftLabel::one_hot(0, 2)),
               ShapeError);
}

TEST(SoftCrossEntropy, Examples) {
  EXPECT_EQ(soft_cross_entropy(SoftLabel::one_hot(1, 3), SoftLabel::one_hot(1, 3)), 0.0);
  EXPECT_NEAR(soft_cross_entropy(SoftLabel({0.5, 0.5}), SoftLabel({0.5, 0.5})), std::log(2.0), 1e-12);
  // A zero predicted probability on a target class is floored, not infinite.
  const double floored = soft_cross_entropy(SoftLabel::one_hot(0, 2), SoftLabel::one_hot(1, 2));
  EXPECT_NEAR(floored, -std::log(kLogFloor), 1e-9);
}

TEST(MixedBatchLoss, MeanOfSamples) {
  const std::vector<SoftLabel> preds{SoftLabel({0.5, 0.5}), SoftLabel::one_hot(0, 2)};
  const std::vector<SoftLabel> targets{SoftLabel({0.5, 0.5}), SoftLabel::one_hot(0, 2)};
  EXPECT_NEAR(mixed_batch_loss(preds, targets), std::log(2.0) / 2.0, 1e-12);
  EXPECT_THROW(mixed_batch_loss({}, {}), ParameterError);
  EXPECT_THROW(mixed_batch_loss(preds, std::span<const SoftLabel>(targets).first(1)), ShapeError);
}

}  // namespace
}  // namespace mixaug
