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
#include <limits>

#include "mixaug/error.hpp"
#include "mixaug/tensor.hpp"
#include "test_util.hpp"

namespace mixaug {
namespace {

using testing::constant_image;
using testing::random_image;

TEST(ImageTensor, ValidatesShapeAndRange) {
  EXPECT_THROW(ImageTensor(2, 4, 4, std::vector<float>(32, 0.f)), ShapeError);
  EXPECT_THROW(ImageTensor(1, 0, 4, {}), ShapeError);
  EXPECT_THROW(ImageTensor(1, 2, 2, std::vector<float>(3, 0.f)), ShapeError);
  EXPECT_THROW(ImageTensor(1, 1, 1, {1.5f}), ParameterError);
  EXPECT_THROW(ImageTensor(1, 1, 1, {-0.1f}), ParameterError);
  EXPECT_THROW(ImageTensor(1, 1, 1, {std::numeric_limits<float>::quiet_NaN()}), ParameterError);
  EXPECT_NO_THROW(ImageTensor(3, 2, 2, std::vector<float>(12, 1.f)));
}

TEST(ImageTensor, PlanarLayout) {
  std::vector<float> data(2 * 3 * 3);
  for (std::size_t i = 0; i < data.size(); ++i) data[i] = static_cast<float>(i) / 20.f;
  const ImageTensor img(3, 2, 3, data);
  EXPECT_FLOAT_EQ(img.at(1, 1, 2), data[(1 * 2 + 1) * 3 + 2]);
  EXPECT_EQ(img.plane(2).size(), 6u);
  EXPECT_FLOAT_EQ(img.plane(2)[0], data[12]);
}

TEST(SoftLabel, Validation) {
  EXPECT_THROW(SoftLabel({0.5, 0.4}), ParameterError);
  EXPECT_THROW(SoftLabel({1.5, -0.5}), ParameterError);
  EXPECT_THROW(SoftLabel({}), ParameterError);
  EXPECT_NO_THROW(SoftLabel({0.25, 0.75}));
  EXPECT_THROW(SoftLabel::one_hot(3, 3), ParameterError);
  const auto y = SoftLabel::one_hot(1, 3);
  EXPECT_EQ(y.num_classes(), 3u);
  EXPECT_EQ(y[1], 1.0);
  EXPECT_EQ(y.sum(), 1.0);
}

TEST(ConvexCombine, Endpoints) {
  SeededRng rng(3);
  const auto a = random_image(rng, 3, 8, 9);
  const auto b = random_image(rng, 3, 8, 9);
  EXPECT_TRUE(convex_combine(a, b, 1.0).bitwise_equal(a));
  EXPECT_TRUE(convex_combine(a, b, 0.0).bitwise_equal(b));
}

TEST(ConvexCombine, ConstantsBlend) {
  const auto out = convex_combine(constant_image(1, 4, 4, 0.2f), constant_image(1, 4, 4, 0.6f), 0.25);
  // Scalar oracle: 0.25 * 0.2 + 0.75 * 0.6 = 0.5.
  for (float v : out.data()) EXPECT_NEAR(v, 0.5f, 1e-6f);
}

TEST(ConvexCombine, Errors) {
  const auto a = constant_image(1, 4, 4, 0.2f);
  EXPECT_THROW(convex_combine(a, constant_image(1, 4, 5, 0.2f), 0.5), ShapeError);
  EXPECT_THROW(convex_combine(a, constant_image(3, 4, 4, 0.2f), 0.5), ShapeError);
  EXPECT_THROW(convex_combine(a, a, 1.5), ParameterError);
  EXPECT_THROW(convex_combine(a, a, -0.1), ParameterError);
}

TEST(ConvexCombine, StaysInsideEnvelope) {
  SeededRng rng(4);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_image(rng, 3, 5, 5);
    const auto b = random_image(rng, 3, 5, 5);
    const double lambda = rng.uniform();
    const auto out = convex_combine(a, b, lambda);
    for (std::size_t i = 0; i < out.size(); ++i) {
      ASSERT_GE(out.data()[i], std::min(a.data()[i], b.data()[i]));
      ASSERT_LE(out.data()[i], std::max(a.data()[i], b.data()[i]));
    }
  }
}

TEST(MixLabels, LinearBlend) {
  const auto out = mix_labels(SoftLabel::one_hot(0, 4), SoftLabel::one_hot(2, 4), 0.30);
  EXPECT_EQ(out[0], 0.30);
  EXPECT_EQ(out[1], 0.0);
  EXPECT_EQ(out[2], 1.0 - 0.30);
  EXPECT_EQ(out[3], 0.0);
  EXPECT_THROW(mix_labels(SoftLabel::one_hot(0, 3), SoftLabel::one_hot(0, 4), 0.5), ShapeError);
}

}  // namespace
}  // namespace mixaug
