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

#include "mixaug/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>

#include "mixaug/error.hpp"

namespace mixaug {

std::string Shape::str() const {
  return "(" + std::to_string(channels) + "," + std::to_string(height) + "," +
         std::to_string(width) + ")";
}

ImageTensor::ImageTensor(Shape shape, std::vector<float> data)
    : shape_(shape), data_(std::move(data)) {
  if (shape_.channels != 1 && shape_.channels != 3) {
    throw ShapeError("image must have 1 or 3 channels, got " + std::to_string(shape_.channels));
  }
  if (shape_.height < 1 || shape_.width < 1) {
    throw ShapeError("image extent must be positive, got " + shape_.str());
  }
  if (data_.size() != shape_.size()) {
    throw ShapeError("buffer length " + std::to_string(data_.size()) + " does not match shape " +
                     shape_.str());
  }
  for (float v : data_) {
    if (!(v >= 0.0f && v <= 1.0f)) {
      throw ParameterError("pixel value outside [0,1]: " + std::to_string(v));
    }
  }
}

ImageTensor ImageTensor::filled(Shape shape, float value) {
  return ImageTensor(shape, std::vector<float>(shape.size(), value));
}

bool ImageTensor::bitwise_equal(const ImageTensor& other) const noexcept {
  return shape_ == other.shape_ &&
         std::memcmp(data_.data(), other.data_.data(), data_.size() * sizeof(float)) == 0;
}

SoftLabel::SoftLabel(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw ParameterError("soft label needs at least one class");
  for (double w : weights_) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw ParameterError("soft label weight must be finite and non-negative");
    }
  }
  if (std::abs(sum() - 1.0) > 1e-6) {
    throw ParameterError("soft label weights sum to " + std::to_string(sum()) + ", expected 1");
  }
}

SoftLabel SoftLabel::one_hot(std::size_t cls, std::size_t num_classes) {
  if (cls >= num_classes) {
    throw ParameterError("class index " + std::to_string(cls) + " out of range for " +
                         std::to_string(num_classes) + " classes");
  }
  std::vector<double> w(num_classes, 0.0);
  w[cls] = 1.0;
  return SoftLabel(std::move(w));
}

double SoftLabel::sum() const noexcept {
  return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

ImageTensor convex_combine(const ImageTensor& a, const ImageTensor& b, double lambda) {
  if (a.shape() != b.shape()) {
    throw ShapeError("convex_combine: shape " + a.shape().str() + " vs " + b.shape().str());
  }
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw ParameterError("convex_combine: lambda must lie in [0,1]");
  }
  const double mu = 1.0 - lambda;
  const auto pa = a.data();
  const auto pb = b.data();
  std::vector<float> out(pa.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double v = lambda * pa[i] + mu * pb[i];
    out[i] = std::clamp(static_cast<float>(v), 0.0f, 1.0f);
  }
  return ImageTensor(a.shape(), std::move(out));
}

SoftLabel mix_labels(const SoftLabel& ya, const SoftLabel& yb, double lambda) {
  if (ya.num_classes() != yb.num_classes()) {
    throw ShapeError("label class counts differ: " + std::to_string(ya.num_classes()) + " vs " +
                     std::to_string(yb.num_classes()));
  }
  const double mu = 1.0 - lambda;
  std::vector<double> w(ya.num_classes());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = lambda * ya[i] + mu * yb[i];
  return SoftLabel(std::move(w));
}

}  // namespace mixaug
