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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace mixaug {

struct Shape {
  int channels = 0;
  int height = 0;
  int width = 0;

  std::size_t size() const noexcept {
    return static_cast<std::size_t>(channels) * static_cast<std::size_t>(height) *
           static_cast<std::size_t>(width);
  }
  std::size_t plane() const noexcept {
    return static_cast<std::size_t>(height) * static_cast<std::size_t>(width);
  }
  bool operator==(const Shape&) const = default;
  std::string str() const;
};

/**
 * @brief C x H x W float image with values in [0, 1], row-major per channel.
 *
 * Construction validates the invariants (1 or 3 channels, non-empty spatial
 * extent, matching buffer length, every value in [0, 1]); a constructed
 * tensor is immutable.
 */
class ImageTensor {
 public:
  ImageTensor(Shape shape, std::vector<float> data);
  ImageTensor(int channels, int height, int width, std::vector<float> data)
      : ImageTensor(Shape{channels, height, width}, std::move(data)) {}

  static ImageTensor filled(Shape shape, float value);

  const Shape& shape() const noexcept { return shape_; }
  int channels() const noexcept { return shape_.channels; }
  int height() const noexcept { return shape_.height; }
  int width() const noexcept { return shape_.width; }
  std::size_t size() const noexcept { return data_.size(); }

  std::span<const float> data() const noexcept { return data_; }
  std::span<const float> plane(int c) const noexcept {
    return std::span<const float>(data_).subspan(static_cast<std::size_t>(c) * shape_.plane(),
                                                 shape_.plane());
  }
  float at(int c, int y, int x) const noexcept {
    return data_[(static_cast<std::size_t>(c) * shape_.height + y) * shape_.width + x];
  }

  /// Moves the buffer out; the tensor is left empty.
  std::vector<float> release() && { return std::move(data_); }

  /// Exact equality of every stored float bit pattern.
  bool bitwise_equal(const ImageTensor& other) const noexcept;

 private:
  Shape shape_;
  std::vector<float> data_;
};

/// Per-class probability vector. Non-negative weights summing to 1 (1e-6).
class SoftLabel {
 public:
  explicit SoftLabel(std::vector<double> weights);

  static SoftLabel one_hot(std::size_t cls, std::size_t num_classes);

  std::size_t num_classes() const noexcept { return weights_.size(); }
  std::span<const double> weights() const noexcept { return weights_; }
  double operator[](std::size_t i) const noexcept { return weights_[i]; }
  double sum() const noexcept;

  bool operator==(const SoftLabel&) const = default;

 private:
  std::vector<double> weights_;
};

/// Ĩ = λ·a + (1 − λ)·b per pixel. Throws ShapeError on mismatch.
ImageTensor convex_combine(const ImageTensor& a, const ImageTensor& b, double lambda);

/// ỹ = λ·ya + (1 − λ)·yb. Throws ShapeError if class counts differ.
SoftLabel mix_labels(const SoftLabel& ya, const SoftLabel& yb, double lambda);

}  // namespace mixaug
