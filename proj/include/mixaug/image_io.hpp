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

#include <filesystem>

#include "mixaug/saliency.hpp"
#include "mixaug/tensor.hpp"

namespace mixaug {

/// True for .png / .jpg / .jpeg (case-insensitive).
bool is_image_file(const std::filesystem::path& path);

/// Decodes PNG/JPEG into [0,1] floats (8-bit / 255, 16-bit / 65535). Alpha is
/// dropped; gray stays 1 channel, color becomes RGB. Throws IoError.
ImageTensor read_image(const std::filesystem::path& path);

/// Reads a grayscale activation map (8- or 16-bit) as a raw saliency map.
SaliencyMap read_saliency(const std::filesystem::path& path);

/// Writes an 8-bit PNG (values rounded to the nearest of 256 levels).
void write_png(const std::filesystem::path& path, const ImageTensor& img);

/// Writes a 16-bit grayscale PNG of a saliency map scaled by its maximum.
void write_saliency_png(const std::filesystem::path& path, const SaliencyMap& map);

}  // namespace mixaug
