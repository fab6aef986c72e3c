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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mixaug/tensor.hpp"

namespace mixaug {

enum class SplitTag { kUnassigned, kTrain, kTest };

std::string_view to_string(SplitTag tag);
SplitTag parse_split_tag(std::string_view text);

struct ManifestEntry {
  std::string path;  // relative to Manifest::root, '/' separated
  std::size_t class_index = 0;
  SplitTag split = SplitTag::kUnassigned;

  bool operator==(const ManifestEntry&) const = default;
};

/// Class-foldered corpus listing plus its train/test assignment.
struct Manifest {
  std::string root;
  std::vector<std::string> class_names;
  std::vector<ManifestEntry> entries;
  std::optional<std::uint64_t> seed;
  std::optional<double> split_ratio;

  /// Throws ParameterError on out-of-range class indices.
  void validate() const;
  /// Every entry carries a train or test tag.
  bool is_split() const;
  std::vector<std::size_t> indices_of(SplitTag tag) const;

  bool operator==(const Manifest&) const = default;
};

struct IngestResult {
  Manifest manifest;
  std::vector<std::string> warnings;
};

/**
 * Scans `root` for one subdirectory per class. Classes and files are sorted
 * lexicographically; every candidate image is decoded once and undecodable
 * files are skipped with a warning. Empty class directories stay in
 * class_names and produce a warning. Throws IoError if root is not a
 * readable directory.
 */
IngestResult ingest(const std::filesystem::path& root);

/// Per-class stratified shuffle: floor(ratio·n_c) go to train, keeping at
/// least one test sample when n_c >= 2; a singleton class goes to train.
Manifest split(const Manifest& manifest, double ratio, std::uint64_t seed);

struct SampleRecord {
  ImageTensor image;
  SoftLabel label;
  std::string source_path;
};

/// Absolute path of an entry.
std::filesystem::path entry_path(const Manifest& manifest, std::size_t index);

/// Decodes entry `index`; when resize_side > 0 the image is bilinearly
/// resized to resize_side x resize_side. Throws IoError with the path.
SampleRecord load_sample(const Manifest& manifest, std::size_t index, int resize_side = 0);

/// Header line + one JSON record per entry, '\n' terminated.
std::string serialize_manifest(const Manifest& manifest);
/// Throws FormatError with the 1-based line number.
Manifest parse_manifest(std::string_view text);

Manifest read_manifest(const std::filesystem::path& path);
void write_manifest(const std::filesystem::path& path, const Manifest& manifest);

/// Writes via a sibling temporary file and rename.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);
std::string read_file(const std::filesystem::path& path);

}  // namespace mixaug
