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

#include "mixaug/mix.hpp"
#include "mixaug/params.hpp"
#include "mixaug/primitives.hpp"

namespace mixaug {

enum class Method { kBaseline, kMixup, kYoco, kCropmix, kCutmix, kAugmix, kSnapmix };

std::string_view to_string(Method method);
Method parse_method(std::string_view name);
std::vector<Method> all_methods();
/// MixUp, CutMix and SnapMix draw a partner sample.
bool is_pairwise(Method method);

struct MethodOptions {
  MixParams params;
  std::vector<OpKind> augmix_pool = default_augmix_pool();
  std::vector<OpKind> yoco_pool = default_yoco_pool();
  bool augmix_consistency = false;
};

/// One input to a method; `cam` may be null (SnapMix then uses intensity saliency).
struct Operand {
  const ImageTensor* image = nullptr;
  const SoftLabel* label = nullptr;
  const SaliencyMap* cam = nullptr;
};

/**
 * Runs `method` on anchor `a` (and partner `b` for pairwise methods). YOCO
 * builds its per-part chains from the yoco pool and uses the grid when
 * grid_rows or grid_cols is non-zero, the random two-way split otherwise.
 */
MixOutput apply_method(Method method, const MethodOptions& opts, const Operand& a,
                       const Operand& b, SeededRng& rng);

// Per-sample stream layout: SeededRng(seed, {sample, repeat}); fork 0 picks
// the partner, fork 1 drives the method.
inline constexpr std::uint64_t kPartnerStream = 0;
inline constexpr std::uint64_t kMethodStream = 1;

struct RunConfig {
  Method method = Method::kBaseline;
  MethodOptions options;
  std::uint64_t seed = 0;
  std::filesystem::path manifest;
  std::filesystem::path out_dir;
  int multiplier = 1;
  int resize_side = 224;  // 0 keeps native resolution
  int workers = 1;
  std::optional<std::filesystem::path> cam_dir;
  bool cam_fallback = true;

  /// Throws ParameterError; performs no I/O.
  void validate() const;
};

struct AugmentSummary {
  std::size_t train_outputs = 0;
  std::size_t test_outputs = 0;
  std::size_t cam_fallbacks = 0;
};

/// Name of the output manifest written into RunConfig::out_dir.
inline constexpr std::string_view kAugmentedManifestName = "augmented.jsonl";

/**
 * ingest -> split -> augment: loads a split manifest, writes
 * multiplier augmented images per train entry under train/<class>/ and a
 * resized copy of every test entry under test/<class>/, then an output
 * manifest with soft labels and replay streams. Output bytes do not depend
 * on the worker count.
 */
AugmentSummary run_augment(const RunConfig& config);

struct BenchConfig {
  std::vector<Method> methods = all_methods();
  MethodOptions options;
  std::size_t n_images = 1000;
  int side = 224;
  int channels = 3;
  int workers = 4;
  std::uint64_t seed = 0;
};

struct BenchResult {
  Method method = Method::kBaseline;
  std::size_t images = 0;
  double seconds_single = 0.0;
  double seconds_parallel = 0.0;
  int workers = 1;
  std::uint64_t checksum_single = 0;
  std::uint64_t checksum_parallel = 0;

  double throughput_single() const { return seconds_single > 0 ? images / seconds_single : 0.0; }
  double throughput_parallel() const {
    return seconds_parallel > 0 ? images / seconds_parallel : 0.0;
  }
};

/// Deterministic synthetic test image (smooth gradients plus a blob).
ImageTensor synthetic_image(std::uint64_t seed, std::uint64_t index, int channels, int side);

/// FNV-1a over pixel words, label bytes and lambda_effective.
std::uint64_t output_checksum(const MixOutput& out);

/// Times every method over n synthetic images at 1 and `workers` threads.
std::vector<BenchResult> run_bench(const BenchConfig& config);
std::string format_bench(const std::vector<BenchResult>& results);

}  // namespace mixaug
