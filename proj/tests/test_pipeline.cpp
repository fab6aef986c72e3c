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

#include <sstream>

#include "json.hpp"
#include "mixaug/dataset.hpp"
#include "mixaug/error.hpp"
#include "mixaug/image_io.hpp"
#include "mixaug/pipeline.hpp"
#include "test_util.hpp"

namespace mixaug {
namespace {

namespace fs = std::filesystem;
using testing::make_dataset;
using testing::read_tree;
using testing::TempDir;

// Ingests and splits a small dataset; returns the manifest path.
fs::path prepare(const fs::path& dir, const std::vector<int>& counts, int side = 16) {
  make_dataset(dir / "data", {"a", "b", "c"}, counts, side);
  const auto manifest = dir / "manifest.jsonl";
  write_manifest(manifest, split(ingest(dir / "data").manifest, 0.8, 3));
  return manifest;
}

std::vector<nlohmann::json> read_rows(const fs::path& path) {
  std::istringstream in(read_file(path));
  std::vector<nlohmann::json> rows;
  for (std::string line; std::getline(in, line);) rows.push_back(nlohmann::json::parse(line));
  return rows;
}

TEST(Method, NamesRoundTrip) {
  for (Method m : all_methods()) EXPECT_EQ(parse_method(to_string(m)), m);
  EXPECT_THROW(parse_method("gridmask"), ParameterError);
  EXPECT_TRUE(is_pairwise(Method::kSnapmix));
  EXPECT_FALSE(is_pairwise(Method::kAugmix));
}

TEST(ApplyMethod, PairwiseNeedsPartner) {
  const auto img = testing::constant_image(1, 4, 4, 0.5f);
  const auto y = SoftLabel::one_hot(0, 2);
  SeededRng rng(1);
  EXPECT_THROW(apply_method(Method::kMixup, {}, {&img, &y, nullptr}, {}, rng), ParameterError);
}

TEST(ApplyMethod, YocoGridWithIdentityPool) {
  SeededRng data(2);
  const auto img = testing::random_image(data, 3, 9, 9);
  const auto y = SoftLabel::one_hot(0, 2);
  MethodOptions opts;
  opts.yoco_pool = {OpKind::kRotate};
  opts.params.chain_depth_max = 1;
  opts.params.grid_rows = 2;
  opts.params.grid_cols = 1;
  SeededRng rng(3);
  const auto out = apply_method(Method::kYoco, opts, {&img, &y, nullptr}, {}, rng);
  EXPECT_EQ(out.image.shape(), img.shape());
  EXPECT_EQ(out.label, y);
}

TEST(RunConfig, SnapmixWithoutCamsAndNoFallback) {
  RunConfig cfg;
  cfg.method = Method::kSnapmix;
  cfg.manifest = "m.jsonl";
  cfg.out_dir = "out";
  cfg.cam_fallback = false;
  EXPECT_THROW(cfg.validate(), ParameterError);
  cfg.cam_dir = fs::path("cams");
  EXPECT_NO_THROW(cfg.validate());
}

TEST(RunAugment, BaselineCopiesPixels) {
  TempDir dir;
  const auto manifest = prepare(dir.path(), {5, 5, 5});
  RunConfig cfg;
  cfg.manifest = manifest;
  cfg.out_dir = dir.path() / "out";
  cfg.resize_side = 0;
  const auto summary = run_augment(cfg);
  EXPECT_EQ(summary.train_outputs, 12u);
  EXPECT_EQ(summary.test_outputs, 3u);
  const auto m = read_manifest(manifest);
  for (const auto& row : read_rows(cfg.out_dir / kAugmentedManifestName)) {
    if (!row.contains("path")) continue;
    const auto out_img = read_image(cfg.out_dir / row["path"].get<std::string>());
    const auto src_img = read_image(fs::path(m.root) / row["source"].get<std::string>());
    EXPECT_TRUE(out_img.bitwise_equal(src_img)) << row["path"];
  }
}

TEST(RunAugment, MixupMultiplierRowsAndMass) {
  TempDir dir;
  const auto manifest = prepare(dir.path(), {40, 45, 40}, 8);
  RunConfig cfg;
  cfg.method = Method::kMixup;
  cfg.manifest = manifest;
  cfg.out_dir = dir.path() / "out";
  cfg.multiplier = 2;
  cfg.resize_side = 8;
  const auto summary = run_augment(cfg);
  EXPECT_EQ(summary.train_outputs, 200u);
  std::size_t train_rows = 0;
  for (const auto& row : read_rows(cfg.out_dir / kAugmentedManifestName)) {
    if (row.value("split", "") != "train") continue;
    ++train_rows;
    double sum = 0.0;
    for (double w : row["label"]) sum += w;
    EXPECT_NEAR(sum, 1.0, 1e-6);
    EXPECT_FALSE(row["partner"].is_null());
  }
  EXPECT_EQ(train_rows, 200u);
}

TEST(RunAugment, ReplayIsByteIdenticalAcrossWorkers) {
  TempDir dir;
  const auto manifest = prepare(dir.path(), {4, 4, 4});
  for (Method method : {Method::kCutmix, Method::kAugmix, Method::kYoco}) {
    RunConfig cfg;
    cfg.method = method;
    cfg.manifest = manifest;
    cfg.resize_side = 12;
    cfg.options.augmix_consistency = true;
    cfg.out_dir = dir.path() / "one";
    cfg.workers = 1;
    run_augment(cfg);
    cfg.out_dir = dir.path() / "four";
    cfg.workers = 4;
    run_augment(cfg);
    EXPECT_EQ(read_tree(dir.path() / "one"), read_tree(dir.path() / "four")) << to_string(method);
    fs::remove_all(dir.path() / "one");
    fs::remove_all(dir.path() / "four");
  }
}

TEST(RunAugment, SnapmixUsesCamDirAndCountsFallbacks) {
  TempDir dir;
  const auto manifest = prepare(dir.path(), {3, 3, 3}, 8);
  const auto m = read_manifest(manifest);
  // Provide maps for class "a" only.
  for (const auto& e : m.entries) {
    if (e.class_index != 0) continue;
    SaliencyMap cam{4, 4, std::vector<double>(16, 1.0), false};
    write_saliency_png(dir.path() / "cams" / e.path, cam);
  }
  RunConfig cfg;
  cfg.method = Method::kSnapmix;
  cfg.manifest = manifest;
  cfg.out_dir = dir.path() / "out";
  cfg.resize_side = 8;
  cfg.cam_dir = dir.path() / "cams";
  const auto summary = run_augment(cfg);
  EXPECT_GT(summary.cam_fallbacks, 0u);

  cfg.cam_fallback = false;
  cfg.out_dir = dir.path() / "out2";
  EXPECT_THROW(run_augment(cfg), IoError);
}

TEST(RunAugment, RequiresSplitManifest) {
  TempDir dir;
  make_dataset(dir.path() / "data", {"a"}, {2}, 4);
  write_manifest(dir.path() / "m.jsonl", ingest(dir.path() / "data").manifest);
  RunConfig cfg;
  cfg.manifest = dir.path() / "m.jsonl";
  cfg.out_dir = dir.path() / "out";
  EXPECT_THROW(run_augment(cfg), ParameterError);
}

TEST(Bench, EmptyRunAndWorkerInvariance) {
  BenchConfig cfg;
  cfg.n_images = 0;
  EXPECT_TRUE(run_bench(cfg).empty());

  cfg.n_images = 40;
  cfg.side = 32;
  cfg.workers = 4;
  const auto results = run_bench(cfg);
  ASSERT_EQ(results.size(), all_methods().size());
  for (const auto& r : results) {
    EXPECT_EQ(r.checksum_single, r.checksum_parallel) << to_string(r.method);
    EXPECT_EQ(r.images, 40u);
  }
  const auto text = format_bench(results);
  EXPECT_EQ(text.find("\tNO\n"), std::string::npos);
}

TEST(Bench, ChecksumDependsOnSeed) {
  BenchConfig cfg;
  cfg.methods = {Method::kMixup};
  cfg.n_images = 8;
  cfg.side = 16;
  const auto a = run_bench(cfg);
  cfg.seed = 1;
  const auto b = run_bench(cfg);
  EXPECT_NE(a[0].checksum_single, b[0].checksum_single);
}

TEST(Bench, MixupIsTenTimesFasterThanAugmix) {
  BenchConfig cfg;
  cfg.methods = {Method::kMixup, Method::kAugmix};
  cfg.n_images = 60;
  cfg.side = 224;
  cfg.workers = 1;
  const auto results = run_bench(cfg);
  ASSERT_EQ(results.size(), 2u);
  EXPECT_GE(results[1].seconds_single / results[0].seconds_single, 10.0)
      << "mixup " << results[0].seconds_single << " s, augmix " << results[1].seconds_single << " s";
}

TEST(SyntheticImage, DeterministicAndInRange) {
  const auto a = synthetic_image(1, 2, 3, 20);
  EXPECT_TRUE(a.bitwise_equal(synthetic_image(1, 2, 3, 20)));
  EXPECT_FALSE(a.bitwise_equal(synthetic_image(1, 3, 3, 20)));
}

}  // namespace
}  // namespace mixaug
