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

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mixaug/cli.hpp"
#include "mixaug/dataset.hpp"
#include "mixaug/pipeline.hpp"
#include "test_util.hpp"

namespace mixaug {
namespace {

namespace fs = std::filesystem;
using testing::make_dataset;
using testing::read_tree;
using testing::TempDir;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "mixaug");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, HelpAndUsage) {
  EXPECT_EQ(run({"--help"}).code, kExitOk);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"split"}).code, kExitUsage);
}

TEST(Cli, IngestValidTree) {
  TempDir dir;
  make_dataset(dir.path() / "data", {"cataract", "diabetic_retinopathy", "glaucoma", "normal"}, {1, 1, 1, 1}, 4);
  const auto r = run({"ingest", (dir.path() / "data").string(), "--out", (dir.path() / "m.jsonl").string()});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(read_manifest(dir.path() / "m.jsonl").class_names.size(), 4u);
}

TEST(Cli, IngestMissingDir) {
  TempDir dir;
  const auto r = run({"ingest", (dir.path() / "nope").string(), "--out", (dir.path() / "m.jsonl").string()});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("nope"), std::string::npos);
}

TEST(Cli, IngestCorruptFileWarns) {
  TempDir dir;
  make_dataset(dir.path() / "data", {"a"}, {3}, 4);
  const auto victim = dir.path() / "data" / "a" / "img_002.png";
  const auto bytes = read_file(victim);
  std::ofstream(victim, std::ios::binary | std::ios::trunc) << bytes.substr(0, 20);
  const auto r = run({"ingest", (dir.path() / "data").string(), "--out", (dir.path() / "m.jsonl").string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  EXPECT_EQ(read_manifest(dir.path() / "m.jsonl").entries.size(), 2u);
}

TEST(Cli, SplitRatioAndReplay) {
  TempDir dir;
  make_dataset(dir.path() / "data", {"a", "b"}, {10, 10}, 4);
  const auto m = (dir.path() / "m.jsonl").string();
  ASSERT_EQ(run({"ingest", (dir.path() / "data").string(), "--out", m}).code, kExitOk);
  const std::string pristine = read_file(m);

  EXPECT_EQ(run({"split", m, "--ratio", "1.5"}).code, kExitUsage);
  EXPECT_EQ(run({"split", m, "--ratio", "0"}).code, kExitUsage);
  EXPECT_EQ(read_file(m), pristine);

  ASSERT_EQ(run({"split", m, "--ratio", "0.8", "--seed", "5"}).code, kExitOk);
  const std::string first = read_file(m);
  const auto parsed = read_manifest(m);
  EXPECT_EQ(parsed.indices_of(SplitTag::kTrain).size(), 16u);
  EXPECT_EQ(parsed.indices_of(SplitTag::kTest).size(), 4u);
  ASSERT_EQ(run({"split", m, "--ratio", "0.8", "--seed", "5"}).code, kExitOk);
  EXPECT_EQ(read_file(m), first);
}

TEST(Cli, SeedEnvironmentOverride) {
  TempDir dir;
  make_dataset(dir.path() / "data", {"a"}, {30}, 4);
  const auto m = (dir.path() / "m.jsonl").string();
  ASSERT_EQ(run({"ingest", (dir.path() / "data").string(), "--out", m}).code, kExitOk);
  ASSERT_EQ(run({"split", m, "--seed", "9"}).code, kExitOk);
  const std::string seed9 = read_file(m);
  ::setenv("MIXAUG_SEED", "9", 1);
  const auto r = run({"split", m, "--seed", "1"});
  ::setenv("MIXAUG_SEED", "not-a-number", 1);
  const auto bad = run({"split", m});
  ::unsetenv("MIXAUG_SEED");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(read_file(m), seed9);
  EXPECT_EQ(bad.code, kExitUsage);
}

TEST(Cli, AugmentEndToEnd) {
  TempDir dir;
  make_dataset(dir.path() / "data", {"a", "b"}, {5, 5}, 8);
  const auto m = (dir.path() / "m.jsonl").string();
  ASSERT_EQ(run({"ingest", (dir.path() / "data").string(), "--out", m}).code, kExitOk);
  ASSERT_EQ(run({"split", m, "--seed", "2"}).code, kExitOk);
  const std::vector<std::string> base{"augment", m, "--method", "cropmix", "--resize", "8",
                                      "--seed", "4", "--crop-scale", "0.3:0.9", "--fold-mode", "cutmix"};
  auto args1 = base;
  args1.insert(args1.end(), {"--out", (dir.path() / "o1").string(), "--workers", "1"});
  auto args4 = base;
  args4.insert(args4.end(), {"--out", (dir.path() / "o4").string(), "--workers", "4"});
  const auto r1 = run(args1);
  ASSERT_EQ(r1.code, kExitOk) << r1.err;
  ASSERT_EQ(run(args4).code, kExitOk);
  EXPECT_EQ(read_tree(dir.path() / "o1"), read_tree(dir.path() / "o4"));
  EXPECT_TRUE(fs::exists(dir.path() / "o1" / std::string(kAugmentedManifestName)));
}

TEST(Cli, AugmentParameterErrors) {
  TempDir dir;
  const auto out = (dir.path() / "o").string();
  const auto m = (dir.path() / "m.jsonl").string();
  EXPECT_EQ(run({"augment", m, "--out", out, "--method", "bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"augment", m, "--out", out, "--method", "yoco", "--grid", "2by2"}).code, kExitUsage);
  EXPECT_EQ(run({"augment", m, "--out", out, "--method", "mixup", "--alpha", "-1"}).code, kExitUsage);
  EXPECT_EQ(run({"augment", m, "--out", out, "--method", "snapmix", "--no-cam-fallback"}).code, kExitUsage);
  EXPECT_EQ(run({"augment", m, "--out", out, "--method", "augmix", "--augmix-ops", "nope"}).code, kExitUsage);
  // Valid flags but no manifest on disk: I/O failure.
  EXPECT_EQ(run({"augment", m, "--out", out, "--method", "mixup"}).code, kExitIo);
}

TEST(Cli, MetricsFiles) {
  TempDir dir;
  const auto known = dir.path() / "known.csv";
  std::ofstream(known) << "1,0.1,0.9\n1,0.6,0.4\n0,0.4,0.6\n0,0.9,0.1\n";
  const auto r = run({"metrics", known.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("ROC AUC: 0.750000"), std::string::npos);

  const auto perfect = dir.path() / "perfect.csv";
  std::ofstream(perfect) << "0,0.9,0.1\n1,0.2,0.8\n";
  const auto p = run({"metrics", perfect.string()});
  EXPECT_NE(p.out.find("Accuracy: 1.000000"), std::string::npos);
  EXPECT_NE(p.out.find("F1 Score: 1.000000"), std::string::npos);

  const auto empty = dir.path() / "empty.csv";
  std::ofstream(empty) << "";
  EXPECT_EQ(run({"metrics", empty.string()}).code, kExitUsage);

  const auto bad = dir.path() / "bad.csv";
  std::ofstream(bad) << "0,0.9,0.1\n1,x,0.8\n";
  const auto b = run({"metrics", bad.string()});
  EXPECT_EQ(b.code, kExitUsage);
  EXPECT_NE(b.err.find("line 2"), std::string::npos);

  EXPECT_EQ(run({"metrics", (dir.path() / "missing.csv").string()}).code, kExitIo);
}

TEST(Cli, BenchEmptyAndSmall) {
  const auto empty = run({"bench", "--n-images", "0"});
  EXPECT_EQ(empty.code, kExitOk);
  const auto small = run({"bench", "--n-images", "8", "--side", "16", "--method", "mixup", "--workers", "4"});
  EXPECT_EQ(small.code, kExitOk);
  EXPECT_NE(small.out.find("mixup"), std::string::npos);
  EXPECT_NE(small.out.find("\tyes\n"), std::string::npos);
}

}  // namespace
}  // namespace mixaug
