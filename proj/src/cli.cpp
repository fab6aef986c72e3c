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

#include "mixaug/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mixaug/dataset.hpp"
#include "mixaug/error.hpp"
#include "mixaug/metrics.hpp"
#include "mixaug/pipeline.hpp"

namespace mixaug {
namespace fs = std::filesystem;
namespace {

constexpr const char* kSeedEnv = "MIXAUG_SEED";

std::uint64_t parse_seed_env(std::uint64_t fallback) {
  const char* env = std::getenv(kSeedEnv);
  if (env == nullptr || *env == '\0') return fallback;
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(env, &used, 10);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || env[used] != '\0') {
    throw ParameterError(std::string(kSeedEnv) + " is not an unsigned integer: '" + env + "'");
  }
  return v;
}

std::pair<int, int> parse_grid(const std::string& text) {
  const auto x = text.find_first_of("xX");
  if (x == std::string::npos) throw ParameterError("--grid expects MxN, got '" + text + "'");
  try {
    std::size_t u1 = 0;
    std::size_t u2 = 0;
    const int m = std::stoi(text.substr(0, x), &u1);
    const int n = std::stoi(text.substr(x + 1), &u2);
    if (u1 != x || u2 != text.size() - x - 1) throw ParameterError("trailing characters");
    return {m, n};
  } catch (const std::exception&) {
    throw ParameterError("--grid expects MxN, got '" + text + "'");
  }
}

std::pair<double, double> parse_crop_scale(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParameterError("--crop-scale expects lo:hi, got '" + text + "'");
  try {
    std::size_t u1 = 0;
    std::size_t u2 = 0;
    const double lo = std::stod(text.substr(0, colon), &u1);
    const double hi = std::stod(text.substr(colon + 1), &u2);
    if (u1 != colon || u2 != text.size() - colon - 1) throw ParameterError("trailing characters");
    return {lo, hi};
  } catch (const std::exception&) {
    throw ParameterError("--crop-scale expects lo:hi, got '" + text + "'");
  }
}

std::vector<OpKind> parse_pool(const std::vector<std::string>& names) {
  std::vector<OpKind> out;
  for (const auto& n : names) {
    const auto kind = parse_op_kind(n);
    if (!kind) throw ParameterError("unknown primitive op '" + n + "'");
    out.push_back(*kind);
  }
  return out;
}

// Flags shared by `augment` and `bench`.
struct MethodFlags {
  std::string method = "baseline";
  double alpha = 1.0;
  int chains = 3;
  int depth = 3;
  int crops = 3;
  std::string grid = "0x0";
  std::string crop_scale = "0.25:1";
  std::string fold_mode = "mixup";
  std::vector<std::string> augmix_ops;
  std::vector<std::string> yoco_ops;
  bool consistency = false;

  void attach(CLI::App* cmd, bool method_required) {
    auto* m = cmd->add_option("--method", method,
                              "baseline|mixup|yoco|cropmix|cutmix|augmix|snapmix");
    if (method_required) m->required();
    cmd->add_option("--alpha", alpha, "Beta/Dirichlet concentration");
    cmd->add_option("--chains", chains, "AugMix chain count k");
    cmd->add_option("--depth", depth, "maximum chain depth");
    cmd->add_option("--crops", crops, "CropMix crop count");
    cmd->add_option("--grid", grid, "YOCO grid MxN ((M+1)x(N+1) cells; 0x0 = two-way split)");
    cmd->add_option("--crop-scale", crop_scale, "CropMix area scale range lo:hi");
    cmd->add_option("--fold-mode", fold_mode, "CropMix fold: mixup|cutmix");
    cmd->add_option("--augmix-ops", augmix_ops, "AugMix op pool");
    cmd->add_option("--yoco-ops", yoco_ops, "YOCO op pool");
    cmd->add_flag("--consistency", consistency, "AugMix: emit a second view for the JS loss");
  }

  MethodOptions options() const {
    MethodOptions o;
    o.params.alpha = alpha;
    o.params.num_chains = chains;
    o.params.chain_depth_max = depth;
    o.params.num_crops = crops;
    std::tie(o.params.grid_rows, o.params.grid_cols) = parse_grid(grid);
    std::tie(o.params.crop_scale_min, o.params.crop_scale_max) = parse_crop_scale(crop_scale);
    o.params.fold_mode = parse_fold_mode(fold_mode);
    if (!augmix_ops.empty()) o.augmix_pool = parse_pool(augmix_ops);
    if (!yoco_ops.empty()) o.yoco_pool = parse_pool(yoco_ops);
    o.augmix_consistency = consistency;
    o.params.validate();
    return o;
  }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"mixaug: deterministic mix-based image augmentation"};
  app.require_subcommand(1);

  std::string ingest_root;
  std::string ingest_out;
  auto* ingest_cmd = app.add_subcommand("ingest", "scan a class-foldered image tree");
  ingest_cmd->add_option("root", ingest_root, "dataset root (one subdirectory per class)")->required();
  ingest_cmd->add_option("--out", ingest_out, "manifest to write")->required();

  std::string split_manifest;
  double split_ratio = 0.8;
  std::uint64_t split_seed = 0;
  auto* split_cmd = app.add_subcommand("split", "stratified seeded train/test split (in place)");
  split_cmd->add_option("manifest", split_manifest, "manifest to rewrite")->required();
  split_cmd->add_option("--ratio", split_ratio, "train fraction in (0,1)");
  split_cmd->add_option("--seed", split_seed, "split seed (MIXAUG_SEED overrides)");

  std::string aug_manifest;
  std::string aug_out;
  std::uint64_t aug_seed = 0;
  int multiplier = 1;
  int resize = 224;
  int workers = 1;
  std::string cam_dir;
  bool no_cam_fallback = false;
  MethodFlags aug_flags;
  auto* aug_cmd = app.add_subcommand("augment", "augment the train split, copy the test split");
  aug_cmd->add_option("manifest", aug_manifest, "split manifest")->required();
  aug_cmd->add_option("--out", aug_out, "output directory")->required();
  aug_cmd->add_option("--seed", aug_seed, "master seed (MIXAUG_SEED overrides)");
  aug_cmd->add_option("--multiplier", multiplier, "outputs per train sample");
  aug_cmd->add_option("--resize", resize, "square side after load (0 keeps native size)");
  aug_cmd->add_option("--workers", workers, "worker threads");
  aug_cmd->add_option("--cam-dir", cam_dir, "activation maps mirroring the dataset tree");
  aug_cmd->add_flag("--no-cam-fallback", no_cam_fallback,
                    "fail instead of using intensity saliency when a map is missing");
  aug_flags.attach(aug_cmd, true);

  std::string predictions;
  auto* metrics_cmd = app.add_subcommand("metrics", "evaluation metrics from a prediction file");
  metrics_cmd->add_option("predictions", predictions, "rows of true_class, score_0..score_K-1")
      ->required();

  std::size_t n_images = 1000;
  int bench_workers = 4;
  int bench_side = 224;
  std::uint64_t bench_seed = 0;
  MethodFlags bench_flags;
  bench_flags.method = "all";
  auto* bench_cmd = app.add_subcommand("bench", "throughput on synthetic images");
  bench_cmd->add_option("--n-images", n_images, "images per method");
  bench_cmd->add_option("--workers", bench_workers, "parallel worker count W");
  bench_cmd->add_option("--side", bench_side, "synthetic image side");
  bench_cmd->add_option("--seed", bench_seed, "master seed (MIXAUG_SEED overrides)");
  bench_flags.attach(bench_cmd, false);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*ingest_cmd) {
      std::error_code ec;
      if (!fs::is_directory(ingest_root, ec)) {
        err << "error: dataset root '" << ingest_root << "' is not a directory\n";
        return kExitUsage;
      }
      const IngestResult result = ingest(ingest_root);
      for (const auto& w : result.warnings) err << "warning: " << w << "\n";
      write_manifest(ingest_out, result.manifest);
      out << "ingested " << result.manifest.entries.size() << " images in "
          << result.manifest.class_names.size() << " classes -> " << ingest_out << "\n";
      return kExitOk;
    }

    if (*split_cmd) {
      const std::uint64_t seed = parse_seed_env(split_seed);
      if (!(split_ratio > 0.0 && split_ratio < 1.0)) {
        err << "error: --ratio must lie in (0,1)\n";
        return kExitUsage;
      }
      const Manifest m = split(read_manifest(split_manifest), split_ratio, seed);
      write_manifest(split_manifest, m);
      out << "split " << m.entries.size() << " entries: " << m.indices_of(SplitTag::kTrain).size()
          << " train, " << m.indices_of(SplitTag::kTest).size() << " test (seed " << seed << ")\n";
      return kExitOk;
    }

    if (*aug_cmd) {
      RunConfig cfg;
      cfg.method = parse_method(aug_flags.method);
      cfg.options = aug_flags.options();
      cfg.seed = parse_seed_env(aug_seed);
      cfg.manifest = aug_manifest;
      cfg.out_dir = aug_out;
      cfg.multiplier = multiplier;
      cfg.resize_side = resize;
      cfg.workers = workers;
      if (!cam_dir.empty()) cfg.cam_dir = fs::path(cam_dir);
      cfg.cam_fallback = !no_cam_fallback;
      cfg.validate();
      const AugmentSummary s = run_augment(cfg);
      if (s.cam_fallbacks > 0) {
        err << "warning: " << s.cam_fallbacks << " activation maps missing; used intensity saliency\n";
      }
      out << "wrote " << s.train_outputs << " train and " << s.test_outputs << " test images -> "
          << aug_out << "\n";
      return kExitOk;
    }

    if (*metrics_cmd) {
      const auto records = parse_predictions(read_file(predictions));
      const MetricsReport report = compute_metrics(records);
      for (const auto& w : report.warnings) err << "warning: " << w << "\n";
      out << format_report(report);
      return kExitOk;
    }

    if (*bench_cmd) {
      BenchConfig cfg;
      if (bench_flags.method != "all") cfg.methods = {parse_method(bench_flags.method)};
      cfg.options = bench_flags.options();
      cfg.n_images = n_images;
      cfg.workers = bench_workers;
      cfg.side = bench_side;
      cfg.seed = parse_seed_env(bench_seed);
      const auto results = run_bench(cfg);
      out << format_bench(results);
      return kExitOk;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace mixaug
