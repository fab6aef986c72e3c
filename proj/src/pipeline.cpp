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

#include "mixaug/pipeline.hpp"

#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "mixaug/dataset.hpp"
#include "mixaug/error.hpp"
#include "mixaug/image_io.hpp"
#include "mixaug/parallel.hpp"

namespace mixaug {
namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr std::array<std::pair<Method, std::string_view>, 7> kMethodNames{{
    {Method::kBaseline, "baseline"},
    {Method::kMixup, "mixup"},
    {Method::kYoco, "yoco"},
    {Method::kCropmix, "cropmix"},
    {Method::kCutmix, "cutmix"},
    {Method::kAugmix, "augmix"},
    {Method::kSnapmix, "snapmix"},
}};

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ull;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= kFnvPrime;
  }
  return h;
}

// FNV-1a step per 32-bit word; pixel buffers are large, so bytes are too slow.
std::uint64_t hash_image(std::uint64_t h, const ImageTensor& img) {
  for (float v : img.data()) {
    h ^= std::bit_cast<std::uint32_t>(v);
    h *= kFnvPrime;
  }
  return h;
}

std::string sample_name(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%06zu", index);
  return buf;
}

ordered_json pool_json(const std::vector<OpKind>& pool) {
  ordered_json out = ordered_json::array();
  for (OpKind k : pool) out.push_back(std::string(to_string(k)));
  return out;
}

ordered_json header_json(const RunConfig& cfg, const Manifest& m) {
  const MixParams& p = cfg.options.params;
  ordered_json h;
  h["format"] = "mixaug-augmented";
  h["version"] = 1;
  h["method"] = std::string(to_string(cfg.method));
  h["seed"] = cfg.seed;
  h["multiplier"] = cfg.multiplier;
  h["resize"] = cfg.resize_side;
  h["params"] = {{"alpha", p.alpha},
                 {"chains", p.num_chains},
                 {"chain_depth_max", p.chain_depth_max},
                 {"grid", {p.grid_rows, p.grid_cols}},
                 {"crop_scale", {p.crop_scale_min, p.crop_scale_max}},
                 {"crops", p.num_crops},
                 {"fold_mode", std::string(to_string(p.fold_mode))},
                 {"augmix_pool", pool_json(cfg.options.augmix_pool)},
                 {"yoco_pool", pool_json(cfg.options.yoco_pool)},
                 {"augmix_consistency", cfg.options.augmix_consistency}};
  h["class_names"] = m.class_names;
  return h;
}

std::optional<fs::path> find_cam(const fs::path& cam_dir, const std::string& entry) {
  fs::path candidate = cam_dir / entry;
  std::error_code ec;
  if (fs::is_regular_file(candidate, ec)) return candidate;
  candidate.replace_extension(".png");
  if (fs::is_regular_file(candidate, ec)) return candidate;
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Method method) {
  for (const auto& [m, name] : kMethodNames) {
    if (m == method) return name;
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (const auto& [m, n] : kMethodNames) {
    if (n == name) return m;
  }
  throw ParameterError("unknown method '" + std::string(name) +
                       "' (expected baseline|mixup|yoco|cropmix|cutmix|augmix|snapmix)");
}

std::vector<Method> all_methods() {
  std::vector<Method> out;
  for (const auto& entry : kMethodNames) out.push_back(entry.first);
  return out;
}

bool is_pairwise(Method method) {
  return method == Method::kMixup || method == Method::kCutmix || method == Method::kSnapmix;
}

MixOutput apply_method(Method method, const MethodOptions& opts, const Operand& a,
                       const Operand& b, SeededRng& rng) {
  if (a.image == nullptr || a.label == nullptr) throw ParameterError("missing anchor operand");
  if (is_pairwise(method) && (b.image == nullptr || b.label == nullptr)) {
    throw ParameterError(std::string(to_string(method)) + " needs a partner operand");
  }
  const MixParams& p = opts.params;
  switch (method) {
    case Method::kBaseline:
      return {*a.image, *a.label, {}, 1.0, {}};
    case Method::kMixup:
      return mixup(*a.image, *a.label, *b.image, *b.label, p.alpha, rng);
    case Method::kCutmix:
      return cutmix(*a.image, *a.label, *b.image, *b.label, p.alpha, rng);
    case Method::kSnapmix: {
      const SaliencyMap cam_a = a.cam ? *a.cam : intensity_saliency(*a.image);
      const SaliencyMap cam_b = b.cam ? *b.cam : intensity_saliency(*b.image);
      return snapmix(*a.image, *a.label, cam_a, *b.image, *b.label, cam_b, p.alpha, rng);
    }
    case Method::kCropmix:
      return cropmix(*a.image, *a.label, p, rng);
    case Method::kAugmix:
      return augmix(*a.image, *a.label, p, opts.augmix_pool, rng, opts.augmix_consistency);
    case Method::kYoco: {
      const SeededRng chain_root = rng.fork(3);
      auto chain_for = [&](std::uint64_t idx) {
        SeededRng r = chain_root.fork(idx);
        return build_chain(r, p.chain_depth_max, opts.yoco_pool);
      };
      if (p.grid_rows == 0 && p.grid_cols == 0) {
        const OpChain aug1 = chain_for(0);
        const OpChain aug2 = chain_for(1);
        return {yoco(*a.image, aug1, aug2, rng), *a.label, {}, 1.0, {}};
      }
      std::vector<OpChain> chains;
      const auto cells = static_cast<std::size_t>(p.grid_rows + 1) * (p.grid_cols + 1);
      for (std::size_t i = 0; i < cells; ++i) chains.push_back(chain_for(i));
      return {yoco_grid(*a.image, p.grid_rows, p.grid_cols, chains, rng.fork(4)), *a.label, {},
              1.0, {}};
    }
  }
  throw ParameterError("unknown method");
}

void RunConfig::validate() const {
  options.params.validate();
  if (multiplier < 1) throw ParameterError("multiplier must be >= 1");
  if (workers < 1) throw ParameterError("workers must be >= 1");
  if (resize_side < 0) throw ParameterError("resize side must be >= 0");
  if (method == Method::kAugmix && options.augmix_pool.empty()) {
    throw ParameterError("augmix op pool is empty");
  }
  if (method == Method::kYoco && options.yoco_pool.empty()) {
    throw ParameterError("yoco op pool is empty");
  }
  if (method == Method::kSnapmix && !cam_dir && !cam_fallback) {
    throw ParameterError("snapmix needs --cam-dir when the intensity fallback is disabled");
  }
  if (manifest.empty()) throw ParameterError("no input manifest given");
  if (out_dir.empty()) throw ParameterError("no output directory given");
}

AugmentSummary run_augment(const RunConfig& cfg) {
  cfg.validate();
  const Manifest m = read_manifest(cfg.manifest);
  m.validate();
  if (!m.is_split()) throw ParameterError("manifest has not been split; run `split` first");

  const std::vector<std::size_t> train = m.indices_of(SplitTag::kTrain);
  const std::vector<std::size_t> test = m.indices_of(SplitTag::kTest);
  const auto mult = static_cast<std::size_t>(cfg.multiplier);
  const std::size_t n_tasks = train.size() * mult;
  std::vector<std::string> train_rows(n_tasks);
  std::vector<std::string> test_rows(test.size());
  std::atomic<std::size_t> fallbacks{0};

  auto load_cam = [&](std::size_t entry) -> std::optional<SaliencyMap> {
    if (cfg.method != Method::kSnapmix) return std::nullopt;
    if (cfg.cam_dir) {
      if (auto path = find_cam(*cfg.cam_dir, m.entries[entry].path)) return read_saliency(*path);
    }
    if (!cfg.cam_fallback) {
      throw IoError((cfg.cam_dir ? *cfg.cam_dir / m.entries[entry].path : fs::path(m.entries[entry].path))
                        .string(),
                    "no activation map and intensity fallback disabled");
    }
    ++fallbacks;
    return std::nullopt;
  };

  parallel_for(n_tasks, cfg.workers, [&](std::size_t t) {
    const std::size_t idx = train[t / mult];
    const std::size_t rep = t % mult;
    const SeededRng root(cfg.seed, {idx, rep});

    const SampleRecord a = load_sample(m, idx, cfg.resize_side);
    const auto cam_a = load_cam(idx);
    Operand op_a{&a.image, &a.label, cam_a ? &*cam_a : nullptr};

    std::optional<std::size_t> partner;
    std::optional<SampleRecord> b;
    std::optional<SaliencyMap> cam_b;
    Operand op_b;
    if (is_pairwise(cfg.method)) {
      SeededRng pick = root.fork(kPartnerStream);
      partner = train[pick.uniform_index(train.size())];
      b = load_sample(m, *partner, cfg.resize_side);
      cam_b = load_cam(*partner);
      op_b = {&b->image, &b->label, cam_b ? &*cam_b : nullptr};
    }

    SeededRng rng = root.fork(kMethodStream);
    const MixOutput out = apply_method(cfg.method, cfg.options, op_a, op_b, rng);

    const std::string& cls = m.class_names[m.entries[idx].class_index];
    const std::string rel = "train/" + cls + "/" + sample_name(idx) + "_r" + std::to_string(rep) + ".png";
    write_png(cfg.out_dir / rel, out.image);
    for (std::size_t k = 0; k < out.aux_images.size(); ++k) {
      write_png(cfg.out_dir / ("train/" + cls + "/" + sample_name(idx) + "_r" + std::to_string(rep) +
                               "_aux" + std::to_string(k) + ".png"),
                out.aux_images[k]);
    }

    ordered_json row;
    row["path"] = rel;
    row["split"] = "train";
    row["class"] = m.entries[idx].class_index;
    row["label"] = std::vector<double>(out.label.weights().begin(), out.label.weights().end());
    row["lambda_effective"] = out.lambda_effective;
    row["source"] = m.entries[idx].path;
    row["partner"] = partner ? ordered_json(m.entries[*partner].path) : ordered_json(nullptr);
    row["seed"] = cfg.seed;
    row["stream"] = {idx, rep};
    train_rows[t] = row.dump();
  });

  parallel_for(test.size(), cfg.workers, [&](std::size_t t) {
    const std::size_t idx = test[t];
    const SampleRecord s = load_sample(m, idx, cfg.resize_side);
    const std::string& cls = m.class_names[m.entries[idx].class_index];
    const std::string rel = "test/" + cls + "/" + sample_name(idx) + ".png";
    write_png(cfg.out_dir / rel, s.image);

    ordered_json row;
    row["path"] = rel;
    row["split"] = "test";
    row["class"] = m.entries[idx].class_index;
    row["label"] = std::vector<double>(s.label.weights().begin(), s.label.weights().end());
    row["lambda_effective"] = 1.0;
    row["source"] = m.entries[idx].path;
    row["partner"] = nullptr;
    row["seed"] = nullptr;
    row["stream"] = nullptr;
    test_rows[t] = row.dump();
  });

  std::string text = header_json(cfg, m).dump() + "\n";
  for (const auto& r : train_rows) text += r + "\n";
  for (const auto& r : test_rows) text += r + "\n";
  write_file_atomic(cfg.out_dir / kAugmentedManifestName, text);

  return {n_tasks, test.size(), fallbacks.load()};
}

ImageTensor synthetic_image(std::uint64_t seed, std::uint64_t index, int channels, int side) {
  SeededRng rng(seed, {0x5E7Full, index});
  const Shape shape{channels, side, side};
  std::vector<float> data(shape.size());
  for (int c = 0; c < channels; ++c) {
    const double gx = rng.uniform(-0.5, 0.5);
    const double gy = rng.uniform(-0.5, 0.5);
    const double bx = rng.uniform(0.2, 0.8) * side;
    const double by = rng.uniform(0.2, 0.8) * side;
    const double radius = rng.uniform(0.08, 0.25) * side;
    const double inv = 1.0 / (2.0 * radius * radius);
    float* plane = data.data() + static_cast<std::size_t>(c) * shape.plane();
    for (int y = 0; y < side; ++y) {
      for (int x = 0; x < side; ++x) {
        const double ramp = 0.5 + gx * (x / static_cast<double>(side) - 0.5) +
                            gy * (y / static_cast<double>(side) - 0.5);
        const double d2 = (x - bx) * (x - bx) + (y - by) * (y - by);
        const double v = 0.6 * ramp + 0.4 * std::exp(-d2 * inv);
        plane[static_cast<std::size_t>(y) * side + x] =
            std::clamp(static_cast<float>(v), 0.0f, 1.0f);
      }
    }
  }
  return ImageTensor(shape, std::move(data));
}

std::uint64_t output_checksum(const MixOutput& out) {
  std::uint64_t h = hash_image(kFnvOffset, out.image);
  for (const auto& aux : out.aux_images) h = hash_image(h, aux);
  const auto w = out.label.weights();
  h = fnv1a(h, w.data(), w.size() * sizeof(double));
  return fnv1a(h, &out.lambda_effective, sizeof(double));
}

std::vector<BenchResult> run_bench(const BenchConfig& cfg) {
  cfg.options.params.validate();
  if (cfg.workers < 1) throw ParameterError("workers must be >= 1");
  if (cfg.side < 2) throw ParameterError("bench image side must be >= 2");
  std::vector<BenchResult> results;
  if (cfg.n_images == 0) return results;

  constexpr std::size_t kNumClasses = 4;
  const std::size_t pool_size = std::min<std::size_t>(cfg.n_images, 32);
  std::vector<ImageTensor> images;
  std::vector<SoftLabel> labels;
  for (std::size_t i = 0; i < pool_size; ++i) {
    images.push_back(synthetic_image(cfg.seed, i, cfg.channels, cfg.side));
    labels.push_back(SoftLabel::one_hot(i % kNumClasses, kNumClasses));
  }

  auto run_once = [&](Method method, int workers, std::uint64_t& checksum) {
    std::vector<std::uint64_t> sums(cfg.n_images);
    const auto start = std::chrono::steady_clock::now();
    parallel_for(cfg.n_images, workers, [&](std::size_t i) {
      const SeededRng root(cfg.seed, {i, 0});
      const std::size_t ai = i % pool_size;
      Operand a{&images[ai], &labels[ai], nullptr};
      Operand b;
      if (is_pairwise(method)) {
        SeededRng pick = root.fork(kPartnerStream);
        const std::size_t bi = pick.uniform_index(pool_size);
        b = {&images[bi], &labels[bi], nullptr};
      }
      SeededRng rng = root.fork(kMethodStream);
      sums[i] = output_checksum(apply_method(method, cfg.options, a, b, rng));
    });
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    checksum = fnv1a(kFnvOffset, sums.data(), sums.size() * sizeof(std::uint64_t));
    return elapsed.count();
  };

  for (Method method : cfg.methods) {
    BenchResult r;
    r.method = method;
    r.images = cfg.n_images;
    r.workers = cfg.workers;
    r.seconds_single = run_once(method, 1, r.checksum_single);
    r.seconds_parallel = run_once(method, cfg.workers, r.checksum_parallel);
    results.push_back(r);
  }
  return results;
}

std::string format_bench(const std::vector<BenchResult>& results) {
  std::ostringstream os;
  os << "method\timages\tworkers\tsec_1\timg_per_s_1\tsec_W\timg_per_s_W\tchecksum\tmatch\n";
  for (const auto& r : results) {
    os << to_string(r.method) << "\t" << r.images << "\t" << r.workers << "\t" << std::fixed
       << std::setprecision(3) << r.seconds_single << "\t" << std::setprecision(1)
       << r.throughput_single() << "\t" << std::setprecision(3) << r.seconds_parallel << "\t"
       << std::setprecision(1) << r.throughput_parallel() << "\t" << std::hex << std::setw(16)
       << std::setfill('0') << r.checksum_single << std::dec << std::setfill(' ') << "\t"
       << (r.checksum_single == r.checksum_parallel ? "yes" : "NO") << "\n";
  }
  return os.str();
}

}  // namespace mixaug
