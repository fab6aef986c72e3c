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

#include "mixaug/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mixaug/error.hpp"
#include "mixaug/geometry.hpp"
#include "mixaug/image_io.hpp"
#include "mixaug/rng.hpp"

namespace mixaug {
namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr std::string_view kFormatName = "mixaug-manifest";
constexpr int kFormatVersion = 1;

std::vector<fs::path> sorted_children(const fs::path& dir, bool directories) {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (directories ? e.is_directory() : e.is_regular_file()) out.push_back(e.path());
  }
  std::sort(out.begin(), out.end(),
            [](const fs::path& a, const fs::path& b) { return a.generic_string() < b.generic_string(); });
  return out;
}

}  // namespace

std::string_view to_string(SplitTag tag) {
  switch (tag) {
    case SplitTag::kTrain:
      return "train";
    case SplitTag::kTest:
      return "test";
    case SplitTag::kUnassigned:
      break;
  }
  return "none";
}

SplitTag parse_split_tag(std::string_view text) {
  if (text == "train") return SplitTag::kTrain;
  if (text == "test") return SplitTag::kTest;
  if (text == "none") return SplitTag::kUnassigned;
  throw ParameterError("unknown split tag '" + std::string(text) + "'");
}

void Manifest::validate() const {
  for (const auto& e : entries) {
    if (e.class_index >= class_names.size()) {
      throw ParameterError("entry " + e.path + " has class index " +
                           std::to_string(e.class_index) + " but only " +
                           std::to_string(class_names.size()) + " classes exist");
    }
  }
}

bool Manifest::is_split() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const ManifestEntry& e) { return e.split != SplitTag::kUnassigned; });
}

std::vector<std::size_t> Manifest::indices_of(SplitTag tag) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].split == tag) out.push_back(i);
  }
  return out;
}

IngestResult ingest(const fs::path& root) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) throw IoError(root.string(), "not a readable directory");

  IngestResult result;
  Manifest& m = result.manifest;
  m.root = fs::absolute(root).lexically_normal().generic_string();
  if (m.root.size() > 1 && m.root.back() == '/') m.root.pop_back();

  try {
    for (const auto& class_dir : sorted_children(root, true)) {
      const std::size_t class_index = m.class_names.size();
      m.class_names.push_back(class_dir.filename().string());
      std::size_t kept = 0;
      for (const auto& file : sorted_children(class_dir, false)) {
        if (!is_image_file(file)) continue;
        try {
          (void)read_image(file);
        } catch (const Error& e) {
          result.warnings.push_back("skipping " + file.generic_string() + ": " + e.what());
          continue;
        }
        m.entries.push_back({fs::relative(file, root).generic_string(), class_index,
                             SplitTag::kUnassigned});
        ++kept;
      }
      if (kept == 0) {
        result.warnings.push_back("class directory " + class_dir.generic_string() +
                                  " contains no decodable images");
      }
    }
  } catch (const fs::filesystem_error& e) {
    throw IoError(root.string(), e.what());
  }
  return result;
}

Manifest split(const Manifest& manifest, double ratio, std::uint64_t seed) {
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw ParameterError("split ratio must lie in (0,1), got " + std::to_string(ratio));
  }
  manifest.validate();
  Manifest out = manifest;
  out.seed = seed;
  out.split_ratio = ratio;

  std::vector<std::vector<std::size_t>> by_class(out.class_names.size());
  for (std::size_t i = 0; i < out.entries.size(); ++i) {
    by_class[out.entries[i].class_index].push_back(i);
  }
  for (std::size_t c = 0; c < by_class.size(); ++c) {
    auto& idx = by_class[c];
    const std::size_t n = idx.size();
    if (n == 0) continue;
    SeededRng rng(seed, {c});
    for (std::size_t i = n - 1; i > 0; --i) {
      std::swap(idx[i], idx[rng.uniform_index(i + 1)]);
    }
    std::size_t n_train = static_cast<std::size_t>(std::floor(ratio * static_cast<double>(n) + 1e-9));
    if (n == 1) {
      n_train = 1;
    } else {
      n_train = std::min(n_train, n - 1);
    }
    for (std::size_t k = 0; k < n; ++k) {
      out.entries[idx[k]].split = k < n_train ? SplitTag::kTrain : SplitTag::kTest;
    }
  }
  return out;
}

fs::path entry_path(const Manifest& manifest, std::size_t index) {
  if (index >= manifest.entries.size()) {
    throw ParameterError("sample index " + std::to_string(index) + " out of range");
  }
  return fs::path(manifest.root) / manifest.entries[index].path;
}

SampleRecord load_sample(const Manifest& manifest, std::size_t index, int resize_side) {
  const fs::path path = entry_path(manifest, index);
  ImageTensor img = read_image(path);
  if (resize_side > 0) img = resize_bilinear(img, resize_side, resize_side);
  return {std::move(img),
          SoftLabel::one_hot(manifest.entries[index].class_index, manifest.class_names.size()),
          path.generic_string()};
}

std::string serialize_manifest(const Manifest& manifest) {
  ordered_json header;
  header["format"] = kFormatName;
  header["version"] = kFormatVersion;
  header["root"] = manifest.root;
  header["class_names"] = manifest.class_names;
  header["seed"] = manifest.seed ? ordered_json(*manifest.seed) : ordered_json(nullptr);
  header["split_ratio"] =
      manifest.split_ratio ? ordered_json(*manifest.split_ratio) : ordered_json(nullptr);

  std::string out = header.dump() + "\n";
  for (const auto& e : manifest.entries) {
    ordered_json rec;
    rec["path"] = e.path;
    rec["class"] = e.class_index;
    rec["split"] = to_string(e.split);
    out += rec.dump() + "\n";
  }
  return out;
}

Manifest parse_manifest(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  Manifest m;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const auto j = ordered_json::parse(line);
      if (!have_header) {
        if (j.value("format", "") != kFormatName) throw FormatError(line_no, "not a manifest header");
        if (j.at("version").get<int>() != kFormatVersion) {
          throw FormatError(line_no, "unsupported manifest version");
        }
        m.root = j.at("root").get<std::string>();
        m.class_names = j.at("class_names").get<std::vector<std::string>>();
        if (!j.at("seed").is_null()) m.seed = j.at("seed").get<std::uint64_t>();
        if (!j.at("split_ratio").is_null()) m.split_ratio = j.at("split_ratio").get<double>();
        have_header = true;
        continue;
      }
      ManifestEntry e;
      e.path = j.at("path").get<std::string>();
      e.class_index = j.at("class").get<std::size_t>();
      e.split = parse_split_tag(j.at("split").get<std::string>());
      if (e.class_index >= m.class_names.size()) {
        throw FormatError(line_no, "class index out of range");
      }
      m.entries.push_back(std::move(e));
    } catch (const FormatError&) {
      throw;
    } catch (const std::exception& e) {
      throw FormatError(line_no, e.what());
    }
  }
  if (!have_header) throw FormatError(line_no, "missing manifest header");
  return m;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot open for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Manifest read_manifest(const fs::path& path) { return parse_manifest(read_file(path)); }

void write_file_atomic(const fs::path& path, std::string_view content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(tmp.string(), "cannot open for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError(tmp.string(), "write failed");
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw IoError(path.string(), "rename failed: " + ec.message());
}

void write_manifest(const fs::path& path, const Manifest& manifest) {
  write_file_atomic(path, serialize_manifest(manifest));
}

}  // namespace mixaug
