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

#include "mixaug/image_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "mixaug/error.hpp"

namespace mixaug {
namespace fs = std::filesystem;
namespace {

cv::Mat decode(const fs::path& path) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) throw IoError(path.string(), "no such file");
  cv::Mat m;
  try {
    m = cv::imread(path.string(), cv::IMREAD_ANYDEPTH | cv::IMREAD_ANYCOLOR);
  } catch (const cv::Exception& e) {
    throw IoError(path.string(), std::string("decode failed: ") + e.what());
  }
  if (m.empty()) throw IoError(path.string(), "cannot decode image");
  if (m.depth() != CV_8U && m.depth() != CV_16U) {
    throw IoError(path.string(), "unsupported pixel depth");
  }
  return m;
}

double depth_scale(const cv::Mat& m) { return m.depth() == CV_16U ? 65535.0 : 255.0; }

double sample(const cv::Mat& m, int y, int x, int c) {
  if (m.depth() == CV_16U) return m.ptr<std::uint16_t>(y)[x * m.channels() + c];
  return m.ptr<std::uint8_t>(y)[x * m.channels() + c];
}

void write_mat(const fs::path& path, const cv::Mat& m) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  bool ok = false;
  try {
    ok = cv::imwrite(path.string(), m, {cv::IMWRITE_PNG_COMPRESSION, 3});
  } catch (const cv::Exception& e) {
    throw IoError(path.string(), std::string("encode failed: ") + e.what());
  }
  if (!ok) throw IoError(path.string(), "cannot write image");
}

}  // namespace

bool is_image_file(const fs::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

ImageTensor read_image(const fs::path& path) {
  const cv::Mat m = decode(path);
  const int src_channels = m.channels();
  const int channels = src_channels >= 3 ? 3 : 1;
  const Shape shape{channels, m.rows, m.cols};
  const double scale = depth_scale(m);
  std::vector<float> data(shape.size());
  for (int c = 0; c < channels; ++c) {
    // OpenCV stores colour as BGR(A); planes are emitted as RGB.
    const int src_c = channels == 3 ? 2 - c : 0;
    float* dst = data.data() + static_cast<std::size_t>(c) * shape.plane();
    for (int y = 0; y < m.rows; ++y) {
      for (int x = 0; x < m.cols; ++x) {
        dst[static_cast<std::size_t>(y) * m.cols + x] =
            static_cast<float>(sample(m, y, x, src_c) / scale);
      }
    }
  }
  return ImageTensor(shape, std::move(data));
}

SaliencyMap read_saliency(const fs::path& path) {
  const cv::Mat m = decode(path);
  const double scale = depth_scale(m);
  SaliencyMap out{m.rows, m.cols, std::vector<double>(static_cast<std::size_t>(m.rows) * m.cols),
                  false};
  for (int y = 0; y < m.rows; ++y) {
    for (int x = 0; x < m.cols; ++x) {
      out.values[static_cast<std::size_t>(y) * m.cols + x] = sample(m, y, x, 0) / scale;
    }
  }
  return out;
}

void write_png(const fs::path& path, const ImageTensor& img) {
  const int channels = img.channels();
  cv::Mat m(img.height(), img.width(), channels == 3 ? CV_8UC3 : CV_8UC1);
  for (int y = 0; y < img.height(); ++y) {
    auto* row = m.ptr<std::uint8_t>(y);
    for (int x = 0; x < img.width(); ++x) {
      for (int c = 0; c < channels; ++c) {
        const int dst_c = channels == 3 ? 2 - c : 0;
        row[x * channels + dst_c] =
            static_cast<std::uint8_t>(std::lround(std::clamp(img.at(c, y, x), 0.0f, 1.0f) * 255.0));
      }
    }
  }
  write_mat(path, m);
}

void write_saliency_png(const fs::path& path, const SaliencyMap& map) {
  map.validate();
  const double top = *std::max_element(map.values.begin(), map.values.end());
  cv::Mat m(map.height, map.width, CV_16UC1);
  for (int y = 0; y < map.height; ++y) {
    auto* row = m.ptr<std::uint16_t>(y);
    for (int x = 0; x < map.width; ++x) {
      const double v = top > 0.0 ? map.values[static_cast<std::size_t>(y) * map.width + x] / top : 0.0;
      row[x] = static_cast<std::uint16_t>(std::lround(v * 65535.0));
    }
  }
  write_mat(path, m);
}

}  // namespace mixaug
