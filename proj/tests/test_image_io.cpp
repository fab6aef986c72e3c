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

#include <fstream>

#include "mixaug/error.hpp"
#include "mixaug/image_io.hpp"
#include "test_util.hpp"

namespace mixaug {
namespace {

using testing::TempDir;

// Values on the 8-bit grid survive a PNG round trip exactly.
ImageTensor quantized_image(SeededRng& rng, int channels, int h, int w) {
  std::vector<float> data(static_cast<std::size_t>(channels) * h * w);
  for (auto& v : data) v = static_cast<float>(rng.uniform_index(256)) / 255.0f;
  return ImageTensor(channels, h, w, std::move(data));
}

TEST(ImageIo, ExtensionFilter) {
  EXPECT_TRUE(is_image_file("a/b.png"));
  EXPECT_TRUE(is_image_file("a/b.JPG"));
  EXPECT_TRUE(is_image_file("b.jpeg"));
  EXPECT_FALSE(is_image_file("b.txt"));
  EXPECT_FALSE(is_image_file("png"));
}

TEST(ImageIo, PngRoundTripRgbAndGray) {
  TempDir dir;
  SeededRng rng(1);
  for (int channels : {1, 3}) {
    const auto img = quantized_image(rng, channels, 16, 16);
    const auto path = dir.path() / ("img" + std::to_string(channels) + ".png");
    write_png(path, img);
    const auto back = read_image(path);
    EXPECT_EQ(back.shape(), (Shape{channels, 16, 16}));
    for (std::size_t i = 0; i < img.size(); ++i) ASSERT_NEAR(back.data()[i], img.data()[i], 1e-7f);
  }
}

TEST(ImageIo, ChannelOrderIsRgb) {
  TempDir dir;
  std::vector<float> data(3, 0.0f);
  data[0] = 1.0f;
  write_png(dir.path() / "red.png", ImageTensor(3, 1, 1, data));
  const auto back = read_image(dir.path() / "red.png");
  EXPECT_EQ(back.at(0, 0, 0), 1.0f);
  EXPECT_EQ(back.at(1, 0, 0), 0.0f);
  EXPECT_EQ(back.at(2, 0, 0), 0.0f);
}

TEST(ImageIo, FullIntensityMapsToOne) {
  TempDir dir;
  write_png(dir.path() / "white.png", testing::constant_image(3, 2, 2, 1.0f));
  const auto back = read_image(dir.path() / "white.png");
  for (float v : back.data()) EXPECT_EQ(v, 1.0f);
}

TEST(ImageIo, MissingAndCorruptFiles) {
  TempDir dir;
  try {
    (void)read_image(dir.path() / "nope.png");
    FAIL();
  } catch (const IoError& e) {
    EXPECT_NE(e.path().find("nope.png"), std::string::npos);
  }
  std::ofstream(dir.path() / "junk.png") << "not an image";
  EXPECT_THROW(read_image(dir.path() / "junk.png"), IoError);
}

TEST(ImageIo, SaliencyRoundTrip) {
  TempDir dir;
  SaliencyMap map{2, 3, {0.0, 1.0, 2.0, 3.0, 4.0, 4.0}, false};
  write_saliency_png(dir.path() / "cam.png", map);
  const auto back = read_saliency(dir.path() / "cam.png");
  ASSERT_EQ(back.height, 2);
  ASSERT_EQ(back.width, 3);
  for (std::size_t i = 0; i < map.values.size(); ++i) EXPECT_NEAR(back.values[i], map.values[i] / 4.0, 1e-4);
}

}  // namespace
}  // namespace mixaug
