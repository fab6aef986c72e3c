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

#include <array>
#include <cstdint>
#include <vector>

namespace mixaug {

/// Philox4x32-10 block function (Salmon et al., Random123).
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/**
 * @brief Counter-based random stream keyed by a master seed and a path.
 *
 * The key is a hash of (master_seed, path...) and each draw encrypts the
 * next counter value, so a stream's output depends only on its identity and
 * on how many draws were taken from it. Child streams obtained with fork()
 * are independent of the parent's draw position, which is what makes batch
 * processing order-free.
 */
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t master_seed, std::vector<std::uint64_t> path = {});

  /// Child stream with `index` appended to the path. Does not consume draws.
  SeededRng fork(std::uint64_t index) const;

  std::uint64_t next_u64();

  /// Uniform on [0, 1) with 53 bits of resolution.
  double uniform();
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform integer in [0, n). n must be > 0.
  std::uint64_t uniform_index(std::uint64_t n);
  /// Standard normal (Box-Muller, no cached spare).
  double normal();

  std::uint64_t master_seed() const noexcept { return master_seed_; }
  const std::vector<std::uint64_t>& path() const noexcept { return path_; }
  std::uint64_t draws() const noexcept { return counter_; }

 private:
  SeededRng(std::uint64_t master_seed, std::vector<std::uint64_t> path, std::uint64_t key);

  std::uint64_t master_seed_;
  std::vector<std::uint64_t> path_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace mixaug
