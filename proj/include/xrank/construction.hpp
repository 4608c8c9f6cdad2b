// Copyright 2026 The xrank Authors. All Rights Reserved.
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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "xrank/galois.hpp"
#include "xrank/tensor3.hpp"

namespace xrank {

/// Nominal n1 * n2 volume above which construction refuses to run.
inline constexpr std::uint64_t kDefaultMaxVolume = std::uint64_t{1} << 26;

/// Parameters of the recursive family. n must be an exact power of two.
class ConstructionParams {
 public:
  /// Throws std::invalid_argument for n not a power of two >= 2, k < 1, or
  /// n^(2k) above max_volume.
  ConstructionParams(std::size_t n, std::size_t k, FieldSpec field = FieldSpec(2),
                     std::uint64_t max_volume = kDefaultMaxVolume);

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  const FieldSpec& field() const noexcept { return field_; }
  /// Number of recursion steps, log2(n).
  std::size_t levels() const noexcept { return levels_; }
  /// n^(k-1), the side of the level-zero identity.
  std::size_t base_side() const noexcept { return base_side_; }
  /// n^k
  std::size_t side() const noexcept { return base_side_ * n_; }

 private:
  std::size_t n_;
  std::size_t k_;
  FieldSpec field_;
  std::size_t levels_;
  std::size_t base_side_;
};

/// Identity slice of side n^(k-1).
Tensor3 level_zero(const ConstructionParams& params);

/// [[A 0, 0 A], [0 A, 0 0]] in concatenation notation: dims (m, m, p) -> (2m, 2m, 2p).
Tensor3 level_step(const Tensor3& a);

/// Every level A(0), ..., A(l).
std::vector<Tensor3> construction_levels(const ConstructionParams& params);

/// The final n^k x n^k x n tensor A(l).
Tensor3 construction_tensor(const ConstructionParams& params);

}  // namespace xrank
