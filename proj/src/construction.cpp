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

#include "xrank/construction.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace xrank {

ConstructionParams::ConstructionParams(std::size_t n, std::size_t k, FieldSpec field,
                                       std::uint64_t max_volume)
    : n_(n), k_(k), field_(field) {
  if (n < 2 || !std::has_single_bit(n))
    throw std::invalid_argument("n must be a power of two >= 2, got " + std::to_string(n));
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  levels_ = static_cast<std::size_t>(std::countr_zero(n));

  // side^2 = n^(2k) must stay within max_volume; compare in log2 to avoid overflow.
  const std::uint64_t side_bits = std::uint64_t{levels_} * k;
  if (side_bits >= 32 || (std::uint64_t{1} << (2 * side_bits)) > max_volume)
    throw std::invalid_argument("n^k x n^k volume exceeds the size cap of " +
                                std::to_string(max_volume));
  base_side_ = std::size_t{1} << (levels_ * (k - 1));
}

Tensor3 level_zero(const ConstructionParams& params) {
  return Tensor3::identity_slice(params.field(), params.base_side());
}

Tensor3 level_step(const Tensor3& a) {
  if (a.n1() != a.n2()) throw std::invalid_argument("level_step: tensor must be square in modes 1-2");
  const Tensor3 zero(a.field(), a.dims());
  return block2x2(concat(a, zero), concat(zero, a), concat(zero, a), concat(zero, zero));
}

std::vector<Tensor3> construction_levels(const ConstructionParams& params) {
  std::vector<Tensor3> levels;
  levels.reserve(params.levels() + 1);
  levels.push_back(level_zero(params));
  for (std::size_t i = 0; i < params.levels(); ++i) levels.push_back(level_step(levels.back()));
  return levels;
}

Tensor3 construction_tensor(const ConstructionParams& params) {
  Tensor3 t = level_zero(params);
  for (std::size_t i = 0; i < params.levels(); ++i) t = level_step(t);
  return t;
}

}  // namespace xrank
