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


#include <doctest.h>

#include "oracles.hpp"
#include "xrank/construction.hpp"

using namespace xrank;

TEST_SUITE("construction") {

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(ConstructionParams(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(ConstructionParams(6, 2), std::invalid_argument);
  CHECK_THROWS_AS(ConstructionParams(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(ConstructionParams(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(ConstructionParams(2, 0), std::invalid_argument);
  // 2^14 x 2^14 exceeds the default volume cap.
  CHECK_THROWS_AS(ConstructionParams(128, 2), std::invalid_argument);
  CHECK_NOTHROW(ConstructionParams(128, 2, FieldSpec(2), std::uint64_t{1} << 28));
  CHECK_THROWS_AS(ConstructionParams(4, 2, FieldSpec(2), 255), std::invalid_argument);
  CHECK_NOTHROW(ConstructionParams(4, 2, FieldSpec(2), 256));
}

TEST_CASE("derived sizes") {
  const ConstructionParams p(8, 2);
  CHECK(p.levels() == 3);
  CHECK(p.base_side() == 8);
  CHECK(p.side() == 64);
}

TEST_CASE("level zero is the identity slice") {
  const ConstructionParams p(4, 2);
  const Tensor3 a0 = level_zero(p);
  CHECK(a0 == Tensor3::identity_slice(FieldSpec(2), 4));
}

TEST_CASE("levels double every mode and triple the support") {
  for (auto [n, k] : {std::pair{2u, 1u}, {4u, 1u}, {8u, 1u}, {2u, 2u}, {4u, 2u}, {2u, 3u}}) {
    const ConstructionParams p(n, k);
    const auto levels = construction_levels(p);
    REQUIRE(levels.size() == p.levels() + 1);
    std::size_t side = p.base_side(), slices = 1, nnz = p.base_side();
    for (const auto& t : levels) {
      CHECK(t.dims() == Dims3{side, side, slices});
      CHECK(t.nnz() == nnz);
      side *= 2;
      slices *= 2;
      nnz *= 3;
    }
    const Tensor3 w = construction_tensor(p);
    CHECK(w.dims() == Dims3{p.side(), p.side(), n});
    CHECK(w == levels.back());
  }
}

TEST_CASE("construction agrees with the direct block description") {
  for (auto [n, k] : {std::pair{2u, 1u}, {4u, 1u}, {8u, 1u}, {16u, 1u}, {2u, 2u}, {4u, 2u}})
    CHECK(construction_tensor(ConstructionParams(n, k)) == oracle::construction(n, k));
  CHECK(construction_tensor(ConstructionParams(4, 1, FieldSpec(5))) == oracle::construction(4, 1, 5));
}

TEST_CASE("level_step rejects non-square tensors") {
  CHECK_THROWS_AS(level_step(Tensor3(FieldSpec(2), 2, 3, 1)), std::invalid_argument);
}

}  // TEST_SUITE
