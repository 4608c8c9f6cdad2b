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

#include <random>

#include "oracles.hpp"
#include "xrank/charmat.hpp"
#include "xrank/construction.hpp"

using namespace xrank;

namespace {

const RankOptions kSymbolic{RankPath::Symbolic};
const RankOptions kRandomized{RankPath::Randomized};

// A(s) = [s1 s2]
Tensor3 row_of_two() {
  Tensor3 t(FieldSpec(2), 1, 2, 2);
  t.set(1, 1, 1, 1);
  t.set(1, 2, 2, 1);
  return t;
}

}  // namespace

TEST_SUITE("charmat") {

TEST_CASE("entries are linear forms in the slice variables") {
  Tensor3 t(FieldSpec(5), 1, 1, 3);
  t.set(1, 1, 1, 2);
  t.set(1, 1, 3, 4);
  const CharMatrix m(t);
  Polynomial expect = Polynomial::variable(FieldSpec(5), 3, 0, 2) +
                      Polynomial::variable(FieldSpec(5), 3, 2, 4);
  CHECK(m.entry(1, 1) == expect);
  const std::vector<std::uint32_t> pt = {1, 1, 1};
  CHECK(m.evaluate(std::span<const std::uint32_t>(pt))(0, 0) == 1);
  CHECK_THROWS_AS(m.evaluate(std::span<const std::uint32_t>(std::vector<std::uint32_t>{1})),
                  std::invalid_argument);
}

TEST_CASE("[s1 s2] has column rank 2 and row rank 1") {
  const CharMatrix m(row_of_two());
  for (const auto& opts : {kSymbolic, kRandomized}) {
    CHECK(col_rank(m, opts).value == 2);
    CHECK(row_rank(m, opts).value == 1);
    CHECK(generic_rank(m, opts).value == 1);
  }
  const auto rep = is_nondegenerate(row_of_two());
  CHECK(rep.nondegenerate());
}

TEST_CASE("s1 times the identity") {
  for (std::size_t m : {1u, 2u, 5u}) {
    const CharMatrix cm(Tensor3::identity_slice(FieldSpec(3), m));
    for (const auto& opts : {kSymbolic, kRandomized}) {
      CHECK(row_rank(cm, opts).value == m);
      CHECK(col_rank(cm, opts).value == m);
      CHECK(generic_rank(cm, opts).value == m);
    }
  }
}

TEST_CASE("the 2x2x2 construction tensor") {
  const Tensor3 t = construction_tensor(ConstructionParams(2, 1));
  const CharMatrix m(t);
  for (const auto& opts : {kSymbolic, kRandomized}) {
    CHECK(row_rank(m, opts).value == 2);
    CHECK(col_rank(m, opts).value == 2);
    CHECK(generic_rank(m, opts).value == 2);
  }
  CHECK(is_nondegenerate(t).nondegenerate());
}

TEST_CASE("row and column ranks agree with the fibre oracle on both paths") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const FieldSpec f(trial % 2 ? 3 : 2);
    const Dims3 d{1 + rng() % 4, 1 + rng() % 4, 1 + rng() % 3};
    const Tensor3 t = oracle::random_tensor(rng, f, d, 0.4);
    const CharMatrix m(t);
    const std::size_t rr = oracle::char_row_rank(t), cr = oracle::char_col_rank(t);
    CHECK(detail::symbolic_row_rank(m) == rr);
    CHECK(detail::randomized_row_rank(m, trial, 3) == rr);
    CHECK(row_rank(m, kSymbolic).value == rr);
    CHECK(col_rank(m, kSymbolic).value == cr);
    CHECK(col_rank(m, {RankPath::Randomized, std::uint64_t(trial)}).value == cr);
  }
}

TEST_CASE("generic rank agrees with the Leibniz-minor oracle on both paths") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const FieldSpec f(trial % 3 == 0 ? 5 : 2);
    const Dims3 d{1 + rng() % 4, 1 + rng() % 4, 1 + rng() % 3};
    const Tensor3 t = oracle::random_tensor(rng, f, d, 0.4);
    const CharMatrix m(t);
    const std::size_t g = oracle::generic_rank(t);
    CAPTURE(trial);
    CHECK(detail::symbolic_generic_rank(m) == g);
    CHECK(detail::randomized_generic_rank(m, trial, 3) == g);
  }
}

TEST_CASE("specializing the variables never raises the generic rank") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const FieldSpec f(3);
    const Tensor3 t = oracle::random_tensor(rng, f, {3, 3, 2}, 0.5);
    const CharMatrix m(t);
    const std::size_t g = generic_rank(m, kSymbolic).value;
    for (std::uint32_t a = 0; a < 3; ++a)
      for (std::uint32_t b = 0; b < 3; ++b) {
        const std::vector<std::uint32_t> pt = {a, b};
        CHECK(rank(m.evaluate(std::span<const std::uint32_t>(pt))) <= g);
      }
  }
}

TEST_CASE("automatic path picks symbolic for small matrices") {
  const CharMatrix m(row_of_two());
  CHECK(row_rank(m).path == RankPath::Symbolic);
  RankOptions tiny;
  tiny.symbolic_threshold = 0;
  CHECK(row_rank(m, tiny).path == RankPath::Randomized);
  CHECK(row_rank(m, tiny).value == 1);
}

TEST_CASE("nondegeneracy examples") {
  const FieldSpec f(2);
  // Repeated slice: slices dependent.
  Tensor3 rep(f, 2, 2, 2);
  rep.set(1, 1, 1, 1);
  rep.set(1, 1, 2, 1);
  rep.set(2, 2, 1, 1);
  rep.set(2, 2, 2, 1);
  auto r = is_nondegenerate(rep);
  CHECK_FALSE(r.slices_independent);
  CHECK_FALSE(r.nondegenerate());

  // Zero row: row rank deficient.
  Tensor3 zr(f, 2, 2, 1);
  zr.set(1, 1, 1, 1);
  r = is_nondegenerate(zr);
  CHECK(r.slices_independent);
  CHECK_FALSE(r.full_row_rank);
  CHECK_FALSE(r.full_col_rank);
  CHECK(r.row_rank == 1);

  // A(s) = [s1; s2] is the transpose of the [s1 s2] case.
  const Tensor3 col = transpose12(row_of_two());
  r = is_nondegenerate(col);
  CHECK(r.row_rank == 2);
  CHECK(r.col_rank == 1);
  CHECK(r.nondegenerate());
}

TEST_CASE("construction levels agree across paths") {
  for (auto [n, k] : {std::pair{4u, 1u}, {8u, 1u}, {2u, 2u}, {4u, 2u}}) {
    for (const Tensor3& t : construction_levels(ConstructionParams(n, k))) {
      const CharMatrix m(t);
      CHECK(row_rank(m, kSymbolic).value == row_rank(m, kRandomized).value);
      CHECK(col_rank(m, kSymbolic).value == col_rank(m, kRandomized).value);
      CHECK(generic_rank(m, kSymbolic).value == generic_rank(m, kRandomized).value);
    }
  }
}

}  // TEST_SUITE
