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

// Characteristic matrices A(s) = sum_k s_k A_k of a 3-way tensor.
//
// Two different notions of rank live here:
//
//  * row_rank / col_rank: the number of rows (columns) of A(s) that are
//    linearly independent over the ground field F. Every row is a vector of
//    linear forms, so [s1 s2] has column rank 2 and row rank 1. This is the
//    notion the block lower bound consumes, and the one nondegeneracy uses.
//
//  * generic_rank: the ordinary matrix rank of A(s) over the function field
//    F(s). It never exceeds either of the above and bounds the rank of every
//    specialization A(s0) from above.
//
// Each is computed on two independent routes: an exact symbolic one and a
// randomized evaluation over a large extension field.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "xrank/extension_field.hpp"
#include "xrank/galois.hpp"
#include "xrank/polynomial.hpp"
#include "xrank/tensor3.hpp"

namespace xrank {

enum class RankPath { Automatic, Symbolic, Randomized };

std::string to_string(RankPath path);

struct RankOptions {
  RankPath path = RankPath::Automatic;
  std::uint64_t seed = 0;
  std::size_t trials = 3;
  /// Automatic picks the symbolic route when min(n1, n2) is at most this.
  std::size_t symbolic_threshold = 64;
};

struct RankResult {
  std::size_t value = 0;
  RankPath path = RankPath::Symbolic;  // the route that actually ran
};

class CharMatrix {
 public:
  explicit CharMatrix(Tensor3 base) : base_(std::move(base)) {}

  const Tensor3& base() const noexcept { return base_; }
  std::size_t rows() const noexcept { return base_.n1(); }
  std::size_t cols() const noexcept { return base_.n2(); }
  std::size_t var_count() const noexcept { return base_.n3(); }

  /// Linear form sum_k base[i,j,k] s_k (1-based i, j).
  Polynomial entry(std::size_t i, std::size_t j) const;

  /// A(s0) over the base field; s0 has var_count() entries.
  MatF evaluate(std::span<const std::uint32_t> point) const;
  Matrix<ExtensionField> evaluate(const ExtensionField& ext,
                                  std::span<const ExtensionField::Element> point) const;

 private:
  Tensor3 base_;
};

RankResult row_rank(const CharMatrix& m, const RankOptions& opts = {});
RankResult col_rank(const CharMatrix& m, const RankOptions& opts = {});
RankResult generic_rank(const CharMatrix& m, const RankOptions& opts = {});

namespace detail {

std::size_t symbolic_row_rank(const CharMatrix& m);
std::size_t randomized_row_rank(const CharMatrix& m, std::uint64_t seed, std::size_t trials);
/// Fraction-free (Bareiss) elimination over F[s].
std::size_t symbolic_generic_rank(const CharMatrix& m);
std::size_t randomized_generic_rank(const CharMatrix& m, std::uint64_t seed, std::size_t trials);

}  // namespace detail

struct NondegeneracyReport {
  bool slices_independent = false;
  bool full_row_rank = false;
  bool full_col_rank = false;
  std::size_t slice_rank = 0;
  std::size_t row_rank = 0;
  std::size_t col_rank = 0;
  RankPath path = RankPath::Symbolic;

  bool nondegenerate() const noexcept {
    return slices_independent && full_row_rank && full_col_rank;
  }
};

NondegeneracyReport is_nondegenerate(const Tensor3& t, const RankOptions& opts = {});

}  // namespace xrank
