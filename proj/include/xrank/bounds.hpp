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

// Rank lower bounds with machine-checked hypotheses.
//
// Nothing here minimizes over auxiliary matrices; the combinators only apply
// closed-form inequalities, after verifying nondegeneracy and shapes.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "xrank/charmat.hpp"
#include "xrank/construction.hpp"
#include "xrank/tensor3.hpp"

namespace xrank {

enum class BoundRule { Flattening, PartitionCase, BlockLayout, Certificate, Exact };

std::string to_string(BoundRule rule);

struct LowerBound {
  std::size_t value = 0;
  BoundRule rule = BoundRule::Exact;
  /// Named operands the value was computed from, in evaluation order.
  std::vector<std::pair<std::string, std::size_t>> inputs;
  std::string note;
};

/// Raised when a combinator's hypotheses fail (degenerate operand).
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// max over the three mode flattenings of their matrix rank.
LowerBound flattening_bound(const Tensor3& t);

/// Exact matrix rank of a single-slice tensor.
LowerBound matrix_rank_bound(const Tensor3& t);

enum class PartitionCase { I, II, III };

/// Operands for the three closed forms of the slice-partition bound.
/// The caller supplies bounds and ranks it has already verified.
struct PartitionInputs {
  PartitionCase which = PartitionCase::II;
  LowerBound g1;
  LowerBound g3;
  std::size_t g1_row_rank = 0;  // case I
  std::size_t g3_col_rank = 0;  // cases I and II
  std::size_t g3_row_rank = 0;  // case III
  std::size_t dim_s = 0;        // cases II and III
  bool g1_nondegenerate = false;
  bool g2_nondegenerate = false;
  bool g3_nondegenerate = false;
};

/// case I:   max(R[G1] + colrank G3, R[G3] + rowrank G1)
/// case II:  max(R[G1] + colrank G3, R[G3] + dim s)
/// case III: max(R[G1] + rowrank G3, R[G3] + dim s)
/// Throws HypothesisError if any Gi is flagged degenerate.
LowerBound partition_bound(const PartitionInputs& in);

/// Bound for M = [[A E, 0 B], [0 C, 0 0]]:
///   R[M] >= R[A] + colrank B(t) + rowrank C(t).
/// Shapes: A m x n x p, B m x n' x p', C m' x n x p', E m x n x p'.
/// E only takes part in the shape check. Throws std::invalid_argument on a
/// shape mismatch and HypothesisError if A, B or C is degenerate.
LowerBound block_bound(const Tensor3& a, const Tensor3& b, const Tensor3& c, const Tensor3& e,
                       const LowerBound& r_a, const RankOptions& opts = {});

/// The block tensor M that block_bound speaks about.
Tensor3 block_layout(const Tensor3& a, const Tensor3& b, const Tensor3& c, const Tensor3& e);

struct LevelRecord {
  std::size_t level = 0;
  Dims3 dims{};
  std::size_t nnz = 0;
  std::size_t row_rank = 0;
  std::size_t col_rank = 0;
  NondegeneracyReport nondegenerate;
  /// row_rank + col_rank, added when passing to the next level (0 for the final tensor).
  std::size_t increment = 0;
  /// Lower bound on the rank of this level's tensor.
  std::size_t cumulative_bound = 0;
  /// The next level equals the block layout with A = B = C = this level, E = 0.
  bool layout_matches = true;
};

struct Certificate {
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint32_t field = 2;
  std::string rank_path;
  std::uint64_t seed = 0;
  /// Levels 0..l-1, each feeding one application of the block bound.
  std::vector<LevelRecord> levels;
  /// The final tensor A(l); its cumulative_bound is final_bound.
  LevelRecord final_level;
  std::size_t final_bound = 0;
  bool valid = false;
  std::optional<std::size_t> failing_level;
  std::string failure;
};

/// Replays the block bound at every level of the recursion.
Certificate certificate(const ConstructionParams& params, const RankOptions& opts = {});

/// 2 n^k - n^(k-1)
std::size_t expected_final_bound(std::size_t n, std::size_t k);

/// Re-derives validity from the recorded numbers alone (no rank computation):
/// increments, telescoping sums, dimensions and the closed form.
/// Returns an empty string when consistent, else the first problem found.
std::string recheck_arithmetic(const Certificate& cert);

}  // namespace xrank
