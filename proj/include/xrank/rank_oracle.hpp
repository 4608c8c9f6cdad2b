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

// Exhaustive exact tensor rank over small prime fields.
//
// For a candidate rank r the search enumerates the first- and third-mode
// factors (a_t, c_t) up to scaling and reordering, then solves the linear
// system for the second-mode factors b_t:
//
//   * every a_t and c_t is nonzero with leading nonzero entry 1; b_t
//     absorbs all scalars;
//   * the r pairs (a_t, c_t) form a nondecreasing sequence in lexicographic
//     order; repeats are allowed.
//
// Every decomposition of length <= r can be brought into that form (a term
// with b_t = 0 pads shorter ones), so an empty search at r proves rank > r.

#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "xrank/tensor3.hpp"

namespace xrank {

struct OracleLimits {
  /// log2 of the number of canonical (A, C) candidates allowed at one rank.
  double max_enumeration_bits = 24.0;
  /// Linear-system solves across the whole call.
  std::uint64_t max_solves = std::uint64_t{1} << 28;
  std::chrono::milliseconds max_wall{std::chrono::minutes(10)};
};

enum class OracleStatus { Exact, ExceededRMax, ExceededBudget };

std::string to_string(OracleStatus status);

struct OracleResult {
  /// The rank when status is Exact.
  std::size_t rank = 0;
  Decomposition witness{FieldSpec(2), {}, {}, {}};
  /// Every r <= searched_up_to is refuted (or implied by the flattening bound);
  /// for Exact this is rank - 1, otherwise rank > searched_up_to.
  std::optional<std::size_t> searched_up_to;
  OracleStatus status = OracleStatus::Exact;
  std::uint64_t solves = 0;
};

/// Dimensions or field too large for exhaustive search.
class InfeasibleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// log2 of the number of canonical candidates at rank r.
double enumeration_bits(const Dims3& dims, std::uint32_t p, std::size_t r);

/// Searches r = flattening bound, flattening bound + 1, ... up to r_max
/// (default: the trivial upper bound min(n1 n2, n1 n3, n2 n3)).
/// Throws InfeasibleError if even the first rank tried exceeds the
/// enumeration guard.
OracleResult exact_rank(const Tensor3& t, std::optional<std::size_t> r_max = std::nullopt,
                        const OracleLimits& limits = {});

/// True iff no decomposition with at most r terms exists. Throws
/// BudgetExceeded when the limits stop the search before it completes and
/// InfeasibleError when the enumeration guard rejects r.
bool refute_rank(const Tensor3& t, std::size_t r, const OracleLimits& limits = {});

/// A decomposition with at most r terms, if one exists. Same errors as refute_rank.
std::optional<Decomposition> find_decomposition(const Tensor3& t, std::size_t r,
                                                const OracleLimits& limits = {});

}  // namespace xrank
