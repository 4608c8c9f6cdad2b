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

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "xrank/galois.hpp"

namespace xrank {

/// 1-based index triple (i, j, k).
using Index3 = std::array<std::size_t, 3>;
using Dims3 = std::array<std::size_t, 3>;
using Vec = std::vector<std::uint32_t>;

/// Sparse n1 x n2 x n3 tensor over GF(p). Only nonzero entries are stored,
/// keyed by 1-based index triples in lexicographic order.
class Tensor3 {
 public:
  using Entries = std::map<Index3, std::uint32_t>;

  Tensor3(FieldSpec field, std::size_t n1, std::size_t n2, std::size_t n3)
      : field_(field), dims_{n1, n2, n3} {}
  Tensor3(FieldSpec field, Dims3 dims) : field_(field), dims_(dims) {}

  /// m x m x 1 tensor whose single slice is the identity.
  static Tensor3 identity_slice(FieldSpec field, std::size_t m);

  const FieldSpec& field() const noexcept { return field_; }
  const Dims3& dims() const noexcept { return dims_; }
  std::size_t n1() const noexcept { return dims_[0]; }
  std::size_t n2() const noexcept { return dims_[1]; }
  std::size_t n3() const noexcept { return dims_[2]; }
  std::size_t nnz() const noexcept { return entries_.size(); }
  const Entries& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }

  std::uint32_t at(std::size_t i, std::size_t j, std::size_t k) const;
  /// Stores v mod p; storing zero erases the entry. Throws std::out_of_range.
  void set(std::size_t i, std::size_t j, std::size_t k, std::uint64_t v);
  void add(std::size_t i, std::size_t j, std::size_t k, std::uint32_t v);

  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  void check_index(std::size_t i, std::size_t j, std::size_t k) const;

  FieldSpec field_;
  Dims3 dims_;
  Entries entries_;
};

/// k-th slice (1-based) as an n1 x n2 matrix.
MatF slice(const Tensor3& t, std::size_t k);

/// Slices of a followed by the slices of b.
Tensor3 concat(const Tensor3& a, const Tensor3& b);

/// Spatial 2x2 block layout [[tl, tr], [bl, br]] of equal-depth tensors.
Tensor3 block2x2(const Tensor3& tl, const Tensor3& tr, const Tensor3& bl, const Tensor3& br);

/// Mode-m matricization. Rows follow mode m; columns run over the remaining
/// two modes row-major, smaller mode outer.
MatF flatten(const Tensor3& t, int mode);

/// Swaps modes 1 and 2 (transposes every slice).
Tensor3 transpose12(const Tensor3& t);

/// Rank witness: term t is a[t] (x) b[t] (x) c[t].
struct Decomposition {
  FieldSpec field;
  std::vector<Vec> a;
  std::vector<Vec> b;
  std::vector<Vec> c;

  std::size_t rank() const noexcept { return a.size(); }
};

/// Sum of the outer products. Throws std::invalid_argument on length mismatch.
Tensor3 materialize(const Decomposition& d, const Dims3& dims);

/// Drops terms with a zero factor.
Decomposition prune_zero_terms(Decomposition d);

}  // namespace xrank
