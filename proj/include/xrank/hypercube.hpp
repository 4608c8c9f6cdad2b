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

// Reshaping between [n]^r tensors (r = 2k + 1) and n^k x n^k x n tensors.
//
// Index groups (i_1..i_k) and (i_{k+1}..i_{2k}) are encoded big-endian in
// base n, first index most significant:
//   row = 1 + sum_t (i_t - 1) n^(k - t)
// and the last index becomes the depth index unchanged.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "xrank/tensor3.hpp"

namespace xrank {

/// Sparse order-r tensor over [n]^r with 1-based index tuples. r must be odd and >= 3.
class TensorR {
 public:
  using Index = std::vector<std::size_t>;
  using Entries = std::map<Index, std::uint32_t>;

  /// Throws std::invalid_argument for even r, r < 3 or n < 1.
  TensorR(FieldSpec field, std::size_t order, std::size_t n);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t order() const noexcept { return order_; }
  std::size_t n() const noexcept { return n_; }
  /// k = (r - 1) / 2
  std::size_t half() const noexcept { return (order_ - 1) / 2; }
  std::size_t nnz() const noexcept { return entries_.size(); }
  const Entries& entries() const noexcept { return entries_; }

  std::uint32_t at(const Index& idx) const;
  void set(const Index& idx, std::uint64_t v);
  void add(const Index& idx, std::uint32_t v);

  friend bool operator==(const TensorR&, const TensorR&) = default;

 private:
  void check_index(const Index& idx) const;

  FieldSpec field_;
  std::size_t order_;
  std::size_t n_;
  Entries entries_;
};

/// The n^k x n^k x n image of an order-(2k+1) tensor.
Tensor3 phi(const TensorR& t);

/// Inverse reshape. Throws std::invalid_argument unless t is n^k x n^k x n.
TensorR phi_inverse(const Tensor3& t, std::size_t n, std::size_t k);

/// Sum of simple order-r terms; factors[term][mode] has length n.
struct HypercubeDecomposition {
  FieldSpec field;
  std::size_t order = 3;
  std::size_t n = 1;
  std::vector<std::vector<Vec>> factors;

  std::size_t terms() const noexcept { return factors.size(); }
};

TensorR materialize(const HypercubeDecomposition& d);

/// Kronecker product x_1 (x) ... (x) x_m, first factor most significant.
Vec kron(const FieldSpec& f, const std::vector<Vec>& xs);

/// Maps every simple r-way term to the simple 3-way term
/// (x_1..x_k) (x) (x_{k+1}..x_{2k}) (x) x_r.
Decomposition push_forward(const HypercubeDecomposition& d);

struct TransportCertificate {
  HypercubeDecomposition hypercube;
  Decomposition three_way{FieldSpec(2), {}, {}, {}};
  std::size_t terms = 0;
  /// phi(materialize(hypercube)) == materialize(three_way)
  bool verified = false;
};

/// Pulls a 3-way witness back to the hypercube. Every a_t and b_t must split
/// as a Kronecker product of k length-n vectors (always true for k = 1).
/// Throws std::invalid_argument when the witness has the wrong shape or a
/// term does not split.
TransportCertificate transport_witness(const Decomposition& d, std::size_t n, std::size_t k);

}  // namespace xrank
