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

#include "xrank/galois.hpp"

#include <bit>
#include <limits>
#include <string>

namespace xrank {

bool is_prime(std::uint64_t p) noexcept {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

FieldSpec::FieldSpec(std::uint64_t p) {
  if (p > std::numeric_limits<std::uint32_t>::max() || !is_prime(p))
    throw std::invalid_argument("field modulus must be a prime below 2^32, got " +
                                std::to_string(p));
  p_ = static_cast<std::uint32_t>(p);
}

FieldSpec::value_type FieldSpec::inv(value_type a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero");
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a % p_;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return from_int(t);
}

namespace {

const FieldSpec& common_field(const Scalar& a, const Scalar& b) {
  if (a.field() != b.field())
    throw std::invalid_argument("scalars from different fields: GF(" +
                                std::to_string(a.field().modulus()) + ") vs GF(" +
                                std::to_string(b.field().modulus()) + ")");
  return a.field();
}

}  // namespace

Scalar Scalar::inv() const { return Scalar(field_, field_.inv(value_)); }

Scalar operator+(const Scalar& a, const Scalar& b) {
  const auto& f = common_field(a, b);
  return Scalar(f, f.add(a.value_, b.value_));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  const auto& f = common_field(a, b);
  return Scalar(f, f.sub(a.value_, b.value_));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  const auto& f = common_field(a, b);
  return Scalar(f, f.mul(a.value_, b.value_));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  const auto& f = common_field(a, b);
  return Scalar(f, f.div(a.value_, b.value_));
}

Scalar operator-(const Scalar& a) { return Scalar(a.field_, a.field_.neg(a.value_)); }

namespace detail {

std::size_t rank_gf2_packed(const MatF& m) {
  const std::size_t words = (m.cols() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(m.rows(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) & 1u) rows[i][j / 64] |= std::uint64_t{1} << (j % 64);

  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < rows.size(); ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t p = rank;
    while (p < rows.size() && !(rows[p][w] & bit)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i)
      if (rows[i][w] & bit)
        for (std::size_t x = w; x < words; ++x) rows[i][x] ^= rows[rank][x];
    ++rank;
  }
  return rank;
}

}  // namespace detail
}  // namespace xrank
