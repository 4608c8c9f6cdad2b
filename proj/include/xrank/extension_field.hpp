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
#include <random>
#include <vector>

#include "xrank/galois.hpp"

namespace xrank {

/// GF(p^e) = GF(p)[x] / (f) for a monic irreducible f of degree e.
///
/// Used only for random evaluation of characteristic matrices, where the
/// field has to be large enough for Schwartz-Zippel to bite.
class ExtensionField {
 public:
  static constexpr std::size_t kMaxDegree = 32;

  struct Element {
    std::array<std::uint32_t, kMaxDegree> c{};
    friend bool operator==(const Element&, const Element&) = default;
  };
  using value_type = Element;

  /// Smallest extension of `base` with at least 2^min_bits elements.
  static ExtensionField with_min_bits(FieldSpec base, unsigned min_bits = 20);

  /// Throws std::invalid_argument if `modulus` (low to high, monic) is not irreducible.
  ExtensionField(FieldSpec base, std::vector<std::uint32_t> modulus);

  const FieldSpec& base() const noexcept { return base_; }
  std::size_t degree() const noexcept { return degree_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Element zero() const noexcept { return {}; }
  Element one() const noexcept {
    Element e;
    e.c[0] = 1;
    return e;
  }
  Element embed(std::uint32_t v) const noexcept {
    Element e;
    e.c[0] = v % base_.modulus();
    return e;
  }
  bool is_zero(const Element& a) const noexcept { return a == Element{}; }

  Element add(const Element& a, const Element& b) const noexcept;
  Element sub(const Element& a, const Element& b) const noexcept;
  Element neg(const Element& a) const noexcept;
  Element mul(const Element& a, const Element& b) const noexcept;
  /// Throws std::domain_error on zero.
  Element inv(const Element& a) const;

  Element random(std::mt19937_64& rng) const;

  friend bool operator==(const ExtensionField&, const ExtensionField&) = default;

 private:
  FieldSpec base_;
  std::size_t degree_;
  std::vector<std::uint32_t> modulus_;
};

namespace poly1 {

// Dense univariate polynomials over GF(p), coefficients low to high, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

Poly mod(const FieldSpec& f, Poly a, const Poly& m);
Poly mulmod(const FieldSpec& f, const Poly& a, const Poly& b, const Poly& m);
Poly gcd(const FieldSpec& f, Poly a, Poly b);
bool is_irreducible(const FieldSpec& f, const Poly& m);

}  // namespace poly1

}  // namespace xrank
