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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "xrank/galois.hpp"

namespace xrank {

using Monomial = std::vector<std::uint16_t>;

/// Sparse multivariate polynomial over GF(p), terms kept in descending lex order.
class Polynomial {
 public:
  using Terms = std::map<Monomial, std::uint32_t, std::greater<Monomial>>;

  Polynomial(FieldSpec field, std::size_t nvars) : field_(field), nvars_(nvars) {}

  static Polynomial constant(FieldSpec field, std::size_t nvars, std::uint32_t c);
  /// c * s_var
  static Polynomial variable(FieldSpec field, std::size_t nvars, std::size_t var,
                             std::uint32_t c = 1);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Adds c * m; drops the term when it cancels.
  void add_term(const Monomial& m, std::uint32_t c);

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Quotient of an exact division; throws std::domain_error if b does not divide a.
  friend Polynomial exact_div(const Polynomial& a, const Polynomial& b);

 private:
  FieldSpec field_;
  std::size_t nvars_;
  Terms terms_;
};

}  // namespace xrank
