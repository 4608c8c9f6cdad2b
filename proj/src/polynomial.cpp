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

#include "xrank/polynomial.hpp"

#include <stdexcept>

namespace xrank {

namespace {

void check_compatible(const Polynomial& a, const Polynomial& b) {
  if (a.field() != b.field() || a.nvars() != b.nvars())
    throw std::invalid_argument("polynomials over different rings");
}

}  // namespace

Polynomial Polynomial::constant(FieldSpec field, std::size_t nvars, std::uint32_t c) {
  Polynomial p(field, nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(FieldSpec field, std::size_t nvars, std::size_t var,
                                std::uint32_t c) {
  if (var >= nvars) throw std::out_of_range("variable index out of range");
  Polynomial p(field, nvars);
  Monomial m(nvars, 0);
  m[var] = 1;
  p.add_term(m, c);
  return p;
}

void Polynomial::add_term(const Monomial& m, std::uint32_t c) {
  c %= field_.modulus();
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = field_.add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  check_compatible(a, b);
  Polynomial r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  check_compatible(a, b);
  Polynomial r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, a.field_.neg(c));
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_compatible(a, b);
  Polynomial r(a.field_, a.nvars_);
  Monomial m(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t v = 0; v < m.size(); ++v) m[v] = static_cast<std::uint16_t>(ma[v] + mb[v]);
      r.add_term(m, a.field_.mul(ca, cb));
    }
  return r;
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  check_compatible(a, b);
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  const FieldSpec& f = a.field_;
  const auto& [lead_m, lead_c] = *b.terms_.begin();
  const auto lead_inv = f.inv(lead_c);

  Polynomial quotient(f, a.nvars_);
  Polynomial rem = a;
  Monomial m(a.nvars_);
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms_.begin();
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (rm[v] < lead_m[v]) throw std::domain_error("polynomial division is not exact");
      m[v] = static_cast<std::uint16_t>(rm[v] - lead_m[v]);
    }
    const auto q = f.mul(rc, lead_inv);
    quotient.add_term(m, q);
    Monomial shifted(a.nvars_);
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t v = 0; v < m.size(); ++v)
        shifted[v] = static_cast<std::uint16_t>(m[v] + mb[v]);
      rem.add_term(shifted, f.neg(f.mul(q, cb)));
    }
  }
  return quotient;
}

}  // namespace xrank
