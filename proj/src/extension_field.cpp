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

#include "xrank/extension_field.hpp"

#include <cmath>
#include <stdexcept>

namespace xrank {
namespace poly1 {

namespace {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly sub(const FieldSpec& f, Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
  trim(a);
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// x^(p^times) mod m, by repeated p-th powering.
Poly frobenius_x(const FieldSpec& f, const Poly& m, std::size_t times) {
  Poly h = mod(f, Poly{0, 1}, m);
  for (std::size_t t = 0; t < times; ++t) {
    Poly result{1};
    Poly base = h;
    for (std::uint64_t e = f.modulus(); e > 0; e >>= 1) {
      if (e & 1) result = mulmod(f, result, base, m);
      base = mulmod(f, base, base, m);
    }
    h = std::move(result);
  }
  return h;
}

}  // namespace

Poly mod(const FieldSpec& f, Poly a, const Poly& m) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const auto lead_inv = f.inv(m.back());
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const auto q = f.mul(a.back(), lead_inv);
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(q, m[i]));
    trim(a);
  }
  return a;
}

Poly mulmod(const FieldSpec& f, const Poly& a, const Poly& b, const Poly& m) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  return mod(f, std::move(c), m);
}

Poly gcd(const FieldSpec& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = mod(f, std::move(a), b);
    std::swap(a, b);
  }
  return a;
}

bool is_irreducible(const FieldSpec& f, const Poly& m) {
  if (m.size() < 2) return false;
  const std::size_t e = m.size() - 1;
  if (e == 1) return true;
  // Rabin: x^(p^e) = x mod m, and gcd(x^(p^(e/q)) - x, m) = 1 for each prime q | e.
  const Poly x{0, 1};
  if (sub(f, frobenius_x(f, m, e), x) != Poly{}) return false;
  for (auto q : prime_factors(e)) {
    const Poly g = gcd(f, sub(f, frobenius_x(f, m, e / q), x), m);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace poly1

ExtensionField ExtensionField::with_min_bits(FieldSpec base, unsigned min_bits) {
  const double bits_per_digit = std::log2(static_cast<double>(base.modulus()));
  auto degree = static_cast<std::size_t>(std::ceil(min_bits / bits_per_digit - 1e-9));
  if (degree == 0) degree = 1;
  if (degree > kMaxDegree) throw std::invalid_argument("extension degree too large");

  // Lexicographically first monic irreducible of the required degree.
  std::vector<std::uint32_t> m(degree + 1, 0);
  m[degree] = 1;
  for (;;) {
    if (poly1::is_irreducible(base, m)) return ExtensionField(base, m);
    std::size_t i = 0;
    while (i < degree && ++m[i] == base.modulus()) m[i++] = 0;
    if (i == degree) throw std::logic_error("no irreducible polynomial found");
  }
}

ExtensionField::ExtensionField(FieldSpec base, std::vector<std::uint32_t> modulus)
    : base_(base), degree_(modulus.size() - 1), modulus_(std::move(modulus)) {
  if (modulus_.size() < 2 || degree_ > kMaxDegree || modulus_.back() != 1 ||
      !poly1::is_irreducible(base_, modulus_))
    throw std::invalid_argument("extension modulus must be monic irreducible");
}

ExtensionField::Element ExtensionField::add(const Element& a, const Element& b) const noexcept {
  Element r;
  for (std::size_t i = 0; i < degree_; ++i) r.c[i] = base_.add(a.c[i], b.c[i]);
  return r;
}

ExtensionField::Element ExtensionField::sub(const Element& a, const Element& b) const noexcept {
  Element r;
  for (std::size_t i = 0; i < degree_; ++i) r.c[i] = base_.sub(a.c[i], b.c[i]);
  return r;
}

ExtensionField::Element ExtensionField::neg(const Element& a) const noexcept {
  Element r;
  for (std::size_t i = 0; i < degree_; ++i) r.c[i] = base_.neg(a.c[i]);
  return r;
}

ExtensionField::Element ExtensionField::mul(const Element& a, const Element& b) const noexcept {
  std::array<std::uint32_t, 2 * kMaxDegree> prod{};
  for (std::size_t i = 0; i < degree_; ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < degree_; ++j)
      prod[i + j] = base_.add(prod[i + j], base_.mul(a.c[i], b.c[j]));
  }
  // Reduce with the monic modulus: x^e = -(m_0 + ... + m_{e-1} x^{e-1}).
  for (std::size_t d = 2 * degree_ - 1; d-- > degree_;) {
    const auto q = prod[d];
    if (q == 0) continue;
    prod[d] = 0;
    const std::size_t shift = d - degree_;
    for (std::size_t i = 0; i < degree_; ++i)
      prod[shift + i] = base_.sub(prod[shift + i], base_.mul(q, modulus_[i]));
  }
  Element r;
  for (std::size_t i = 0; i < degree_; ++i) r.c[i] = prod[i];
  return r;
}

ExtensionField::Element ExtensionField::inv(const Element& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero");
  // a^(q-2) with q = p^e.
  Element result = one();
  Element base = a;
  // Exponent q - 2 in base p: digits (p-1, ..., p-1, p-2) low to high.
  for (std::size_t digit = 0; digit < degree_; ++digit) {
    std::uint64_t e = digit == 0 ? base_.modulus() - 2 : base_.modulus() - 1;
    Element pow = one();
    Element b = base;
    for (; e > 0; e >>= 1) {
      if (e & 1) pow = mul(pow, b);
      b = mul(b, b);
    }
    result = mul(result, pow);
    // base <- base^p
    Element next = one();
    Element bb = base;
    for (std::uint64_t f = base_.modulus(); f > 0; f >>= 1) {
      if (f & 1) next = mul(next, bb);
      bb = mul(bb, bb);
    }
    base = next;
  }
  return result;
}

ExtensionField::Element ExtensionField::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint32_t> digit(0, base_.modulus() - 1);
  Element r;
  for (std::size_t i = 0; i < degree_; ++i) r.c[i] = digit(rng);
  return r;
}

}  // namespace xrank
