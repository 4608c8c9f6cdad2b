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

#include "xrank/hypercube.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

namespace xrank {

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// 1-based big-endian digits -> 1-based position.
std::size_t encode(const std::size_t* digits, std::size_t count, std::size_t n) {
  std::size_t pos = 0;
  for (std::size_t t = 0; t < count; ++t) pos = pos * n + (digits[t] - 1);
  return pos + 1;
}

void decode(std::size_t pos, std::size_t count, std::size_t n, std::size_t* digits) {
  std::size_t v = pos - 1;
  for (std::size_t t = count; t-- > 0;) {
    digits[t] = v % n + 1;
    v /= n;
  }
}

}  // namespace

TensorR::TensorR(FieldSpec field, std::size_t order, std::size_t n)
    : field_(field), order_(order), n_(n) {
  if (order < 3 || order % 2 == 0)
    throw std::invalid_argument("hypercube order must be odd and >= 3, got " +
                                std::to_string(order));
  if (n < 1) throw std::invalid_argument("hypercube side must be >= 1");
}

void TensorR::check_index(const Index& idx) const {
  if (idx.size() != order_)
    throw std::out_of_range("index has " + std::to_string(idx.size()) + " components, expected " +
                            std::to_string(order_));
  for (auto i : idx)
    if (i < 1 || i > n_) throw std::out_of_range("index component outside [1, n]");
}

std::uint32_t TensorR::at(const Index& idx) const {
  check_index(idx);
  auto it = entries_.find(idx);
  return it == entries_.end() ? 0 : it->second;
}

void TensorR::set(const Index& idx, std::uint64_t v) {
  check_index(idx);
  const auto r = static_cast<std::uint32_t>(v % field_.modulus());
  if (r == 0)
    entries_.erase(idx);
  else
    entries_[idx] = r;
}

void TensorR::add(const Index& idx, std::uint32_t v) {
  set(idx, field_.add(at(idx), v % field_.modulus()));
}

Tensor3 phi(const TensorR& t) {
  const std::size_t k = t.half();
  const std::size_t side = ipow(t.n(), k);
  Tensor3 out(t.field(), side, side, t.n());
  for (const auto& [idx, v] : t.entries())
    out.set(encode(idx.data(), k, t.n()), encode(idx.data() + k, k, t.n()), idx[2 * k], v);
  return out;
}

TensorR phi_inverse(const Tensor3& t, std::size_t n, std::size_t k) {
  if (k < 1) throw std::invalid_argument("phi_inverse: k must be >= 1");
  const std::size_t side = ipow(n, k);
  if (t.n1() != side || t.n2() != side || t.n3() != n)
    throw std::invalid_argument("phi_inverse: expected " + std::to_string(side) + "x" +
                                std::to_string(side) + "x" + std::to_string(n) + " tensor");
  TensorR out(t.field(), 2 * k + 1, n);
  TensorR::Index idx(2 * k + 1);
  for (const auto& [ijk, v] : t.entries()) {
    decode(ijk[0], k, n, idx.data());
    decode(ijk[1], k, n, idx.data() + k);
    idx[2 * k] = ijk[2];
    out.set(idx, v);
  }
  return out;
}

Vec kron(const FieldSpec& f, const std::vector<Vec>& xs) {
  Vec out{1};
  for (const Vec& x : xs) {
    Vec next;
    next.reserve(out.size() * x.size());
    for (auto a : out)
      for (auto b : x) next.push_back(f.mul(a, b));
    out = std::move(next);
  }
  return out;
}

TensorR materialize(const HypercubeDecomposition& d) {
  TensorR out(d.field, d.order, d.n);
  const FieldSpec& f = d.field;
  TensorR::Index idx(d.order);
  for (const auto& term : d.factors) {
    if (term.size() != d.order) throw std::invalid_argument("hypercube term has wrong order");
    for (const auto& x : term)
      if (x.size() != d.n) throw std::invalid_argument("hypercube factor has wrong length");
    // Walk the support of the outer product odometer-style.
    std::fill(idx.begin(), idx.end(), 1);
    for (;;) {
      std::uint32_t v = 1;
      for (std::size_t m = 0; m < d.order && v != 0; ++m) v = f.mul(v, term[m][idx[m] - 1]);
      if (v != 0) out.add(idx, v);
      std::size_t m = d.order;
      while (m > 0 && idx[m - 1] == d.n) idx[--m] = 1;
      if (m == 0) break;
      ++idx[m - 1];
    }
  }
  return out;
}

Decomposition push_forward(const HypercubeDecomposition& d) {
  const std::size_t k = (d.order - 1) / 2;
  Decomposition out{d.field, {}, {}, {}};
  for (const auto& term : d.factors) {
    if (term.size() != d.order) throw std::invalid_argument("hypercube term has wrong order");
    out.a.push_back(kron(d.field, {term.begin(), term.begin() + static_cast<std::ptrdiff_t>(k)}));
    out.b.push_back(kron(d.field, {term.begin() + static_cast<std::ptrdiff_t>(k),
                                   term.begin() + static_cast<std::ptrdiff_t>(2 * k)}));
    out.c.push_back(term[2 * k]);
  }
  return out;
}

namespace {

// Splits v (length n^k) as x_1 (x) ... (x) x_k, or nullopt if v is not such a product.
std::optional<std::vector<Vec>> split_kron(const FieldSpec& f, const Vec& v, std::size_t n,
                                           std::size_t k) {
  if (k == 1) return std::vector<Vec>{v};
  const std::size_t tail = v.size() / n;
  // Viewed as an n x tail matrix, v must have rank one.
  std::size_t pivot_row = n;
  for (std::size_t i = 0; i < n && pivot_row == n; ++i)
    for (std::size_t j = 0; j < tail; ++j)
      if (v[i * tail + j] != 0) {
        pivot_row = i;
        break;
      }
  if (pivot_row == n) {
    // Zero vector: zero first factor, ones elsewhere.
    std::vector<Vec> out{Vec(n, 0)};
    for (std::size_t t = 1; t < k; ++t) out.push_back(Vec(n, 1));
    return out;
  }
  const Vec row(v.begin() + static_cast<std::ptrdiff_t>(pivot_row * tail),
                v.begin() + static_cast<std::ptrdiff_t>((pivot_row + 1) * tail));
  const std::size_t j0 = static_cast<std::size_t>(
      std::find_if(row.begin(), row.end(), [](std::uint32_t x) { return x != 0; }) - row.begin());
  const auto inv = f.inv(row[j0]);
  Vec head(n);
  for (std::size_t i = 0; i < n; ++i) head[i] = f.mul(v[i * tail + j0], inv);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < tail; ++j)
      if (v[i * tail + j] != f.mul(head[i], row[j])) return std::nullopt;
  auto rest = split_kron(f, row, n, k - 1);
  if (!rest) return std::nullopt;
  rest->insert(rest->begin(), std::move(head));
  return rest;
}

}  // namespace

TransportCertificate transport_witness(const Decomposition& d, std::size_t n, std::size_t k) {
  if (k < 1) throw std::invalid_argument("transport_witness: k must be >= 1");
  const std::size_t side = ipow(n, k);
  if (d.b.size() != d.rank() || d.c.size() != d.rank())
    throw std::invalid_argument("transport_witness: factor lists of different lengths");

  TransportCertificate cert;
  cert.hypercube = HypercubeDecomposition{d.field, 2 * k + 1, n, {}};
  cert.three_way = d;
  for (std::size_t t = 0; t < d.rank(); ++t) {
    if (d.a[t].size() != side || d.b[t].size() != side || d.c[t].size() != n)
      throw std::invalid_argument("transport_witness: term " + std::to_string(t) +
                                  " does not fit an n^k x n^k x n tensor");
    auto xs = split_kron(d.field, d.a[t], n, k);
    auto ys = split_kron(d.field, d.b[t], n, k);
    if (!xs || !ys)
      throw std::invalid_argument("transport_witness: term " + std::to_string(t) +
                                  " is not a Kronecker product of length-n factors");
    std::vector<Vec> term = std::move(*xs);
    term.insert(term.end(), ys->begin(), ys->end());
    term.push_back(d.c[t]);
    cert.hypercube.factors.push_back(std::move(term));
  }
  cert.terms = cert.hypercube.terms();
  const Dims3 dims{side, side, n};
  cert.verified = phi(materialize(cert.hypercube)) == materialize(d, dims) &&
                  materialize(push_forward(cert.hypercube), dims) == materialize(d, dims);
  return cert;
}

}  // namespace xrank
