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

#include "xrank/tensor3.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace xrank {

namespace {

std::string dims_str(const Dims3& d) {
  return std::to_string(d[0]) + "x" + std::to_string(d[1]) + "x" + std::to_string(d[2]);
}

void require_same_field(const Tensor3& a, const Tensor3& b, const char* op) {
  if (a.field() != b.field())
    throw std::invalid_argument(std::string(op) + ": tensors over different fields");
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

}  // namespace

Tensor3 Tensor3::identity_slice(FieldSpec field, std::size_t m) {
  Tensor3 t(field, m, m, 1);
  for (std::size_t i = 1; i <= m; ++i) t.set(i, i, 1, 1);
  return t;
}

void Tensor3::check_index(std::size_t i, std::size_t j, std::size_t k) const {
  if (i < 1 || i > dims_[0] || j < 1 || j > dims_[1] || k < 1 || k > dims_[2])
    throw std::out_of_range("index (" + std::to_string(i) + "," + std::to_string(j) + "," +
                            std::to_string(k) + ") outside " + dims_str(dims_));
}

std::uint32_t Tensor3::at(std::size_t i, std::size_t j, std::size_t k) const {
  check_index(i, j, k);
  auto it = entries_.find({i, j, k});
  return it == entries_.end() ? 0 : it->second;
}

void Tensor3::set(std::size_t i, std::size_t j, std::size_t k, std::uint64_t v) {
  check_index(i, j, k);
  const auto r = static_cast<std::uint32_t>(v % field_.modulus());
  if (r == 0)
    entries_.erase({i, j, k});
  else
    entries_[{i, j, k}] = r;
}

void Tensor3::add(std::size_t i, std::size_t j, std::size_t k, std::uint32_t v) {
  set(i, j, k, field_.add(at(i, j, k), v % field_.modulus()));
}

MatF slice(const Tensor3& t, std::size_t k) {
  if (k < 1 || k > t.n3())
    throw std::out_of_range("slice " + std::to_string(k) + " of a tensor with " +
                            std::to_string(t.n3()) + " slices");
  MatF m(t.field(), t.n1(), t.n2());
  for (const auto& [idx, v] : t.entries())
    if (idx[2] == k) m(idx[0] - 1, idx[1] - 1) = v;
  return m;
}

Tensor3 concat(const Tensor3& a, const Tensor3& b) {
  require_same_field(a, b, "concat");
  if (a.n1() != b.n1() || a.n2() != b.n2())
    throw std::invalid_argument("concat: " + dims_str(a.dims()) + " vs " + dims_str(b.dims()));
  Tensor3 r(a.field(), a.n1(), a.n2(), a.n3() + b.n3());
  for (const auto& [idx, v] : a.entries()) r.set(idx[0], idx[1], idx[2], v);
  for (const auto& [idx, v] : b.entries()) r.set(idx[0], idx[1], a.n3() + idx[2], v);
  return r;
}

Tensor3 block2x2(const Tensor3& tl, const Tensor3& tr, const Tensor3& bl, const Tensor3& br) {
  for (const Tensor3* t : {&tr, &bl, &br}) require_same_field(tl, *t, "block2x2");
  const std::size_t depth = tl.n3();
  if (tr.n3() != depth || bl.n3() != depth || br.n3() != depth || tl.n1() != tr.n1() ||
      bl.n1() != br.n1() || tl.n2() != bl.n2() || tr.n2() != br.n2())
    throw std::invalid_argument("block2x2: incompatible blocks " + dims_str(tl.dims()) + ", " +
                                dims_str(tr.dims()) + ", " + dims_str(bl.dims()) + ", " +
                                dims_str(br.dims()));
  const std::size_t m = tl.n1();
  const std::size_t n = tl.n2();
  Tensor3 r(tl.field(), tl.n1() + bl.n1(), tl.n2() + tr.n2(), depth);
  auto place = [&](const Tensor3& t, std::size_t di, std::size_t dj) {
    for (const auto& [idx, v] : t.entries()) r.set(idx[0] + di, idx[1] + dj, idx[2], v);
  };
  place(tl, 0, 0);
  place(tr, 0, n);
  place(bl, m, 0);
  place(br, m, n);
  return r;
}

MatF flatten(const Tensor3& t, int mode) {
  const auto [n1, n2, n3] = t.dims();
  switch (mode) {
    case 1: {
      MatF m(t.field(), n1, n2 * n3);
      for (const auto& [idx, v] : t.entries()) m(idx[0] - 1, (idx[1] - 1) * n3 + idx[2] - 1) = v;
      return m;
    }
    case 2: {
      MatF m(t.field(), n2, n1 * n3);
      for (const auto& [idx, v] : t.entries()) m(idx[1] - 1, (idx[0] - 1) * n3 + idx[2] - 1) = v;
      return m;
    }
    case 3: {
      MatF m(t.field(), n3, n1 * n2);
      for (const auto& [idx, v] : t.entries()) m(idx[2] - 1, (idx[0] - 1) * n2 + idx[1] - 1) = v;
      return m;
    }
    default:
      throw std::invalid_argument("flatten: mode must be 1, 2 or 3");
  }
}

Tensor3 transpose12(const Tensor3& t) {
  Tensor3 r(t.field(), t.n2(), t.n1(), t.n3());
  for (const auto& [idx, v] : t.entries()) r.set(idx[1], idx[0], idx[2], v);
  return r;
}

Tensor3 materialize(const Decomposition& d, const Dims3& dims) {
  if (d.b.size() != d.a.size() || d.c.size() != d.a.size())
    throw std::invalid_argument("materialize: factor lists of different lengths");
  const FieldSpec& f = d.field;
  Tensor3 t(f, dims);
  for (std::size_t term = 0; term < d.rank(); ++term) {
    const Vec& a = d.a[term];
    const Vec& b = d.b[term];
    const Vec& c = d.c[term];
    if (a.size() != dims[0] || b.size() != dims[1] || c.size() != dims[2])
      throw std::invalid_argument("materialize: factor length does not match " +
                                  dims_str(dims));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j] == 0) continue;
        const auto ab = f.mul(a[i], b[j]);
        for (std::size_t k = 0; k < c.size(); ++k)
          if (c[k] != 0) t.add(i + 1, j + 1, k + 1, f.mul(ab, c[k]));
      }
    }
  }
  return t;
}

Decomposition prune_zero_terms(Decomposition d) {
  Decomposition out{d.field, {}, {}, {}};
  for (std::size_t t = 0; t < d.rank(); ++t) {
    if (is_zero_vec(d.a[t]) || is_zero_vec(d.b[t]) || is_zero_vec(d.c[t])) continue;
    out.a.push_back(std::move(d.a[t]));
    out.b.push_back(std::move(d.b[t]));
    out.c.push_back(std::move(d.c[t]));
  }
  return out;
}

}  // namespace xrank
