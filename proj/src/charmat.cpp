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

#include "xrank/charmat.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace xrank {

std::string to_string(RankPath path) {
  switch (path) {
    case RankPath::Automatic: return "automatic";
    case RankPath::Symbolic: return "symbolic";
    case RankPath::Randomized: return "randomized";
  }
  return "unknown";
}

Polynomial CharMatrix::entry(std::size_t i, std::size_t j) const {
  Polynomial p(base_.field(), var_count());
  for (std::size_t k = 1; k <= var_count(); ++k)
    if (auto v = base_.at(i, j, k); v != 0) {
      Monomial m(var_count(), 0);
      m[k - 1] = 1;
      p.add_term(m, v);
    }
  return p;
}

MatF CharMatrix::evaluate(std::span<const std::uint32_t> point) const {
  if (point.size() != var_count())
    throw std::invalid_argument("evaluate: point has wrong number of coordinates");
  const FieldSpec& f = base_.field();
  MatF m(f, rows(), cols());
  for (const auto& [idx, v] : base_.entries()) {
    auto& e = m(idx[0] - 1, idx[1] - 1);
    e = f.add(e, f.mul(v, point[idx[2] - 1] % f.modulus()));
  }
  return m;
}

Matrix<ExtensionField> CharMatrix::evaluate(const ExtensionField& ext,
                                            std::span<const ExtensionField::Element> point) const {
  if (point.size() != var_count())
    throw std::invalid_argument("evaluate: point has wrong number of coordinates");
  Matrix<ExtensionField> m(ext, rows(), cols());
  for (const auto& [idx, v] : base_.entries()) {
    auto& e = m(idx[0] - 1, idx[1] - 1);
    e = ext.add(e, ext.mul(ext.embed(v), point[idx[2] - 1]));
  }
  return m;
}

namespace detail {

namespace {

using Key = std::pair<std::size_t, Monomial>;
using SparseVec = std::map<Key, std::uint32_t>;

std::vector<ExtensionField::Element> random_point(const ExtensionField& ext, std::size_t n,
                                                  std::mt19937_64& rng) {
  std::vector<ExtensionField::Element> s(n);
  for (auto& x : s) x = ext.random(rng);
  return s;
}

}  // namespace

std::size_t symbolic_row_rank(const CharMatrix& m) {
  const FieldSpec& f = m.base().field();
  // Each row is an F-vector indexed by (column, monomial); keep an echelon
  // basis keyed by leading position.
  std::map<Key, SparseVec> basis;
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    SparseVec v;
    for (std::size_t j = 1; j <= m.cols(); ++j) {
      const Polynomial e = m.entry(i, j);
      for (const auto& [mono, c] : e.terms()) v[{j, mono}] = c;
    }
    while (!v.empty()) {
      const auto [lead_key, lead_c] = *v.begin();
      auto it = basis.find(lead_key);
      if (it == basis.end()) {
        const auto scale = f.inv(lead_c);
        for (auto& [k, c] : v) c = f.mul(c, scale);
        basis.emplace(lead_key, std::move(v));
        break;
      }
      for (const auto& [k, c] : it->second) {
        auto& slot = v[k];
        slot = f.sub(slot, f.mul(lead_c, c));
        if (slot == 0) v.erase(k);
      }
    }
  }
  return basis.size();
}

std::size_t randomized_row_rank(const CharMatrix& m, std::uint64_t seed, std::size_t trials) {
  if (m.rows() == 0 || m.cols() == 0 || m.var_count() == 0) return 0;
  const auto ext = ExtensionField::with_min_bits(m.base().field());
  std::mt19937_64 rng(seed);
  // Evaluating at var_count() generic points side by side keeps every
  // F-linear relation between rows and, with high probability, no others.
  const std::size_t points = m.var_count();
  std::size_t best = 0;
  for (std::size_t t = 0; t < std::max<std::size_t>(trials, 1); ++t) {
    Matrix<ExtensionField> stacked(ext, m.rows(), m.cols() * points);
    for (std::size_t u = 0; u < points; ++u) {
      const auto s = random_point(ext, m.var_count(), rng);
      const auto eval = m.evaluate(ext, s);
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) stacked(i, u * m.cols() + j) = eval(i, j);
    }
    best = std::max(best, rank(stacked));
  }
  return best;
}

std::size_t symbolic_generic_rank(const CharMatrix& m) {
  const FieldSpec& f = m.base().field();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<Polynomial>> a;
  a.reserve(rows);
  for (std::size_t i = 1; i <= rows; ++i) {
    std::vector<Polynomial> row;
    row.reserve(cols);
    for (std::size_t j = 1; j <= cols; ++j) row.push_back(m.entry(i, j));
    a.push_back(std::move(row));
  }

  Polynomial prev = Polynomial::constant(f, m.var_count(), 1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Sparsest available pivot keeps intermediate growth down.
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!a[i][c].is_zero() && (pivot == rows || a[i][c].size() < a[pivot][c].size()))
        pivot = i;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Polynomial num = a[r][c] * a[i][j];
        if (!a[i][c].is_zero() && !a[r][j].is_zero()) num = num - a[i][c] * a[r][j];
        a[i][j] = exact_div(num, prev);
      }
      a[i][c] = Polynomial(f, m.var_count());
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::size_t randomized_generic_rank(const CharMatrix& m, std::uint64_t seed, std::size_t trials) {
  if (m.rows() == 0 || m.cols() == 0 || m.var_count() == 0) return 0;
  const auto ext = ExtensionField::with_min_bits(m.base().field());
  std::mt19937_64 rng(seed);
  std::size_t best = 0;
  for (std::size_t t = 0; t < std::max<std::size_t>(trials, 1); ++t)
    best = std::max(best, rank(m.evaluate(ext, random_point(ext, m.var_count(), rng))));
  return best;
}

}  // namespace detail

namespace {

RankPath resolve(const CharMatrix& m, const RankOptions& opts) {
  if (opts.path != RankPath::Automatic) return opts.path;
  return std::min(m.rows(), m.cols()) <= opts.symbolic_threshold ? RankPath::Symbolic
                                                                  : RankPath::Randomized;
}

}  // namespace

RankResult row_rank(const CharMatrix& m, const RankOptions& opts) {
  const RankPath path = resolve(m, opts);
  if (path == RankPath::Symbolic) return {detail::symbolic_row_rank(m), path};
  return {detail::randomized_row_rank(m, opts.seed, opts.trials), path};
}

RankResult col_rank(const CharMatrix& m, const RankOptions& opts) {
  return row_rank(CharMatrix(transpose12(m.base())), opts);
}

RankResult generic_rank(const CharMatrix& m, const RankOptions& opts) {
  const RankPath path = resolve(m, opts);
  if (path == RankPath::Symbolic) return {detail::symbolic_generic_rank(m), path};
  return {detail::randomized_generic_rank(m, opts.seed, opts.trials), path};
}

NondegeneracyReport is_nondegenerate(const Tensor3& t, const RankOptions& opts) {
  NondegeneracyReport rep;
  const CharMatrix cm(t);
  rep.slice_rank = rank(flatten(t, 3));
  rep.slices_independent = rep.slice_rank == t.n3();
  const auto rr = row_rank(cm, opts);
  const auto cr = col_rank(cm, opts);
  rep.row_rank = rr.value;
  rep.col_rank = cr.value;
  rep.path = rr.path;
  rep.full_row_rank = rep.row_rank == t.n1();
  rep.full_col_rank = rep.col_rank == t.n2();
  return rep;
}

}  // namespace xrank
