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

#include "xrank/rank_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "xrank/galois.hpp"

namespace xrank {

std::string to_string(OracleStatus status) {
  switch (status) {
    case OracleStatus::Exact: return "exact";
    case OracleStatus::ExceededRMax: return "exceeded_r_max";
    case OracleStatus::ExceededBudget: return "exceeded_budget";
  }
  return "unknown";
}

namespace {

/// Nonzero vectors with leading nonzero entry 1, in lexicographic order.
std::vector<Vec> canonical_vectors(std::size_t n, std::uint32_t p) {
  std::vector<Vec> out;
  Vec v(n, 0);
  for (;;) {
    // Increment v as a big-endian base-p counter.
    std::size_t pos = n;
    while (pos > 0 && ++v[pos - 1] == p) v[--pos] = 0;
    if (pos == 0) break;
    const auto lead = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
    if (*lead == 1) out.push_back(v);
  }
  return out;
}

double log2_canonical_count(std::size_t n, std::uint32_t p) {
  // (p^n - 1) / (p - 1); overflows to infinity for hopeless sizes.
  const double count = (std::pow(static_cast<double>(p), static_cast<double>(n)) - 1.0) / (p - 1.0);
  return std::log2(count);
}

enum class Outcome { Found, Refuted, Budget };

class CanonicalSearch {
 public:
  CanonicalSearch(const Tensor3& t, const OracleLimits& limits)
      : t_(t), limits_(limits), start_(std::chrono::steady_clock::now()) {
    const std::uint32_t p = t.field().modulus();
    const auto as = canonical_vectors(t.n1(), p);
    const auto cs = canonical_vectors(t.n3(), p);
    const FieldSpec& f = t.field();
    for (const auto& a : as)
      for (const auto& c : cs) {
        Vec col(t.n1() * t.n3(), 0);
        for (std::size_t i = 0; i < a.size(); ++i)
          for (std::size_t k = 0; k < c.size(); ++k) col[i * t.n3() + k] = f.mul(a[i], c[k]);
        pairs_.push_back({a, c, std::move(col)});
      }
    rhs_.assign(t.n2(), Vec(t.n1() * t.n3(), 0));
    for (const auto& [idx, v] : t.entries()) rhs_[idx[1] - 1][(idx[0] - 1) * t.n3() + idx[2] - 1] = v;
  }

  std::uint64_t solves() const noexcept { return solves_; }

  Outcome run(std::size_t r, Decomposition* witness) {
    const FieldSpec& f = t_.field();
    if (r == 0) {
      ++solves_;
      if (!t_.is_zero()) return Outcome::Refuted;
      *witness = Decomposition{f, {}, {}, {}};
      return Outcome::Found;
    }
    if (pairs_.empty()) return Outcome::Refuted;

    const std::size_t eqs = t_.n1() * t_.n3();
    const std::size_t n2 = t_.n2();
    std::vector<std::size_t> idx(r, 0);
    for (;;) {
      if (solves_ >= limits_.max_solves) return Outcome::Budget;
      if ((solves_ & 0x3ff) == 0 && std::chrono::steady_clock::now() - start_ > limits_.max_wall)
        return Outcome::Budget;
      ++solves_;

      // One elimination over [K | rhs_1 ... rhs_n2]; consistent iff no pivot
      // lands in the right-hand block.
      MatF aug(f, eqs, r + n2);
      for (std::size_t t = 0; t < r; ++t) {
        const Vec& col = pairs_[idx[t]].outer;
        for (std::size_t e = 0; e < eqs; ++e) aug(e, t) = col[e];
      }
      for (std::size_t j = 0; j < n2; ++j)
        for (std::size_t e = 0; e < eqs; ++e) aug(e, r + j) = rhs_[j][e];
      const auto pivots = detail::row_echelon(aug);
      if (pivots.empty() || pivots.back() < r) {
        *witness = extract(idx);
        return Outcome::Found;
      }

      // Next nondecreasing index sequence.
      std::size_t pos = r;
      while (pos > 0 && idx[pos - 1] + 1 == pairs_.size()) --pos;
      if (pos == 0) return Outcome::Refuted;
      const std::size_t v = idx[pos - 1] + 1;
      std::fill(idx.begin() + static_cast<std::ptrdiff_t>(pos - 1), idx.end(), v);
    }
  }

 private:
  struct Pair {
    Vec a;
    Vec c;
    Vec outer;  // vec(a c^T), index i * n3 + k
  };

  Decomposition extract(const std::vector<std::size_t>& idx) const {
    const FieldSpec& f = t_.field();
    const std::size_t r = idx.size();
    MatF k(f, t_.n1() * t_.n3(), r);
    for (std::size_t t = 0; t < r; ++t)
      for (std::size_t e = 0; e < k.rows(); ++e) k(e, t) = pairs_[idx[t]].outer[e];
    Decomposition d{f, {}, std::vector<Vec>(r, Vec(t_.n2(), 0)), {}};
    for (std::size_t t = 0; t < r; ++t) {
      d.a.push_back(pairs_[idx[t]].a);
      d.c.push_back(pairs_[idx[t]].c);
    }
    for (std::size_t j = 0; j < t_.n2(); ++j) {
      const auto x = solve(k, std::span<const std::uint32_t>(rhs_[j]));
      if (!x) throw std::logic_error("oracle: consistent system failed to solve");
      for (std::size_t t = 0; t < r; ++t) d.b[t][j] = (*x)[t];
    }
    return prune_zero_terms(std::move(d));
  }

  const Tensor3& t_;
  const OracleLimits& limits_;
  std::chrono::steady_clock::time_point start_;
  std::vector<Pair> pairs_;
  std::vector<Vec> rhs_;  // rhs_[j] = vec(T[:, j, :])
  std::uint64_t solves_ = 0;
};

std::size_t flattening_lower_bound(const Tensor3& t) {
  std::size_t best = 0;
  for (int mode = 1; mode <= 3; ++mode) best = std::max(best, rank(flatten(t, mode)));
  return best;
}

// Candidate (a, c) pairs are materialized up front.
constexpr double kMaxPairBits = 20.0;

void guard(const Tensor3& t, std::size_t r, const OracleLimits& limits) {
  const std::uint32_t p = t.field().modulus();
  const double pair_bits = log2_canonical_count(t.n1(), p) + log2_canonical_count(t.n3(), p);
  if (pair_bits > kMaxPairBits)
    throw InfeasibleError("too many canonical factor pairs (2^" + std::to_string(pair_bits) +
                          ") for exhaustive search");
  const double bits = enumeration_bits(t.dims(), t.field().modulus(), r);
  if (bits > limits.max_enumeration_bits)
    throw InfeasibleError("rank " + std::to_string(r) + " search needs 2^" +
                          std::to_string(bits) + " candidates, above the 2^" +
                          std::to_string(limits.max_enumeration_bits) + " guard");
}

}  // namespace

double enumeration_bits(const Dims3& dims, std::uint32_t p, std::size_t r) {
  if (r == 0) return 0.0;
  const double pair_bits = log2_canonical_count(dims[0], p) + log2_canonical_count(dims[2], p);
  if (std::isinf(pair_bits)) return pair_bits < 0 ? 0.0 : pair_bits;
  // log2 C(N + r - 1, r) for N canonical pairs.
  const double n = std::exp2(pair_bits);
  const double ln = std::lgamma(n + r) - std::lgamma(static_cast<double>(r) + 1) - std::lgamma(n);
  return ln / std::log(2.0);
}

std::optional<Decomposition> find_decomposition(const Tensor3& t, std::size_t r,
                                                const OracleLimits& limits) {
  guard(t, r, limits);
  CanonicalSearch search(t, limits);
  Decomposition d{t.field(), {}, {}, {}};
  switch (search.run(r, &d)) {
    case Outcome::Found: return d;
    case Outcome::Refuted: return std::nullopt;
    case Outcome::Budget: break;
  }
  throw BudgetExceeded("search at rank " + std::to_string(r) + " stopped after " +
                       std::to_string(search.solves()) + " solves");
}

bool refute_rank(const Tensor3& t, std::size_t r, const OracleLimits& limits) {
  return !find_decomposition(t, r, limits).has_value();
}

OracleResult exact_rank(const Tensor3& t, std::optional<std::size_t> r_max,
                        const OracleLimits& limits) {
  const std::size_t trivial_upper =
      std::min({t.n1() * t.n2(), t.n1() * t.n3(), t.n2() * t.n3()});
  const std::size_t top = r_max.value_or(trivial_upper);
  const std::size_t start = flattening_lower_bound(t);

  OracleResult result;
  result.witness = Decomposition{t.field(), {}, {}, {}};
  if (start > 0) result.searched_up_to = start - 1;
  if (start > top) {
    result.status = OracleStatus::ExceededRMax;
    return result;
  }
  guard(t, start, limits);

  CanonicalSearch search(t, limits);
  for (std::size_t r = start; r <= top; ++r) {
    if (enumeration_bits(t.dims(), t.field().modulus(), r) > limits.max_enumeration_bits) {
      result.status = OracleStatus::ExceededBudget;
      result.solves = search.solves();
      return result;
    }
    Decomposition d{t.field(), {}, {}, {}};
    const Outcome outcome = search.run(r, &d);
    result.solves = search.solves();
    if (outcome == Outcome::Budget) {
      result.status = OracleStatus::ExceededBudget;
      return result;
    }
    if (outcome == Outcome::Found) {
      result.rank = d.rank();
      result.witness = std::move(d);
      result.status = OracleStatus::Exact;
      return result;
    }
    result.searched_up_to = r;
  }
  result.status = OracleStatus::ExceededRMax;
  return result;
}

}  // namespace xrank
