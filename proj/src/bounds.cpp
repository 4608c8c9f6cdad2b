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

#include "xrank/bounds.hpp"

#include <algorithm>
#include <string>

namespace xrank {

std::string to_string(BoundRule rule) {
  switch (rule) {
    case BoundRule::Flattening: return "flattening";
    case BoundRule::PartitionCase: return "partition-case";
    case BoundRule::BlockLayout: return "block-layout";
    case BoundRule::Certificate: return "certificate";
    case BoundRule::Exact: return "exact";
  }
  return "unknown";
}

LowerBound flattening_bound(const Tensor3& t) {
  LowerBound lb{0, BoundRule::Flattening, {}, {}};
  for (int mode = 1; mode <= 3; ++mode) {
    const std::size_t r = rank(flatten(t, mode));
    lb.inputs.emplace_back("mode" + std::to_string(mode), r);
    lb.value = std::max(lb.value, r);
  }
  return lb;
}

LowerBound matrix_rank_bound(const Tensor3& t) {
  if (t.n3() != 1) throw std::invalid_argument("matrix_rank_bound: tensor has more than one slice");
  const std::size_t r = rank(slice(t, 1));
  return {r, BoundRule::Exact, {{"matrix_rank", r}}, "single slice"};
}

LowerBound partition_bound(const PartitionInputs& in) {
  if (!in.g1_nondegenerate || !in.g2_nondegenerate || !in.g3_nondegenerate) {
    std::string which;
    if (!in.g1_nondegenerate) which += " G1";
    if (!in.g2_nondegenerate) which += " G2";
    if (!in.g3_nondegenerate) which += " G3";
    throw HypothesisError("partition bound needs nondegenerate blocks; degenerate:" + which);
  }
  LowerBound lb{0, BoundRule::PartitionCase, {}, {}};
  std::size_t first = 0;
  std::size_t second = 0;
  switch (in.which) {
    case PartitionCase::I:
      first = in.g1.value + in.g3_col_rank;
      second = in.g3.value + in.g1_row_rank;
      lb.note = "case i";
      lb.inputs = {{"R[G1]", in.g1.value}, {"colrank G3", in.g3_col_rank},
                   {"R[G3]", in.g3.value}, {"rowrank G1", in.g1_row_rank}};
      break;
    case PartitionCase::II:
      first = in.g1.value + in.g3_col_rank;
      second = in.g3.value + in.dim_s;
      lb.note = "case ii";
      lb.inputs = {{"R[G1]", in.g1.value}, {"colrank G3", in.g3_col_rank},
                   {"R[G3]", in.g3.value}, {"dim s", in.dim_s}};
      break;
    case PartitionCase::III:
      first = in.g1.value + in.g3_row_rank;
      second = in.g3.value + in.dim_s;
      lb.note = "case iii";
      lb.inputs = {{"R[G1]", in.g1.value}, {"rowrank G3", in.g3_row_rank},
                   {"R[G3]", in.g3.value}, {"dim s", in.dim_s}};
      break;
  }
  lb.value = std::max(first, second);
  return lb;
}

namespace {

std::string shape(const Tensor3& t) {
  return std::to_string(t.n1()) + "x" + std::to_string(t.n2()) + "x" + std::to_string(t.n3());
}

void check_block_shapes(const Tensor3& a, const Tensor3& b, const Tensor3& c,
                        const Tensor3& e) {
  for (const Tensor3* t : {&b, &c, &e})
    if (t->field() != a.field()) throw std::invalid_argument("block bound: mixed fields");
  const bool ok = b.n1() == a.n1() && c.n2() == a.n2() && c.n3() == b.n3() &&
                  e.n1() == a.n1() && e.n2() == a.n2() && e.n3() == b.n3();
  if (!ok)
    throw std::invalid_argument("block bound: incompatible shapes A " + shape(a) + ", B " +
                                shape(b) + ", C " + shape(c) + ", E " + shape(e));
}

}  // namespace

Tensor3 block_layout(const Tensor3& a, const Tensor3& b, const Tensor3& c, const Tensor3& e) {
  check_block_shapes(a, b, c, e);
  const FieldSpec& f = a.field();
  const Tensor3 zero_b(f, b.n1(), b.n2(), a.n3());
  const Tensor3 zero_c(f, c.n1(), c.n2(), a.n3());
  return block2x2(concat(a, e), concat(zero_b, b), concat(zero_c, c),
                  Tensor3(f, c.n1(), b.n2(), a.n3() + b.n3()));
}

LowerBound block_bound(const Tensor3& a, const Tensor3& b, const Tensor3& c, const Tensor3& e,
                       const LowerBound& r_a, const RankOptions& opts) {
  check_block_shapes(a, b, c, e);
  const auto rep_a = is_nondegenerate(a, opts);
  const auto rep_b = is_nondegenerate(b, opts);
  const auto rep_c = is_nondegenerate(c, opts);
  if (!rep_a.nondegenerate() || !rep_b.nondegenerate() || !rep_c.nondegenerate()) {
    std::string which;
    if (!rep_a.nondegenerate()) which += " A";
    if (!rep_b.nondegenerate()) which += " B";
    if (!rep_c.nondegenerate()) which += " C";
    throw HypothesisError("block bound needs nondegenerate blocks; degenerate:" + which);
  }
  // Nondegenerate B and C have full column and row rank respectively.
  return {r_a.value + rep_b.col_rank + rep_c.row_rank,
          BoundRule::BlockLayout,
          {{"R[A]", r_a.value}, {"colrank B", rep_b.col_rank}, {"rowrank C", rep_c.row_rank}},
          "E enters only through the shape check"};
}

std::size_t expected_final_bound(std::size_t n, std::size_t k) {
  std::size_t base = 1;
  for (std::size_t i = 1; i < k; ++i) base *= n;
  return 2 * base * n - base;
}

namespace {

LevelRecord describe(std::size_t level, const Tensor3& t, const RankOptions& opts) {
  LevelRecord rec;
  rec.level = level;
  rec.dims = t.dims();
  rec.nnz = t.nnz();
  rec.nondegenerate = is_nondegenerate(t, opts);
  rec.row_rank = rec.nondegenerate.row_rank;
  rec.col_rank = rec.nondegenerate.col_rank;
  return rec;
}

}  // namespace

Certificate certificate(const ConstructionParams& params, const RankOptions& opts) {
  Certificate cert;
  cert.n = params.n();
  cert.k = params.k();
  cert.field = params.field().modulus();
  cert.seed = opts.seed;

  const auto levels = construction_levels(params);
  const std::size_t base = params.base_side();
  auto fail = [&](std::size_t level, std::string why) {
    if (!cert.failing_level) {
      cert.failing_level = level;
      cert.failure = std::move(why);
    }
  };

  std::size_t bound = matrix_rank_bound(levels.front()).value;
  if (bound != base) fail(0, "level-zero slice rank differs from n^(k-1)");

  for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
    const Tensor3& a = levels[i];
    LevelRecord rec = describe(i, a, opts);
    if (cert.rank_path.empty()) cert.rank_path = to_string(rec.nondegenerate.path);
    rec.cumulative_bound = bound;

    const std::size_t expected_rank = (std::size_t{1} << i) * base;
    if (!rec.nondegenerate.nondegenerate()) fail(i, "level is degenerate");
    if (rec.row_rank != expected_rank || rec.col_rank != expected_rank)
      fail(i, "row/column rank differs from 2^i n^(k-1)");

    const Tensor3 zero(a.field(), a.dims());
    rec.layout_matches = block_layout(a, a, a, zero) == levels[i + 1];
    if (!rec.layout_matches) fail(i, "next level is not the block layout of this one");

    try {
      const LowerBound step = block_bound(a, a, a, zero, {bound, BoundRule::Certificate, {}, {}}, opts);
      rec.increment = step.value - bound;
      bound = step.value;
    } catch (const HypothesisError& e) {
      fail(i, e.what());
    }
    if (rec.increment != rec.row_rank + rec.col_rank) fail(i, "increment is not rowrank + colrank");
    cert.levels.push_back(rec);
  }

  cert.final_level = describe(levels.size() - 1, levels.back(), opts);
  if (cert.rank_path.empty()) cert.rank_path = to_string(cert.final_level.nondegenerate.path);
  cert.final_level.cumulative_bound = bound;
  if (!cert.final_level.nondegenerate.nondegenerate())
    fail(levels.size() - 1, "final tensor is degenerate");
  cert.final_bound = bound;
  if (bound != expected_final_bound(params.n(), params.k()))
    fail(levels.size() - 1, "final bound differs from 2n^k - n^(k-1)");

  cert.valid = !cert.failing_level.has_value();
  return cert;
}

std::string recheck_arithmetic(const Certificate& cert) {
  if (cert.n < 2 || (cert.n & (cert.n - 1)) != 0) return "n is not a power of two";
  if (cert.k < 1) return "k < 1";
  std::size_t l = 0;
  while ((std::size_t{1} << l) < cert.n) ++l;
  if (cert.levels.size() != l) return "expected " + std::to_string(l) + " levels";

  std::size_t base = 1;
  for (std::size_t i = 1; i < cert.k; ++i) base *= cert.n;

  std::size_t bound = base;
  for (std::size_t i = 0; i < cert.levels.size(); ++i) {
    const LevelRecord& rec = cert.levels[i];
    const std::size_t side = (std::size_t{1} << i) * base;
    const std::string at = "level " + std::to_string(i) + ": ";
    if (rec.level != i) return at + "out of order";
    if (rec.dims != Dims3{side, side, std::size_t{1} << i}) return at + "wrong dimensions";
    if (!rec.nondegenerate.nondegenerate()) return at + "not nondegenerate";
    if (rec.row_rank != side || rec.col_rank != side) return at + "rank is not full";
    if (rec.cumulative_bound != bound) return at + "cumulative bound does not telescope";
    if (rec.increment != rec.row_rank + rec.col_rank) return at + "increment mismatch";
    if (rec.increment != 2 * side) return at + "increment is not 2^(i+1) n^(k-1)";
    bound += rec.increment;
  }
  if (cert.final_level.cumulative_bound != bound) return "final level bound mismatch";
  if (cert.final_bound != bound) return "final bound mismatch";
  if (bound != expected_final_bound(cert.n, cert.k)) return "final bound is not 2n^k - n^(k-1)";
  if (!cert.valid) return "certificate is flagged invalid";
  return {};
}

}  // namespace xrank
