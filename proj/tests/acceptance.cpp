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


// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli_support.hpp"
#include "oracles.hpp"
#include "xrank/bounds.hpp"
#include "xrank/charmat.hpp"
#include "xrank/construction.hpp"
#include "xrank/hypercube.hpp"
#include "xrank/rank_oracle.hpp"
#include "xrank/tensor_io.hpp"

using namespace xrank;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::string detail;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

Tensor3 tensor_nk(std::size_t n, std::size_t k, std::uint32_t p = 2) {
  return construction_tensor(ConstructionParams(n, k, FieldSpec(p)));
}

std::string num(std::size_t v) { return std::to_string(v); }

// AC1
Check certificates() {
  Check c;
  struct Case {
    std::size_t n, k, expect;
  };
  const Case cases[] = {{2, 1, 3}, {4, 1, 7}, {8, 1, 15}, {2, 2, 6}, {4, 2, 28}};
  std::string got;
  for (const auto& cs : cases) {
    const Certificate cert = certificate(ConstructionParams(cs.n, cs.k));
    const std::string at = "n=" + num(cs.n) + " k=" + num(cs.k) + ": ";
    got += (got.empty() ? "" : ",") + num(cert.final_bound);
    c.expect(cert.valid, at + "certificate invalid: " + cert.failure);
    c.expect(cert.final_bound == cs.expect, at + "final bound " + num(cert.final_bound));
    c.expect(cert.final_bound == expected_final_bound(cs.n, cs.k), at + "closed form mismatch");
    std::size_t base = 1;
    for (std::size_t i = 1; i < cs.k; ++i) base *= cs.n;
    for (const auto& rec : cert.levels) {
      c.expect(rec.increment == (std::size_t{2} << rec.level) * base,
               at + "increment at level " + num(rec.level));
      c.expect(rec.nondegenerate.nondegenerate(), at + "degenerate level " + num(rec.level));
    }
    c.expect(cert.final_level.nondegenerate.nondegenerate(), at + "degenerate final level");
    c.expect(recheck_arithmetic(cert).empty(), at + "recheck: " + recheck_arithmetic(cert));
  }
  if (c.ok) c.detail = "bounds " + got;
  return c;
}

// AC2
Check level_one_tightness() {
  Check c;
  for (std::uint32_t p : {2u, 3u}) {
    const Tensor3 t = tensor_nk(2, 1, p);
    const std::string at = "GF(" + num(p) + "): ";
    const auto r = exact_rank(t);
    c.expect(r.status == OracleStatus::Exact && r.rank == 3, at + "rank " + num(r.rank));
    c.expect(r.witness.rank() == 3 && materialize(r.witness, t.dims()) == t,
             at + "witness does not reproduce the tensor");
    c.expect(refute_rank(t, 2), at + "rank 2 not refuted");
    c.expect(oracle::tensor_rank(t) == 3, at + "reference search disagrees");
  }
  if (c.ok) c.detail = "rank 3 over GF(2) and GF(3), 3-term witnesses verified";
  return c;
}

// AC3
Check level_two_refutation() {
  Check c;
  const Tensor3 t = tensor_nk(2, 2);
  c.expect(flattening_bound(t).value == 4, "flattening bound is not 4");
  c.expect(certificate(ConstructionParams(2, 2)).final_bound == 6, "certificate is not 6");
  c.expect(refute_rank(t, 4), "rank 4 not refuted");
  if (c.ok) c.detail = "rank <= 4 refuted; flattening 4 < certificate 6";
  return c;
}

// AC4
Check bound_ordering() {
  Check c;
  std::size_t checked = 0, certified = 0;
  auto one = [&](const Tensor3& t, const std::string& name,
                 std::optional<std::size_t> cert_bound) {
    const auto fb = flattening_bound(t).value;
    const auto r = exact_rank(t);
    if (r.status != OracleStatus::Exact) return;  // only where the search completes
    ++checked;
    c.expect(fb <= r.rank, name + ": flattening " + num(fb) + " > rank " + num(r.rank));
    if (cert_bound) {
      ++certified;
      c.expect(*cert_bound <= r.rank, name + ": certificate " + num(*cert_bound) + " > rank " +
                                          num(r.rank));
    }
  };
  one(tensor_nk(2, 1), "T(2,1)", certificate(ConstructionParams(2, 1)).final_bound);
  one(tensor_nk(2, 2), "T(2,2)", certificate(ConstructionParams(2, 2)).final_bound);
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 50; ++i) {
    const Dims3 d = i % 2 ? Dims3{2, 2, 3} : Dims3{2, 2, 2};
    const Tensor3 t = oracle::random_tensor(rng, FieldSpec(2), d);
    one(t, "random #" + num(i), std::nullopt);
    c.expect(exact_rank(t).rank == oracle::tensor_rank(t), "random #" + num(i) + ": oracle disagrees");
  }
  if (c.ok)
    c.detail = num(checked) + " tensors, " + num(certified) + " with certificates";
  return c;
}

// AC5
Check dual_path() {
  Check c;
  const RankOptions sym{RankPath::Symbolic};
  std::size_t matrices = 0;
  std::uint64_t seed = 1;
  auto agree = [&](const Tensor3& t, const std::string& name) {
    const CharMatrix m(t);
    const RankOptions rnd{RankPath::Randomized, seed++, 3};
    c.expect(row_rank(m, sym).value == row_rank(m, rnd).value, name + ": row rank");
    c.expect(col_rank(m, sym).value == col_rank(m, rnd).value, name + ": column rank");
    c.expect(generic_rank(m, sym).value == generic_rank(m, rnd).value, name + ": generic rank");
    ++matrices;
  };
  for (auto [n, k] : {std::pair{2u, 1u}, {4u, 1u}, {8u, 1u}, {2u, 2u}, {4u, 2u}}) {
    const auto levels = construction_levels(ConstructionParams(n, k));
    for (std::size_t i = 0; i < levels.size(); ++i)
      agree(levels[i], "(" + num(n) + "," + num(k) + ") level " + num(i));
  }
  std::mt19937_64 rng(77);
  for (int i = 0; i < 50; ++i) {
    const FieldSpec f(i % 2 ? 3 : 2);
    const Dims3 d{1 + rng() % 4, 1 + rng() % 4, 1 + rng() % 3};
    const Tensor3 t = oracle::random_tensor(rng, f, d, 0.4);
    agree(t, "random #" + num(i));
    const CharMatrix m(t);
    c.expect(row_rank(m, sym).value == oracle::char_row_rank(t), "random #" + num(i) + ": row oracle");
    c.expect(generic_rank(m, sym).value == oracle::generic_rank(t),
             "random #" + num(i) + ": minor oracle");
  }
  Tensor3 ex(FieldSpec(2), 1, 2, 2);
  ex.set(1, 1, 1, 1);
  ex.set(1, 2, 2, 1);
  const CharMatrix m(ex);
  for (const auto path : {RankPath::Symbolic, RankPath::Randomized}) {
    c.expect(col_rank(m, {path}).value == 2, "[s1 s2] column rank on " + to_string(path));
    c.expect(row_rank(m, {path}).value == 1, "[s1 s2] row rank on " + to_string(path));
  }
  if (c.ok) c.detail = num(matrices) + " matrices agree; [s1 s2] col 2 row 1";
  return c;
}

// AC6
Check concat_properties() {
  Check c;
  std::vector<Tensor3> corpus;
  const FieldSpec f(2);
  corpus.push_back(tensor_nk(2, 1));
  corpus.push_back(Tensor3::identity_slice(f, 2));
  std::mt19937_64 rng(606);
  for (int i = 0; i < 10; ++i)
    corpus.push_back(oracle::random_tensor(rng, f, {2, 2, 1 + static_cast<std::size_t>(i % 2)}));
  std::size_t pairs = 0;
  std::vector<std::size_t> ranks;
  for (const auto& t : corpus) ranks.push_back(exact_rank(t).rank);
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = i; j < corpus.size(); ++j) {
      const auto ab = exact_rank(concat(corpus[i], corpus[j]));
      const auto ba = exact_rank(concat(corpus[j], corpus[i]));
      if (ab.status != OracleStatus::Exact || ba.status != OracleStatus::Exact) continue;
      ++pairs;
      const std::string at = "pair (" + num(i) + "," + num(j) + ")";
      c.expect(ab.rank == ba.rank, at + ": R[AB] != R[BA]");
      c.expect(ab.rank <= ranks[i] + ranks[j], at + ": subadditivity fails");
    }
  if (c.ok) c.detail = num(pairs) + " pairs";
  return c;
}

// AC7
Check transport() {
  Check c;
  for (auto [n, k] : {std::pair{2u, 1u}, {2u, 2u}}) {
    const Tensor3 w = tensor_nk(n, k);
    const TensorR h = phi_inverse(w, n, k);
    c.expect(phi(h) == w, "phi(phi_inverse(w)) != w for n=" + num(n) + " k=" + num(k));
    c.expect(phi_inverse(phi(h), n, k) == h, "phi_inverse(phi(h)) != h");
  }
  std::mt19937_64 rng(7007);
  std::size_t simple = 0;
  for (int i = 0; i < 200; ++i) {
    const FieldSpec f(i % 3 == 0 ? 3 : 2);
    const std::size_t order = 3 + 2 * (i % 3);
    const std::size_t n = 2 + (i % 4 == 0 && order < 7);
    HypercubeDecomposition d{f, order, n, {std::vector<Vec>(order, Vec(n))}};
    for (auto& x : d.factors[0])
      for (auto& v : x) v = rng() % f.modulus();
    const Tensor3 image = phi(materialize(d));
    bool is_simple = true;
    for (int mode = 1; mode <= 3; ++mode)
      is_simple = is_simple && oracle::unfolding_rank(image, mode) == (image.is_zero() ? 0u : 1u);
    c.expect(is_simple, "case " + num(i) + ": image is not simple");
    c.expect(image == materialize(push_forward(d), image.dims()), "case " + num(i) + ": push-forward");
    simple += is_simple;
  }
  if (c.ok) c.detail = "round trips on (2,1),(2,2); " + num(simple) + "/200 simple images";
  return c;
}

// AC8
Check cli_round_trips() {
  Check c;
  clitest::TempDir dir;
  using clitest::run;
  using clitest::slurp;
  for (auto [n, k] : {std::pair{2, 1}, {2, 2}, {4, 1}}) {
    const std::string tag = "(" + num(n) + "," + num(k) + ")";
    const auto w = dir.file("w.txt"), h = dir.file("h.txt"), back = dir.file("back.txt");
    c.expect(run({"gen", "-n", num(n), "-k", num(k), "-o", w}).code == 0, tag + " gen failed");
    const std::string text = slurp(w);
    std::istringstream in(text);
    c.expect(std::visit([](const auto& t) { return to_text(t); }, read_tensor(in)) == text,
             tag + " parse/serialize not byte-identical");
    c.expect(run({"info", "-i", w}).code == 0, tag + " info failed");
    if (n == 2) {
      const auto r = run({"rank", "-i", w});
      c.expect(r.code == 0 && r.out == (k == 1 ? "rank 3\n" : "rank 6\n"), tag + " rank: " + r.out);
    }
    c.expect(run({"reshape", "-i", w, "-n", num(n), "-k", num(k), "-o", h}).code == 0,
             tag + " reshape failed");
    c.expect(run({"info", "-i", h}).code == 0, tag + " info on tensorr failed");
    c.expect(run({"reshape", "-i", h, "-n", num(n), "-k", num(k), "--inverse", "-o", back}).code == 0,
             tag + " inverse reshape failed");
    c.expect(slurp(back) == text, tag + " reshape round trip differs");
  }
  const auto bad = dir.file("bad.txt");
  const std::pair<const char*, const char*> malformed[] = {
      {"bad header", "tensor3 2 2 gf2\n"},
      {"value >= p", "tensor3 2 2 2 gf2\n1 1 1 2\n"},
      {"index out of range", "tensor3 2 2 2 gf2\n3 1 1 1\n"},
  };
  for (const auto& [name, text] : malformed) {
    clitest::spit(bad, text);
    for (const char* cmd : {"info", "rank"}) {
      const auto r = run({cmd, "-i", bad});
      c.expect(r.code == cli::kExitInvalidInput,
               std::string(cmd) + " on " + name + ": exit " + num(r.code));
    }
  }
  if (c.ok) c.detail = "3 sizes byte-identical; 3 malformed inputs exit 2";
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* what;
    std::function<Check()> run;
    double limit_s;
  };
  const Criterion criteria[] = {
      {"AC1", "certificate bounds", certificates, 10},
      {"AC2", "oracle tightness at level one", level_one_tightness, 1},
      {"AC3", "oracle consistency at (2,2)", level_two_refutation, 300},
      {"AC4", "bound ordering", bound_ordering, 120},
      {"AC5", "dual-path rank agreement", dual_path, 60},
      {"AC6", "concatenation rank properties", concat_properties, 120},
      {"AC7", "hypercube transport", transport, 30},
      {"AC8", "CLI round trips and exit codes", cli_round_trips, 10},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    const auto start = Clock::now();
    Check c;
    try {
      c = cr.run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.ok && secs >= cr.limit_s) {
      c.ok = false;
      c.detail += "; over the " + std::to_string(cr.limit_s) + " s limit";
    }
    failures += !c.ok;
    std::printf("[%s] %s %s: %s (%.3f s)\n", c.ok ? "PASS" : "FAIL", cr.id, cr.what,
                c.detail.c_str(), secs);
  }
  return failures == 0 ? 0 : 1;
}
