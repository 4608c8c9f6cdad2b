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

#include "xrank/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "xrank/bounds.hpp"
#include "xrank/construction.hpp"
#include "xrank/hypercube.hpp"
#include "xrank/rank_oracle.hpp"
#include "xrank/report.hpp"
#include "xrank/tensor_io.hpp"

namespace xrank::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string dims_text(const Dims3& d) {
  return std::to_string(d[0]) + "x" + std::to_string(d[1]) + "x" + std::to_string(d[2]);
}

std::string vec_text(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
  if (!f) throw std::runtime_error("write failed for " + path);
}

Tensor3 require_tensor3(AnyTensor any, const char* command) {
  if (auto* t = std::get_if<Tensor3>(&any)) return std::move(*t);
  throw std::invalid_argument(std::string(command) + " needs a tensor3 file");
}

RankPath parse_path(const std::string& s) {
  if (s == "auto") return RankPath::Automatic;
  if (s == "symbolic") return RankPath::Symbolic;
  if (s == "randomized") return RankPath::Randomized;
  throw std::invalid_argument("unknown rank path '" + s + "'");
}

struct GenArgs {
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t field = 2;
  std::string out_path;
  std::uint64_t max_volume = kDefaultMaxVolume;
};

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  const ConstructionParams params(a.n, a.k, FieldSpec(a.field), a.max_volume);
  const Tensor3 t = construction_tensor(params);
  write_output(a.out_path, to_text(t), out);
  std::ostream& summary = (a.out_path.empty() || a.out_path == "-") ? err : out;
  summary << "generated " << dims_text(t.dims()) << " tensor over GF(" << t.field().modulus()
          << ") with " << t.nnz() << " nonzeros\n";
  return kExitOk;
}

struct CertArgs {
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t field = 2;
  bool json = false;
  std::uint64_t seed = 0;
  std::string path = "auto";
  std::uint64_t max_volume = kDefaultMaxVolume;
};

void print_level(std::ostream& out, const std::string& label, const LevelRecord& rec,
                 bool final_level) {
  out << label << "\t" << dims_text(rec.dims) << "\t" << rec.nnz << "\t" << rec.row_rank << "\t"
      << rec.col_rank << "\t" << (rec.nondegenerate.nondegenerate() ? "yes" : "NO") << "\t"
      << (final_level ? std::string("-") : std::to_string(rec.increment)) << "\t"
      << rec.cumulative_bound << "\n";
}

int cmd_cert(const CertArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  const ConstructionParams params(a.n, a.k, FieldSpec(a.field), a.max_volume);
  RankOptions opts;
  opts.seed = a.seed;
  opts.path = parse_path(a.path);
  const Certificate cert = certificate(params, opts);

  if (a.json) {
    json j = to_json(cert);
    j["command"] = "cert";
    j["expected_final_bound"] = expected_final_bound(a.n, a.k);
    j["timings"] = {{"elapsed_ms", elapsed_ms(start)}};
    out << j.dump(2) << "\n";
  } else {
    out << "certificate n=" << cert.n << " k=" << cert.k << " field=GF(" << cert.field
        << ") rank_path=" << cert.rank_path << "\n";
    out << "level\tdims\tnnz\trow\tcol\tnondeg\tincr\tbound\n";
    for (const auto& rec : cert.levels) print_level(out, std::to_string(rec.level), rec, false);
    print_level(out, "final", cert.final_level, true);
    out << "final_bound " << cert.final_bound << " (2n^k - n^(k-1) = "
        << expected_final_bound(a.n, a.k) << ") " << (cert.valid ? "valid" : "INVALID") << "\n";
    if (cert.failing_level)
      out << "failing level " << *cert.failing_level << ": " << cert.failure << "\n";
  }
  return cert.valid ? kExitOk : kExitVerificationFailed;
}

struct RankArgs {
  std::string in_path;
  std::optional<std::size_t> r_max;
  std::optional<std::uint64_t> budget;
  std::optional<double> max_bits;
  std::optional<std::uint64_t> timeout_ms;
  bool witness = false;
  bool json = false;
};

int cmd_rank(const RankArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  const Tensor3 t = require_tensor3(read_tensor_file(a.in_path), "rank");
  OracleLimits limits;
  if (a.budget) limits.max_solves = *a.budget;
  if (a.max_bits) limits.max_enumeration_bits = *a.max_bits;
  if (a.timeout_ms) limits.max_wall = std::chrono::milliseconds(*a.timeout_ms);
  const OracleResult r = exact_rank(t, a.r_max, limits);

  std::string summary;
  const std::size_t known = r.searched_up_to ? *r.searched_up_to : 0;
  switch (r.status) {
    case OracleStatus::Exact: summary = "rank " + std::to_string(r.rank); break;
    case OracleStatus::ExceededRMax: summary = "rank > " + std::to_string(known); break;
    case OracleStatus::ExceededBudget:
      summary = r.searched_up_to ? "rank > " + std::to_string(known) + " (budget exceeded)"
                                 : std::string("rank unknown (budget exceeded)");
      break;
  }

  if (a.json) {
    json j = {{"command", "rank"},
              {"params",
               {{"input", a.in_path},
                {"dims", t.dims()},
                {"field", t.field().modulus()},
                {"r_max", a.r_max ? json(*a.r_max) : json(nullptr)},
                {"budget", limits.max_solves}}},
              {"results", to_json(r, a.witness)},
              {"summary", summary},
              {"valid", true},
              {"timings", {{"elapsed_ms", elapsed_ms(start)}}}};
    if (a.witness && r.status == OracleStatus::Exact)
      j["results"]["witness_verified"] = materialize(r.witness, t.dims()) == t;
    out << j.dump(2) << "\n";
  } else {
    out << summary << "\n";
    if (a.witness && r.status == OracleStatus::Exact) {
      for (std::size_t i = 0; i < r.witness.rank(); ++i)
        out << "term " << i + 1 << ": a=" << vec_text(r.witness.a[i])
            << " b=" << vec_text(r.witness.b[i]) << " c=" << vec_text(r.witness.c[i]) << "\n";
      out << "witness "
          << (materialize(r.witness, t.dims()) == t ? "reproduces the input" : "DOES NOT MATCH")
          << "\n";
    }
  }
  return kExitOk;
}

struct ReshapeArgs {
  std::string in_path;
  std::string out_path;
  std::size_t n = 0;
  std::size_t k = 0;
  bool inverse = false;
};

int cmd_reshape(const ReshapeArgs& a, std::ostream& out) {
  AnyTensor any = read_tensor_file(a.in_path);
  if (auto* t = std::get_if<Tensor3>(&any)) {
    if (a.inverse) throw std::invalid_argument("--inverse expects a tensorr input");
    write_output(a.out_path, to_text(phi_inverse(*t, a.n, a.k)), out);
    return kExitOk;
  }
  const auto& h = std::get<TensorR>(any);
  if (h.order() != 2 * a.k + 1 || h.n() != a.n)
    throw std::invalid_argument("tensorr " + std::to_string(h.order()) + " " +
                                std::to_string(h.n()) + " does not match -n " +
                                std::to_string(a.n) + " -k " + std::to_string(a.k));
  write_output(a.out_path, to_text(phi(h)), out);
  return kExitOk;
}

json tensor3_info(const Tensor3& t) {
  const auto fb = flattening_bound(t);
  return {{"kind", "tensor3"},
          {"dims", t.dims()},
          {"nnz", t.nnz()},
          {"field", t.field().modulus()},
          {"nondegeneracy", to_json(is_nondegenerate(t))},
          {"flattening_bound", to_json(fb)}};
}

int cmd_info(const std::string& in_path, bool as_json, std::ostream& out) {
  const auto start = Clock::now();
  AnyTensor any = read_tensor_file(in_path);
  json results;
  if (auto* t = std::get_if<Tensor3>(&any)) {
    results = tensor3_info(*t);
  } else {
    const auto& h = std::get<TensorR>(any);
    results = {{"kind", "tensorr"},
               {"order", h.order()},
               {"n", h.n()},
               {"nnz", h.nnz()},
               {"field", h.field().modulus()},
               {"phi_image", tensor3_info(phi(h))}};
  }
  const json& t3 = results.contains("phi_image") ? results["phi_image"] : results;

  if (as_json) {
    json j = {{"command", "info"},
              {"params", {{"input", in_path}}},
              {"results", results},
              {"valid", true},
              {"timings", {{"elapsed_ms", elapsed_ms(start)}}}};
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  if (results["kind"] == "tensorr")
    out << "tensorr order " << results["order"] << " side " << results["n"] << " nnz "
        << results["nnz"] << " field GF(" << results["field"] << ")\nphi image:\n";
  const auto& nd = t3["nondegeneracy"];
  const auto& d = t3["dims"];
  out << "dims " << d[0] << "x" << d[1] << "x" << d[2] << "\n"
      << "nnz " << t3["nnz"] << "\n"
      << "field GF(" << t3["field"] << ")\n"
      << "slice rank " << nd["slice_rank"] << ", row rank " << nd["row_rank"] << ", col rank "
      << nd["col_rank"] << "\n"
      << "nondegenerate " << (nd["nondegenerate"].get<bool>() ? "true" : "false") << "\n"
      << "flattening ranks " << t3["flattening_bound"]["inputs"]["mode1"] << " "
      << t3["flattening_bound"]["inputs"]["mode2"] << " "
      << t3["flattening_bound"]["inputs"]["mode3"] << "\n"
      << "flattening bound " << t3["flattening_bound"]["value"] << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Explicit high-rank tensors: construction, certificates and exact rank", "xrank"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write the n^k x n^k x n construction tensor");
  gen_cmd->add_option("-n", gen.n, "side length (power of two)")->required();
  gen_cmd->add_option("-k", gen.k, "exponent")->required();
  gen_cmd->add_option("--field", gen.field, "prime modulus")->capture_default_str();
  gen_cmd->add_option("-o,--output", gen.out_path, "output file (default stdout)");
  gen_cmd->add_option("--max-volume", gen.max_volume, "cap on n^k * n^k")->capture_default_str();

  CertArgs cert;
  auto* cert_cmd = app.add_subcommand("cert", "Build and check the rank lower-bound certificate");
  cert_cmd->add_option("-n", cert.n, "side length (power of two)")->required();
  cert_cmd->add_option("-k", cert.k, "exponent")->required();
  cert_cmd->add_option("--field", cert.field, "prime modulus")->capture_default_str();
  cert_cmd->add_flag("--json", cert.json, "emit JSON");
  cert_cmd->add_option("--seed", cert.seed, "seed for randomized ranks")->capture_default_str();
  cert_cmd->add_option("--path", cert.path, "rank path: auto, symbolic or randomized")
      ->capture_default_str();
  cert_cmd->add_option("--max-volume", cert.max_volume, "cap on n^k * n^k")->capture_default_str();

  RankArgs rank_args;
  auto* rank_cmd = app.add_subcommand("rank", "Exact rank by exhaustive search");
  rank_cmd->add_option("-i,--input", rank_args.in_path, "tensor3 file")->required();
  rank_cmd->add_option("--max", rank_args.r_max, "largest rank to try");
  rank_cmd->add_option("--budget", rank_args.budget, "maximum number of linear solves");
  rank_cmd->add_option("--bits", rank_args.max_bits, "log2 cap on candidates per rank");
  rank_cmd->add_option("--timeout-ms", rank_args.timeout_ms, "wall-clock cap");
  rank_cmd->add_flag("--witness", rank_args.witness, "print the decomposition");
  rank_cmd->add_flag("--json", rank_args.json, "emit JSON");

  ReshapeArgs reshape;
  auto* reshape_cmd = app.add_subcommand("reshape", "Convert between tensor3 and tensorr files");
  reshape_cmd->add_option("-i,--input", reshape.in_path, "input file")->required();
  reshape_cmd->add_option("-o,--output", reshape.out_path, "output file (default stdout)");
  reshape_cmd->add_option("-n", reshape.n, "hypercube side")->required();
  reshape_cmd->add_option("-k", reshape.k, "half order, r = 2k + 1")->required();
  reshape_cmd->add_flag("--inverse", reshape.inverse, "input is a tensorr file");

  std::string info_path;
  bool info_json = false;
  auto* info_cmd = app.add_subcommand("info", "Dimensions, nondegeneracy and flattening bounds");
  info_cmd->add_option("-i,--input", info_path, "tensor file")->required();
  info_cmd->add_flag("--json", info_json, "emit JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen, out, err);
    if (cert_cmd->parsed()) return cmd_cert(cert, out);
    if (rank_cmd->parsed()) return cmd_rank(rank_args, out);
    if (reshape_cmd->parsed()) return cmd_reshape(reshape, out);
    if (info_cmd->parsed()) return cmd_info(info_path, info_json, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace xrank::cli
