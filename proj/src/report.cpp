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

#include "xrank/report.hpp"

namespace xrank {

using nlohmann::json;

json to_json(const NondegeneracyReport& r) {
  return {{"slices_independent", r.slices_independent},
          {"full_row_rank", r.full_row_rank},
          {"full_col_rank", r.full_col_rank},
          {"slice_rank", r.slice_rank},
          {"row_rank", r.row_rank},
          {"col_rank", r.col_rank},
          {"rank_path", to_string(r.path)},
          {"nondegenerate", r.nondegenerate()}};
}

json to_json(const LowerBound& b) {
  json inputs = json::object();
  for (const auto& [name, v] : b.inputs) inputs[name] = v;
  return {{"value", b.value}, {"rule", to_string(b.rule)}, {"inputs", inputs}, {"note", b.note}};
}

json to_json(const LevelRecord& rec) {
  return {{"i", rec.level},
          {"dims", rec.dims},
          {"nnz", rec.nnz},
          {"row_rank", rec.row_rank},
          {"col_rank", rec.col_rank},
          {"nondegenerate", to_json(rec.nondegenerate)},
          {"increment", rec.increment},
          {"cumulative_bound", rec.cumulative_bound},
          {"layout_matches", rec.layout_matches}};
}

json to_json(const Certificate& cert) {
  json levels = json::array();
  for (const auto& rec : cert.levels) levels.push_back(to_json(rec));
  json j = {{"params", {{"n", cert.n}, {"k", cert.k}, {"field", cert.field}}},
            {"rank_path", cert.rank_path},
            {"seed", cert.seed},
            {"levels", levels},
            {"final_level", to_json(cert.final_level)},
            {"final_bound", cert.final_bound},
            {"valid", cert.valid}};
  if (cert.failing_level) {
    j["failing_level"] = *cert.failing_level;
    j["failure"] = cert.failure;
  }
  return j;
}

json to_json(const Decomposition& d) {
  return {{"rank", d.rank()}, {"field", d.field.modulus()}, {"a", d.a}, {"b", d.b}, {"c", d.c}};
}

json to_json(const OracleResult& r, bool with_witness) {
  json j = {{"status", to_string(r.status)}, {"solves", r.solves}};
  if (r.status == OracleStatus::Exact) j["rank"] = r.rank;
  j["searched_up_to"] = r.searched_up_to ? json(*r.searched_up_to) : json(nullptr);
  if (with_witness && r.status == OracleStatus::Exact) j["witness"] = to_json(r.witness);
  return j;
}

namespace {

NondegeneracyReport nondegeneracy_from_json(const json& j) {
  NondegeneracyReport r;
  r.slices_independent = j.at("slices_independent").get<bool>();
  r.full_row_rank = j.at("full_row_rank").get<bool>();
  r.full_col_rank = j.at("full_col_rank").get<bool>();
  r.slice_rank = j.at("slice_rank").get<std::size_t>();
  r.row_rank = j.at("row_rank").get<std::size_t>();
  r.col_rank = j.at("col_rank").get<std::size_t>();
  const auto path = j.at("rank_path").get<std::string>();
  r.path = path == "randomized" ? RankPath::Randomized : RankPath::Symbolic;
  return r;
}

LevelRecord level_from_json(const json& j) {
  LevelRecord rec;
  rec.level = j.at("i").get<std::size_t>();
  rec.dims = j.at("dims").get<Dims3>();
  rec.nnz = j.at("nnz").get<std::size_t>();
  rec.row_rank = j.at("row_rank").get<std::size_t>();
  rec.col_rank = j.at("col_rank").get<std::size_t>();
  rec.nondegenerate = nondegeneracy_from_json(j.at("nondegenerate"));
  rec.increment = j.at("increment").get<std::size_t>();
  rec.cumulative_bound = j.at("cumulative_bound").get<std::size_t>();
  rec.layout_matches = j.at("layout_matches").get<bool>();
  return rec;
}

}  // namespace

Certificate certificate_from_json(const json& j) {
  Certificate cert;
  const auto& params = j.at("params");
  cert.n = params.at("n").get<std::size_t>();
  cert.k = params.at("k").get<std::size_t>();
  cert.field = params.at("field").get<std::uint32_t>();
  cert.rank_path = j.at("rank_path").get<std::string>();
  cert.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& rec : j.at("levels")) cert.levels.push_back(level_from_json(rec));
  cert.final_level = level_from_json(j.at("final_level"));
  cert.final_bound = j.at("final_bound").get<std::size_t>();
  cert.valid = j.at("valid").get<bool>();
  if (j.contains("failing_level")) {
    cert.failing_level = j.at("failing_level").get<std::size_t>();
    cert.failure = j.value("failure", "");
  }
  return cert;
}

}  // namespace xrank
