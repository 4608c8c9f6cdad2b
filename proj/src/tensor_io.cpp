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

#include "xrank/tensor_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace xrank {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

std::uint64_t parse_uint(const std::string& tok, std::size_t line, const char* what) {
  std::uint64_t v = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end)
    throw ParseError(line, std::string("bad ") + what + " '" + tok + "'");
  return v;
}

FieldSpec parse_field(const std::string& tok, std::size_t line) {
  if (tok.size() < 3 || tok.compare(0, 2, "gf") != 0)
    throw ParseError(line, "expected field tag gf<p>, got '" + tok + "'");
  const auto p = parse_uint(tok.substr(2), line, "field modulus");
  try {
    return FieldSpec(p);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

bool skip(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

}  // namespace

AnyTensor read_tensor(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++lineno;
    if (skip(line)) continue;
    header = split(line);
    break;
  }
  if (header.empty()) throw ParseError(lineno, "missing header");

  std::size_t arity = 0;
  std::vector<std::size_t> bounds;
  FieldSpec field;
  std::optional<Tensor3> t3;
  std::optional<TensorR> tr;
  if (header[0] == "tensor3") {
    if (header.size() != 5) throw ParseError(lineno, "header must be: tensor3 <n1> <n2> <n3> gf<p>");
    Dims3 dims{};
    for (int m = 0; m < 3; ++m) dims[m] = parse_uint(header[1 + m], lineno, "dimension");
    field = parse_field(header[4], lineno);
    t3.emplace(field, dims);
    arity = 3;
    bounds.assign(dims.begin(), dims.end());
  } else if (header[0] == "tensorr") {
    if (header.size() != 4) throw ParseError(lineno, "header must be: tensorr <r> <n> gf<p>");
    const auto r = parse_uint(header[1], lineno, "order");
    const auto n = parse_uint(header[2], lineno, "side");
    field = parse_field(header[3], lineno);
    if (r > 63) throw ParseError(lineno, "order above 63 is not supported");
    try {
      tr.emplace(field, r, n);
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
    arity = r;
    bounds.assign(r, n);
  } else {
    throw ParseError(lineno, "unknown tensor kind '" + header[0] + "'");
  }

  std::set<std::vector<std::size_t>> seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (skip(line)) continue;
    const auto tok = split(line);
    if (tok.size() != arity + 1)
      throw ParseError(lineno, "expected " + std::to_string(arity) + " indices and a value");
    std::vector<std::size_t> idx(arity);
    for (std::size_t m = 0; m < arity; ++m) {
      idx[m] = parse_uint(tok[m], lineno, "index");
      if (idx[m] < 1 || idx[m] > bounds[m]) throw ParseError(lineno, "index out of range");
    }
    const auto v = parse_uint(tok[arity], lineno, "value");
    if (v == 0) throw ParseError(lineno, "zero entries must be omitted");
    if (v >= field.modulus()) throw ParseError(lineno, "value not in [0, p)");
    if (!seen.insert(idx).second) throw ParseError(lineno, "duplicate index tuple");
    if (t3)
      t3->set(idx[0], idx[1], idx[2], v);
    else
      tr->set(idx, v);
  }
  if (t3) return std::move(*t3);
  return std::move(*tr);
}

AnyTensor read_tensor_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_tensor(in);
}

void write_tensor(std::ostream& out, const Tensor3& t) {
  out << "tensor3 " << t.n1() << ' ' << t.n2() << ' ' << t.n3() << " gf" << t.field().modulus()
      << '\n';
  for (const auto& [idx, v] : t.entries())
    out << idx[0] << ' ' << idx[1] << ' ' << idx[2] << ' ' << v << '\n';
}

void write_tensor(std::ostream& out, const TensorR& t) {
  out << "tensorr " << t.order() << ' ' << t.n() << " gf" << t.field().modulus() << '\n';
  for (const auto& [idx, v] : t.entries()) {
    for (auto i : idx) out << i << ' ';
    out << v << '\n';
  }
}

std::string to_text(const Tensor3& t) {
  std::ostringstream ss;
  write_tensor(ss, t);
  return ss.str();
}

std::string to_text(const TensorR& t) {
  std::ostringstream ss;
  write_tensor(ss, t);
  return ss.str();
}

}  // namespace xrank
