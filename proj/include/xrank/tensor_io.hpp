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

// Plain-text coordinate format.
//
//   tensor3 <n1> <n2> <n3> gf<p>         tensorr <r> <n> gf<p>
//   i j k v                              i_1 ... i_r v
//
// Indices are 1-based, values lie in [1, p). Lines starting with '#' and
// blank lines are ignored. Zero values and repeated index tuples are
// rejected. Writers emit entries in lexicographic index order, so
// write(read(write(t))) is byte-identical to write(t).

#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>

#include "xrank/hypercube.hpp"
#include "xrank/tensor3.hpp"

namespace xrank {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

using AnyTensor = std::variant<Tensor3, TensorR>;

AnyTensor read_tensor(std::istream& in);
AnyTensor read_tensor_file(const std::string& path);

void write_tensor(std::ostream& out, const Tensor3& t);
void write_tensor(std::ostream& out, const TensorR& t);
std::string to_text(const Tensor3& t);
std::string to_text(const TensorR& t);

}  // namespace xrank
