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

// JSON forms of the library's results. All counts are integers.

#pragma once

#include <json.hpp>

#include "xrank/bounds.hpp"
#include "xrank/charmat.hpp"
#include "xrank/rank_oracle.hpp"
#include "xrank/tensor3.hpp"

namespace xrank {

nlohmann::json to_json(const NondegeneracyReport& r);
nlohmann::json to_json(const LowerBound& b);
nlohmann::json to_json(const LevelRecord& rec);
nlohmann::json to_json(const Certificate& cert);
nlohmann::json to_json(const Decomposition& d);
nlohmann::json to_json(const OracleResult& r, bool with_witness);

/// Inverse of to_json(Certificate); throws nlohmann::json::exception on malformed input.
Certificate certificate_from_json(const nlohmann::json& j);

}  // namespace xrank
