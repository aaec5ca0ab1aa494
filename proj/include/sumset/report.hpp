// Copyright 2026 The sumset Authors
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


#pragma once

#include <map>
#include <string>
#include <string_view>

#include "sumset/families.hpp"

namespace sumset {

/// `key = value` lines; blank lines and `#` comments are skipped.
using ConfigMap = std::map<std::string, std::string, std::less<>>;

ConfigMap parse_config(std::string_view text);

/// Builds and validates a family from config keys:
///   schema = theorem1 | theorem2 | bounded-below | constant-tail
///   s, h0                          (theorem1)
///   d, generators = j+1 | [2,3,5]  (theorem2)
///   core, m0, drift_residue, drift_modulus, prefix   (bounded-below)
///   limit, prefix                  (constant-tail)
/// Sets are set expressions (the serialized form included); `prefix` holds
/// A_1 | A_2 | ... separated by `|`.
FamilySchema schema_from_config(const ConfigMap& config);

/// One-line summary, e.g. `theorem1 s=1 h0=4 m=5`.
std::string describe(const FamilySchema& schema);

std::string format_table(const HSetReport& report);
std::string format_json(const HSetReport& report);

}  // namespace sumset
