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

#include <cstdint>
#include <string>
#include <vector>

namespace sumset::verify {

struct Options {
  std::uint64_t seed = 20260417;
  /// Randomized cases per property.
  std::size_t cases = 1000;
  /// Test mode: drops one member from a symbolic sum before it is compared
  /// with the oracle, so the oracle check must report it.
  bool inject_fault = false;
};

struct Result {
  int id = 0;
  std::string name;
  bool pass = true;
  std::size_t checks = 0;
  std::string detail;
};

/// Suite names in run order: class-tail, class-tail-relations, product,
/// bounded-below, oracle, algebra, closed-form.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown name.
Result run_suite(const std::string& name, const Options& options);

std::vector<Result> run_all(const Options& options);

/// `PASS [1] class-tail: ...` or `FAIL [...]`.
std::string format(const Result& result);

}  // namespace sumset::verify
