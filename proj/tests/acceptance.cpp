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


// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <iostream>

#include "sumset/verify.hpp"

int main() {
  const sumset::verify::Options options;
  bool ok = true;
  for (const auto& result : sumset::verify::run_all(options)) {
    std::cout << sumset::verify::format(result) << std::endl;
    ok = ok && result.pass;
  }
  return ok ? 0 : 1;
}
