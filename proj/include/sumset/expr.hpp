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

// Prefix-function set expressions:
//
//   atoms      {1,2,3}   a+m*Z   [u,v]+m*Z   {a+m*t : t>=t0}   Z   empty
//              m=5; lo=0; hi=0; down={0,1}; up={0,1}; mid={}   (serialized form)
//   functions  union(e,e) inter(e,e) compl(e) diff(e,e) sum(e,e) hsum(h,e)

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sumset/linset.hpp"

namespace sumset {

struct SetExpression {
  enum class Kind { kAtom, kUnion, kInter, kCompl, kDiff, kSum, kHsum };

  Kind kind = Kind::kAtom;
  LinearSet atom;                     // kAtom only
  std::uint64_t h = 1;                // kHsum only
  std::vector<SetExpression> args;
  std::size_t position = 0;           // offset of the node in the source text
};

/// Throws ParseError (with the offending offset) on malformed input and
/// InvalidParameters when an atom's parameters are out of range.
SetExpression parse_expression(std::string_view text);

LinearSet evaluate(const SetExpression& expr);

/// parse_expression followed by evaluate.
LinearSet evaluate(std::string_view text);

}  // namespace sumset
