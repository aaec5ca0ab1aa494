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

#include <functional>
#include <map>
#include <vector>

#include "sumset/linset.hpp"

namespace sumset::detail {

/// Residue r -> (r + shift) mod m.
ResidueMask rotate(const ResidueMask& mask, std::size_t shift);

/// Residue r -> (-r) mod m.
ResidueMask negate(const ResidueMask& mask);

/// Re-reads a period-m mask as a period-M mask, m | M.
ResidueMask expand(const ResidueMask& mask, std::size_t big);

/// Least p dividing the mask size such that the pattern has period p.
std::size_t min_period(const ResidueMask& mask);

/// Keeps the first p bits; only valid when the pattern has period p.
ResidueMask reduce(const ResidueMask& mask, std::size_t p);

/// A set given by a common modulus, sorted cut points splitting Z into
/// segments, one residue pattern per segment, and explicit per-point
/// overrides. Segment 0 is (-inf, cuts[0]), segment i is
/// [cuts[i-1], cuts[i]), the last segment is [cuts.back(), inf).
struct Piecewise {
  std::size_t modulus = 1;
  std::vector<Int> cuts;
  std::vector<ResidueMask> patterns;
  std::map<Int, bool> overrides;

  std::size_t segment_of(const Int& x) const;
  bool member(const Int& x) const;
};

Piecewise to_piecewise(const LinearSet& s, std::size_t modulus);

/// Pointwise combination of two piecewise sets on their common refinement.
Piecewise combine(const Piecewise& a, const Piecewise& b,
                  const std::function<bool(bool, bool)>& op);

LinearSet canonicalize(const Piecewise& p);

/// Union of elementary pieces, used by the Minkowski sum.
struct PieceUnion {
  struct Tail {
    Int cut;  // up: active for x >= cut; down: active for x < cut
    std::size_t modulus;
    ResidueMask mask;
  };
  struct Periodic {
    std::size_t modulus;
    ResidueMask mask;
  };

  std::vector<Tail> ups;
  std::vector<Tail> downs;
  std::vector<Periodic> periodic;
  std::vector<Int> points;

  Piecewise build() const;
};

struct Access {
  static LinearSet make(std::size_t modulus, Int lo, Int hi, ResidueMask down,
                        ResidueMask up, std::vector<Int> middle);
};

}  // namespace sumset::detail
