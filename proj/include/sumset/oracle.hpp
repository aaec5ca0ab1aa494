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

// Windowed brute-force ground truth. Nothing here calls the Minkowski sum or
// the Boolean algebra of LinearSet; samples are read through contains/window
// only, so every result is independent of the symbolic route it checks.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sumset/linset.hpp"

namespace sumset::oracle {

/// Shape data that lets the oracle bound how far out a representation of a
/// windowed target can reach: every cut lies in [-cut_radius, cut_radius] and
/// both tails have period `period`.
struct Provenance {
  Int cut_radius;
  Int period;
};

/// A finite truncation of a (possibly infinite) set. The source is known
/// exactly on [lo - margin, hi + margin]; `members` lists it there.
struct WindowSample {
  Int lo;
  Int hi;
  Int margin = 0;
  std::vector<Int> members;
  std::string source;

  /// The listing is the whole set, not just a truncation.
  bool complete = false;
  /// Every element of the source is >= this bound.
  std::optional<Int> lower_bound;
  std::optional<Provenance> provenance;
  /// Cleared when an operation could not certify exactness on [lo, hi].
  bool valid = true;

  Int known_lo() const { return lo - margin; }
  Int known_hi() const { return hi + margin; }
  bool contains(const Int& x) const;

  /// Members inside [lo, hi] only.
  std::vector<Int> core() const;
};

/// Samples s on [lo - margin, hi + margin], recording its shape.
WindowSample sample(const LinearSet& s, const Int& lo, const Int& hi, const Int& margin = 0,
                    std::string source = {});

/// Explicit finite set; the sample is complete.
WindowSample sample_finite(std::vector<Int> members, std::string source = {});

/// Margin that makes a pairwise sum exact on [-w, w]: for sets with cuts in
/// [-c, c] and periods dividing L, some representation of every target uses
/// only elements of absolute value <= w + c + L.
Int pair_margin(const Provenance& a, const Provenance& b);

/// Same bound for h summands of one set: (h - 1)(c + m).
Int hfold_margin(const Provenance& a, std::uint64_t h);

/// All pairwise sums of members landing in [lo, hi]. The result is flagged
/// invalid (never silently wrong) when the operands' known ranges do not
/// cover every representation of every target.
WindowSample brute_sumset(const WindowSample& a, const WindowSample& b, const Int& lo,
                          const Int& hi);

/// h-fold brute sumset on [lo, hi], same validity rules as brute_sumset.
WindowSample brute_hfold(const WindowSample& a, std::uint64_t h, const Int& lo, const Int& hi);

/// Number of ordered h-tuples of members summing to x. Throws
/// InsufficientMargin unless the count is provably exact: the sample is
/// complete, or the source is bounded below by m0 and known on
/// [m0, x - (h - 1) m0].
Int rep_count(const WindowSample& a, std::uint64_t h, const Int& x);

struct CrossCheck {
  bool pass = true;
  std::optional<Int> first_discrepancy;
};

/// Membership agreement between a symbolic set and a sample on [lo, hi].
CrossCheck cross_validate(const LinearSet& symbolic, const WindowSample& sample);

/// `lo..hi margin=<M>: x1,x2,...`
std::string to_string(const WindowSample& s);

/// Bounds for the randomized LinearSet generator.
struct RandomSetOptions {
  std::size_t max_modulus = 24;
  long long cut_min = -50;
  long long cut_max = 50;
  std::size_t max_middle = 12;
};

/// Random canonical set: mixes finite sets, one-sided tails, periodic sets
/// and general two-sided shapes.
LinearSet random_set(std::mt19937_64& rng, const RandomSetOptions& options = {});

}  // namespace sumset::oracle
