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
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "sumset/integer.hpp"

namespace sumset {

namespace detail {
struct Access;
}  // namespace detail

/// Membership pattern of a tail: bit r is set iff residue r mod m is present.
using ResidueMask = boost::dynamic_bitset<>;

/// A subset of the integers that is periodic below some cut and above some
/// (possibly different) cut, with finitely many explicit points in between.
///
///   x in S  iff  (x <  lo_cut and x mod m in down_residues)
///            or  (x >= hi_cut and x mod m in up_residues)
///            or  x in middle
///
/// Values are always canonical: m is the least common period of the two tail
/// patterns, hi_cut is minimal, and lo_cut is maximal subject to
/// lo_cut <= hi_cut. A set with no exceptions to a single global pattern uses
/// lo_cut = hi_cut = 0. Structural equality is therefore set equality.
class LinearSet {
 public:
  /// The empty set.
  LinearSet();

  static LinearSet empty() { return LinearSet(); }
  static LinearSet integers();

  /// Union of the classes a + mZ for u <= a <= v.
  static LinearSet interval_mod(const Int& u, const Int& v, const Int& m);

  /// {a + m*t : t >= start}.
  static LinearSet up_tail(const Int& a, const Int& m, const Int& start);

  /// {x : x < end}.
  static LinearSet below(const Int& end);

  static LinearSet finite(std::span<const Int> elements);
  static LinearSet finite(std::initializer_list<long long> elements);

  /// Builds a set from possibly non-canonical parts and canonicalizes it.
  /// Residues must be < m, middle points must lie in [lo, hi).
  static LinearSet from_parts(const Int& m, const Int& lo, const Int& hi,
                              std::span<const std::size_t> down,
                              std::span<const std::size_t> up,
                              std::span<const Int> middle);

  bool is_empty() const;
  bool is_finite() const { return down_.none() && up_.none(); }
  bool is_bounded_below() const { return down_.none(); }
  bool is_bounded_above() const { return up_.none(); }
  bool is_integers() const;

  std::size_t modulus() const { return modulus_; }
  const Int& lo_cut() const { return lo_; }
  const Int& hi_cut() const { return hi_; }
  const ResidueMask& down_mask() const { return down_; }
  const ResidueMask& up_mask() const { return up_; }
  std::vector<std::size_t> down_residues() const;
  std::vector<std::size_t> up_residues() const;
  const std::vector<Int>& middle() const { return middle_; }

  bool contains(const Int& x) const;

  /// Members in [lo, hi], ascending.
  std::vector<Int> window(const Int& lo, const Int& hi) const;

  /// Least member; nullopt when empty or unbounded below.
  std::optional<Int> min() const;
  /// Greatest member; nullopt when empty or unbounded above.
  std::optional<Int> max() const;

  /// A member of least absolute value (ties go to the nonnegative one).
  std::optional<Int> nearest_to_zero() const;

  /// Members below lo_cut, i.e. the down tail on its own.
  LinearSet down_part() const;

  friend bool operator==(const LinearSet&, const LinearSet&) = default;

 private:
  friend struct detail::Access;

  std::size_t modulus_ = 1;
  Int lo_ = 0;
  Int hi_ = 0;
  ResidueMask down_;
  ResidueMask up_;
  std::vector<Int> middle_;
};

LinearSet unite(const LinearSet& a, const LinearSet& b);
LinearSet intersect(const LinearSet& a, const LinearSet& b);
LinearSet complement(const LinearSet& a);
LinearSet difference(const LinearSet& a, const LinearSet& b);

/// {x + y : x in a, y in b}.
LinearSet minkowski_sum(const LinearSet& a, const LinearSet& b);

/// The h-fold sumset hA, h >= 1.
LinearSet h_fold_sum(const LinearSet& a, std::uint64_t h);

bool is_subset(const LinearSet& a, const LinearSet& b);
inline bool equals(const LinearSet& a, const LinearSet& b) { return a == b; }

/// `empty` or `m=<m>; lo=<lo>; hi=<hi>; down={..}; up={..}; mid={..}`.
std::string to_string(const LinearSet& s);

/// Inverse of to_string. Accepts non-canonical but well-formed input.
LinearSet parse_linear_set(std::string_view text);

std::ostream& operator<<(std::ostream& os, const LinearSet& s);

}  // namespace sumset
