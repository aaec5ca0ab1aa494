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


#include <gtest/gtest.h>

#include <sstream>

#include "sumset/linset.hpp"

namespace sumset {
namespace {

std::vector<Int> ints(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

TEST(IntervalMod, TwoClassesModFive) {
  const LinearSet a = LinearSet::interval_mod(0, 1, 5);
  EXPECT_EQ(a.modulus(), 5u);
  EXPECT_EQ(a.down_residues(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(a.up_residues(), (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(a.middle().empty());
  EXPECT_EQ(to_string(a), "m=5; lo=0; hi=0; down={0,1}; up={0,1}; mid={}");
}

TEST(IntervalMod, FullCoverIsIntegers) {
  for (const LinearSet& s : {LinearSet::interval_mod(0, 0, 1), LinearSet::interval_mod(0, 4, 5),
                             LinearSet::interval_mod(-7, 20, 6)}) {
    EXPECT_TRUE(s.is_integers());
    EXPECT_EQ(s.modulus(), 1u);
    EXPECT_EQ(s, LinearSet::integers());
  }
}

TEST(IntervalMod, ShiftedIntervalsReduce) {
  EXPECT_EQ(LinearSet::interval_mod(5, 6, 5), LinearSet::interval_mod(0, 1, 5));
  EXPECT_EQ(LinearSet::interval_mod(-3, -3, 4), LinearSet::interval_mod(1, 1, 4));
  // 0+4Z u 2+4Z is 0+2Z.
  EXPECT_EQ(unite(LinearSet::interval_mod(0, 0, 4), LinearSet::interval_mod(2, 2, 4)),
            LinearSet::interval_mod(0, 0, 2));
}

TEST(IntervalMod, RejectsBadParameters) {
  EXPECT_THROW(LinearSet::interval_mod(3, 2, 5), InvalidParameters);
  EXPECT_THROW(LinearSet::interval_mod(0, 1, 0), InvalidParameters);
  EXPECT_THROW(LinearSet::interval_mod(0, 1, -4), InvalidParameters);
}

TEST(UpTail, ListsProgression) {
  const LinearSet b1 = LinearSet::up_tail(4, 5, 1);
  EXPECT_EQ(b1.window(0, 20), ints({9, 14, 19}));
  EXPECT_FALSE(b1.contains(4));
  EXPECT_TRUE(b1.contains(9));
  EXPECT_TRUE(b1.is_bounded_below());
  EXPECT_TRUE(b1.down_residues().empty());
}

TEST(UpTail, NonnegativeIntegers) {
  const LinearSet n = LinearSet::up_tail(0, 1, 0);
  EXPECT_EQ(*n.min(), 0);
  EXPECT_FALSE(n.contains(-1));
  EXPECT_TRUE(n.contains(123456789));
  EXPECT_EQ(n, complement(LinearSet::below(0)));
}

TEST(UpTail, TailsShrinkStrictly) {
  const LinearSet b1 = LinearSet::up_tail(4, 5, 1);
  const LinearSet b2 = LinearSet::up_tail(4, 5, 2);
  EXPECT_TRUE(is_subset(b2, b1));
  EXPECT_NE(b1, b2);
  EXPECT_THROW(LinearSet::up_tail(0, 0, 1), InvalidParameters);
}

TEST(Finite, Basics) {
  EXPECT_TRUE(LinearSet::finite({}).is_empty());
  EXPECT_EQ(LinearSet::finite({}), LinearSet());
  const LinearSet f = LinearSet::finite({2, 0, 1, 1});
  EXPECT_EQ(f.middle(), ints({0, 1, 2}));
  EXPECT_TRUE(f.is_finite());
  const LinearSet g = LinearSet::finite({0, 5, 10, 15});
  EXPECT_TRUE(g.is_finite());
  EXPECT_FALSE(g.contains(20));
}

TEST(Boolean, TheAqOfTheClassTailConstruction) {
  const LinearSet a1 = unite(LinearSet::interval_mod(0, 1, 5), LinearSet::up_tail(4, 5, 1));
  EXPECT_EQ(a1.window(0, 20), ints({0, 1, 5, 6, 9, 10, 11, 14, 15, 16, 19, 20}));
  EXPECT_TRUE(a1.contains(-5));
  EXPECT_FALSE(a1.contains(-1));
  EXPECT_FALSE(a1.contains(4));
}

TEST(Boolean, CrtIncompatibleClasses) {
  EXPECT_TRUE(intersect(LinearSet::interval_mod(2, 2, 4), LinearSet::interval_mod(3, 3, 6)).is_empty());
  EXPECT_EQ(intersect(LinearSet::interval_mod(1, 1, 4), LinearSet::interval_mod(3, 3, 6)),
            LinearSet::interval_mod(9, 9, 12));
}

TEST(Boolean, ComplementAndDifference) {
  const LinearSet s = unite(LinearSet::finite({-3, 7}), LinearSet::up_tail(1, 3, 4));
  EXPECT_TRUE(intersect(s, complement(s)).is_empty());
  EXPECT_TRUE(unite(s, complement(s)).is_integers());
  EXPECT_EQ(difference(s, LinearSet::finite({7})), unite(LinearSet::finite({-3}), LinearSet::up_tail(1, 3, 4)));
  EXPECT_TRUE(complement(LinearSet()).is_integers());
  EXPECT_TRUE(complement(LinearSet::integers()).is_empty());
}

TEST(Minkowski, TwoFoldOfTwoClasses) {
  const LinearSet a = LinearSet::interval_mod(0, 1, 5);
  EXPECT_EQ(minkowski_sum(a, a), LinearSet::interval_mod(0, 2, 5));
}

TEST(Minkowski, ZeroIsIdentityAndEmptyAnnihilates) {
  const LinearSet s = unite(LinearSet::finite({-9, 2}), LinearSet::up_tail(3, 7, 0));
  EXPECT_EQ(minkowski_sum(s, LinearSet::finite({0})), s);
  EXPECT_TRUE(minkowski_sum(s, LinearSet()).is_empty());
}

TEST(Minkowski, DownPlusUpGivesFullLines) {
  EXPECT_EQ(minkowski_sum(LinearSet::interval_mod(2, 2, 4), LinearSet::interval_mod(3, 3, 6)),
            LinearSet::interval_mod(5, 5, 2));
  // A down tail plus an up tail covers whole classes mod gcd.
  const LinearSet down = complement(LinearSet::up_tail(0, 1, 0));  // x < 0
  const LinearSet up = LinearSet::up_tail(0, 3, 10);
  EXPECT_TRUE(minkowski_sum(down, up).is_integers());
}

TEST(Minkowski, UpTailsGcdThreshold) {
  // {4t} + {6t} for t >= 0 is the even numbers except 2.
  const LinearSet s = minkowski_sum(LinearSet::up_tail(0, 4, 0), LinearSet::up_tail(0, 6, 0));
  EXPECT_EQ(s.window(-4, 20), ints({0, 4, 6, 8, 10, 12, 14, 16, 18, 20}));
  EXPECT_EQ(s.modulus(), 2u);
  // Numerical semigroup <3,5>: Frobenius number 7.
  const LinearSet g = unite(LinearSet::up_tail(0, 3, 0), LinearSet::up_tail(0, 5, 0));
  const LinearSet gg = h_fold_sum(unite(g, LinearSet::finite({0})), 4);
  EXPECT_FALSE(gg.contains(7));
  EXPECT_TRUE(gg.contains(8));
}

TEST(Minkowski, FinitePlusFinite) {
  EXPECT_EQ(minkowski_sum(LinearSet::finite({0, 10}), LinearSet::finite({0, 1})),
            LinearSet::finite({0, 1, 10, 11}));
}

TEST(HFold, ReachesIntegersAtH0) {
  const LinearSet a = LinearSet::interval_mod(0, 1, 5);
  EXPECT_TRUE(h_fold_sum(a, 4).is_integers());
  EXPECT_EQ(h_fold_sum(a, 4), h_fold_sum(a, 5));
  const LinearSet three = h_fold_sum(a, 3);
  EXPECT_EQ(three, LinearSet::interval_mod(0, 3, 5));
  EXPECT_TRUE(intersect(three, LinearSet::interval_mod(4, 4, 5)).is_empty());
  EXPECT_EQ(h_fold_sum(a, 1), a);
  EXPECT_TRUE(h_fold_sum(LinearSet(), 3).is_empty());
  EXPECT_THROW(h_fold_sum(a, 0), InvalidParameters);
}

TEST(HFold, ClassTailClosedForm) {
  for (int s = 1; s <= 3; ++s) {
    for (int h0 = 3; h0 <= 5; ++h0) {
      const Int m = Int(h0 - 1) * s + 2;
      const LinearSet a = LinearSet::interval_mod(0, s, m);
      for (std::uint64_t h = 1; h <= 8; ++h) {
        const Int top = std::min<Int>(Int(h) * s, m - 1);
        EXPECT_EQ(h_fold_sum(a, h), LinearSet::interval_mod(0, top, m)) << s << " " << h0 << " " << h;
      }
    }
  }
}

TEST(HFold, BigIntegersDoNotOverflow) {
  const Int big = Int(1) << 200;
  const LinearSet s = LinearSet::finite(std::vector<Int>{big, -big});
  EXPECT_EQ(h_fold_sum(s, 3).middle(), (std::vector<Int>{-3 * big, -big, big, 3 * big}));
}

TEST(Queries, WindowAndExtrema) {
  const LinearSet s = unite(LinearSet::finite({-7}), LinearSet::up_tail(2, 5, 0));
  EXPECT_EQ(*s.min(), -7);
  EXPECT_FALSE(s.max().has_value());
  EXPECT_EQ(s.window(-10, 12), ints({-7, 2, 7, 12}));
  EXPECT_THROW(s.window(1, 0), InvalidParameters);
  EXPECT_EQ(*LinearSet::interval_mod(3, 3, 7).nearest_to_zero(), 3);
  EXPECT_EQ(*LinearSet::interval_mod(4, 4, 7).nearest_to_zero(), -3);
  EXPECT_FALSE(LinearSet().nearest_to_zero().has_value());
}

TEST(Canonical, MinimalCutsAndPeriod) {
  // Built with a redundant period and loose cuts.
  const std::vector<std::size_t> down{0, 2, 4};
  const std::vector<std::size_t> up{1, 3, 5};
  const LinearSet s = LinearSet::from_parts(6, -10, 10, down, up, ints({-9, -8, 1, 4}));
  EXPECT_EQ(s.modulus(), 2u);
  EXPECT_EQ(s.down_residues(), (std::vector<std::size_t>{0}));
  EXPECT_EQ(s.up_residues(), (std::vector<std::size_t>{1}));
  // x < -9 even; then -9, -8; then 1, 4, and odd numbers >= 10... and 1 is odd.
  for (Int x = -30; x <= 30; ++x) {
    const bool expect = (x < -10 && x % 2 == 0) || x == -9 || x == -8 || x == 1 || x == 4 ||
                        (x >= 10 && x % 2 != 0);
    EXPECT_EQ(s.contains(x), expect) << x;
  }
  EXPECT_EQ(s, parse_linear_set(to_string(s)));
}

TEST(Serialization, RoundTripsAndRejectsGarbage) {
  for (const LinearSet& s :
       {LinearSet(), LinearSet::integers(), LinearSet::interval_mod(0, 1, 5),
        unite(LinearSet::finite({-7, 30}), LinearSet::up_tail(2, 5, 0)), LinearSet::below(-4)}) {
    EXPECT_EQ(parse_linear_set(to_string(s)), s) << to_string(s);
  }
  EXPECT_EQ(to_string(LinearSet()), "empty");
  EXPECT_THROW(parse_linear_set("m=5; lo=0"), ParseError);
  EXPECT_THROW(parse_linear_set("m=5; lo=0; hi=0; down={7}; up={}; mid={}"), ParseError);
  std::ostringstream os;
  os << LinearSet::finite({1});
  EXPECT_EQ(os.str(), "m=1; lo=1; hi=2; down={}; up={}; mid={1}");
}

}  // namespace
}  // namespace sumset
