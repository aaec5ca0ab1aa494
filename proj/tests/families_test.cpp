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

#include <random>

#include "sumset/families.hpp"

namespace sumset {
namespace {

std::vector<Int> ints(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

LinearSet classes(std::initializer_list<long long> residues, long long m) {
  LinearSet out;
  for (long long r : residues) out = unite(out, LinearSet::interval_mod(r, r, m));
  return out;
}

LinearSet exact(const FamilySchema& f, std::size_t q) { return std::get<LinearSet>(member_at(f, q)); }

TEST(Generators, SuccessorAndExplicit) {
  const GeneratorSpec succ = GeneratorSpec::successor();
  EXPECT_EQ(succ.g(1), 2);
  EXPECT_EQ(succ.G(3), 24);
  EXPECT_EQ(succ.G(0), 1);
  const GeneratorSpec list = GeneratorSpec::explicit_list(ints({2, 3, 5}));
  EXPECT_EQ(list.g(4), 7);
  EXPECT_EQ(list.G(4), 2 * 3 * 5 * 7);
  EXPECT_EQ(GeneratorSpec::explicit_list(ints({4})).g(3), 6);
  EXPECT_EQ(GeneratorSpec::parse(" [2, 3, 5] "), list);
  EXPECT_EQ(GeneratorSpec::parse("\"j+1\""), succ);
  EXPECT_EQ(list.describe(), "[2,3,5]");
  EXPECT_THROW(GeneratorSpec::explicit_list(ints({1, 3})), InvalidParameters);
  EXPECT_THROW(GeneratorSpec::explicit_list(ints({3, 3})), InvalidParameters);
  EXPECT_THROW(GeneratorSpec::parse("j+2"), InvalidParameters);
}

TEST(Generators, ProductsDivideProperly) {
  const GeneratorSpec list = GeneratorSpec::explicit_list(ints({2, 5, 6}));
  for (std::size_t k = 1; k <= 6; ++k) {
    for (std::size_t q = k + 1; q <= 8; ++q) EXPECT_EQ((list.G(q) / list.G(k)) % list.g(k + 1), 0);
  }
}

TEST(Members, ClassTailSecondMember) {
  const LinearSet a2 = exact(ClassTailFamily{1, 4}, 2);
  EXPECT_EQ(a2, unite(LinearSet::interval_mod(0, 1, 5), LinearSet::up_tail(4, 5, 2)));
  EXPECT_EQ(a2.window(0, 25), ints({0, 1, 5, 6, 10, 11, 14, 15, 16, 19, 20, 21, 24, 25}));
}

TEST(Members, ProductFamilyTruncation) {
  const auto s = std::get<oracle::WindowSample>(member_at(ProductFamily{2, GeneratorSpec::successor()}, 1, 3));
  EXPECT_EQ(s.members, ints({-24, -6, -2, 2, 6, 24}));
  const ProductFamily three{3, GeneratorSpec::successor()};
  EXPECT_TRUE(product_contains(three, 2, -12));
  EXPECT_FALSE(product_contains(three, 2, -4));
  EXPECT_FALSE(product_contains(three, 2, 2));
  EXPECT_TRUE(product_contains(three, 2, 720));
  EXPECT_FALSE(product_contains(three, 1, 0));
}

TEST(Members, ConstantTailIsConstant) {
  const LinearSet s = LinearSet::interval_mod(1, 2, 7);
  const ConstantTailFamily f{{}, s};
  for (std::size_t q = 1; q <= 4; ++q) EXPECT_EQ(exact(f, q), s);
}

TEST(Members, FamiliesDecrease) {
  std::mt19937_64 rng(3);
  std::vector<FamilySchema> schemas = {ClassTailFamily{2, 4}, ClassTailFamily{1, 3},
                                       ConstantTailFamily{{LinearSet::integers()}, LinearSet::interval_mod(0, 0, 3)}};
  for (int i = 0; i < 20; ++i) schemas.emplace_back(random_bounded_below(rng));
  for (const FamilySchema& f : schemas) {
    validate(f);
    for (std::size_t q = 1; q <= 6; ++q) EXPECT_TRUE(is_subset(exact(f, q + 1), exact(f, q)));
    for (std::uint64_t h = 1; h <= 3; ++h) {
      EXPECT_TRUE(is_subset(h_fold_sum(limit_set(f), h), h_fold_sum(exact(f, 4), h)));
    }
  }
}

TEST(Limits, LimitSets) {
  EXPECT_EQ(limit_set(ClassTailFamily{1, 4}), LinearSet::interval_mod(0, 1, 5));
  EXPECT_TRUE(limit_set(ProductFamily{2, GeneratorSpec::successor()}).is_empty());
  const LinearSet s1 = LinearSet::up_tail(0, 1, -3);
  const LinearSet s2 = LinearSet::up_tail(0, 2, 0);
  EXPECT_EQ(limit_set(ConstantTailFamily{{s1}, s2}), s2);
}

TEST(Limits, ClassTailTwoFold) {
  const LimitResult r = sumset_intersection_limit(ClassTailFamily{1, 4}, 2);
  EXPECT_EQ(r.set, classes({0, 1, 2, 4}, 5));
  EXPECT_EQ(r.method, Method::kAlgebraicLimit);
  EXPECT_TRUE(r.certified);
  EXPECT_EQ(r.set, unite(h_fold_sum(LinearSet::interval_mod(0, 1, 5), 2), LinearSet::interval_mod(4, 4, 5)));
  EXPECT_TRUE(sumset_intersection_limit(ClassTailFamily{1, 4}, 3).set.is_integers());
}

TEST(Limits, ProductFamilyZeroOrNothing) {
  const FamilySchema f = ProductFamily{3, GeneratorSpec::successor()};
  EXPECT_EQ(sumset_intersection_limit(f, 6).set, LinearSet::finite({0}));
  EXPECT_TRUE(sumset_intersection_limit(f, 4).set.is_empty());
  EXPECT_EQ(sumset_intersection_limit(f, 6).method, Method::kClosedForm);
}

TEST(Limits, ClosedFormAgreesWithAlgebraicLimit) {
  for (int s = 1; s <= 3; ++s) {
    for (std::uint64_t h0 = 3; h0 <= 6; ++h0) {
      const ClassTailFamily f{s, h0};
      for (std::uint64_t h = 1; h <= h0 + 2; ++h) {
        EXPECT_EQ(class_tail_closed_form(f, h), sumset_intersection_limit(f, h).set) << s << h0 << h;
      }
    }
  }
}

TEST(Limits, DriftingPartsClimb) {
  const DriftView view = drift_view(ClassTailFamily{1, 5});
  const DriftDecomposition d3 = decompose(view, 2, 3);
  const DriftDecomposition d9 = decompose(view, 2, 9);
  EXPECT_EQ(d3.stable, d9.stable);
  ASSERT_EQ(d3.floors.size(), d9.floors.size());
  for (std::size_t i = 0; i < d3.floors.size(); ++i) {
    EXPECT_LT(d3.floors[i], d9.floors[i]);
    EXPECT_GE(*d9.drifting[i].min(), d9.floors[i]);
  }
  // 2A_12 for m = 6 still has the drifting class 4 + 6Z from 154 on.
  const DriftDecomposition d12 = decompose(view, 2, 12);
  EXPECT_EQ(d12.floors.back(), 154);
}

TEST(Limits, WindowedIntersectionBelowTheDrift) {
  const FamilySchema f = ClassTailFamily{1, 4};
  const LinearSet limit = sumset_intersection_limit(f, 2).set;
  const oracle::WindowSample low = windowed_intersection(f, 2, 12, -200, 120);
  EXPECT_TRUE(low.valid);
  EXPECT_TRUE(oracle::cross_validate(limit, low).pass);
  // Up to q = 12 the window still sees the drifting class from 2 * 4 + 5 * 24 = 128 on.
  const oracle::WindowSample wide = windowed_intersection(f, 2, 12, -200, 200);
  EXPECT_TRUE(wide.contains(128));
  EXPECT_FALSE(limit.contains(128));
}

TEST(Limits, WindowOnlyNeedsOptIn) {
  AnalysisOptions opts;
  opts.force_window = true;
  EXPECT_THROW(sumset_intersection_limit(ClassTailFamily{1, 4}, 2, opts), UnsupportedSchema);
  opts.allow_window = true;
  opts.window_hi = 100;
  const LimitResult r = sumset_intersection_limit(ClassTailFamily{1, 4}, 2, opts);
  EXPECT_EQ(r.method, Method::kOracleWindow);
  EXPECT_FALSE(r.certified);
  EXPECT_EQ(r.set.window(-200, 100), classes({0, 1, 2, 4}, 5).window(-200, 100));
  EXPECT_THROW(windowed_intersection(ProductFamily{}, 2, 3, -5, 5), UnsupportedSchema);
}

TEST(HSet, ClassTailPattern) {
  const FamilySchema f = ClassTailFamily{1, 4};
  for (std::uint64_t h = 1; h <= 8; ++h) EXPECT_EQ(is_in_H(f, h).in_h, h == 1 || h >= 4) << h;
}

TEST(HSet, ProductPattern) {
  const FamilySchema f = ProductFamily{2, GeneratorSpec::successor()};
  for (std::uint64_t h = 1; h <= 10; ++h) EXPECT_EQ(is_in_H(f, h).in_h, h % 2 == 1) << h;
}

TEST(HSet, ConstantTailAlwaysIn) {
  const LinearSet s = unite(LinearSet::finite({-4}), LinearSet::interval_mod(1, 1, 3));
  const FamilySchema f = ConstantTailFamily{{unite(s, LinearSet::finite({0}))}, s};
  for (std::uint64_t h = 1; h <= 6; ++h) EXPECT_TRUE(is_in_H(f, h).in_h);
}

TEST(HSet, ReportWitnessesAreChecked) {
  const HSetReport report = analyze(ClassTailFamily{2, 4}, 1, 8);
  ASSERT_EQ(report.records.size(), 8u);
  for (const HSetRecord& r : report.records) {
    if (r.in_h) {
      EXPECT_FALSE(r.witness);
      EXPECT_EQ(r.limit_intersection, r.h_fold);
    } else {
      ASSERT_TRUE(r.witness);
      EXPECT_TRUE(r.limit_intersection.contains(*r.witness));
      EXPECT_FALSE(r.h_fold.contains(*r.witness));
    }
  }
  EXPECT_EQ(*report.records[1].witness, -1);  // m - 1 = 7 is congruent to -1 mod 8
}

TEST(HSet, DefaultRangesAndValidation) {
  EXPECT_EQ(default_hmax(ClassTailFamily{1, 12}), 15u);
  EXPECT_EQ(default_hmax(ClassTailFamily{1, 4}), 12u);
  EXPECT_EQ(default_hmax(ProductFamily{7, GeneratorSpec::successor()}), 14u);
  EXPECT_THROW(validate(ClassTailFamily{1, 2}), InvalidParameters);
  EXPECT_THROW(validate(ClassTailFamily{0, 4}), InvalidParameters);
  EXPECT_THROW(validate(ProductFamily{1, GeneratorSpec::successor()}), InvalidParameters);
  EXPECT_THROW(analyze(ClassTailFamily{1, 4}, 3, 2), InvalidParameters);
  EXPECT_THROW(is_in_H(ClassTailFamily{1, 4}, 0), InvalidParameters);
  const LinearSet s = LinearSet::finite({1, 2});
  EXPECT_THROW(validate(ConstantTailFamily{{s}, LinearSet::finite({3})}), InvalidParameters);
  BoundedBelowFamily below;
  below.core = LinearSet::finite({-3});
  below.m0 = 0;
  EXPECT_THROW(validate(below), InvalidParameters);
}

TEST(Witness, SmallestTuple) {
  BoundedBelowFamily f;
  f.core = LinearSet::finite({0, 1});
  f.drift = DriftTail{0, 1};
  f.m0 = 0;
  validate(f);
  const auto w = reconstruct_witness(f, 2, 2);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->elements, ints({1, 1}));
  EXPECT_FALSE(reconstruct_witness(f, 3, 2));
  EXPECT_FALSE(reconstruct_witness(f, -1, 2));
  EXPECT_EQ(reconstruct_witness(f, 0, 3)->elements, ints({0, 0, 0}));
}

TEST(Witness, LexicographicallyLeast) {
  BoundedBelowFamily f;
  f.core = unite(LinearSet::finite({-2, 3}), LinearSet::up_tail(0, 5, 2));
  f.m0 = -2;
  validate(f);
  const auto w = reconstruct_witness(f, 11, 3);
  ASSERT_TRUE(w);
  // Both (-2,3,10) and (-2,-2,15) sum to 11; the second is smaller.
  EXPECT_EQ(w->elements, ints({-2, -2, 15}));
  const LinearSet three = h_fold_sum(f.core, 3);
  for (Int x = -6; x <= 60; ++x) EXPECT_EQ(reconstruct_witness(f, x, 3).has_value(), three.contains(x)) << x;
}

TEST(Classify, Shapes) {
  const ClassTailFamily t{1, 4};
  const std::vector<LinearSet> strict = {exact(t, 1), exact(t, 2), exact(t, 3)};
  EXPECT_EQ(classify_sequence(strict), SequenceShape::kStrictlyDecreasing);
  const LinearSet s = LinearSet::interval_mod(0, 2, 9);
  EXPECT_EQ(classify_sequence(std::vector<LinearSet>{s, s, s}), SequenceShape::kConstant);
  EXPECT_EQ(classify_sequence(std::vector<LinearSet>{s, LinearSet::integers()}), SequenceShape::kNotDecreasing);
  EXPECT_EQ(classify_sequence(std::vector<LinearSet>{LinearSet::integers(), s, s}), SequenceShape::kDecreasing);
  EXPECT_EQ(to_string(SequenceShape::kConstant), "constant-so-far");
  EXPECT_THROW(classify_sequence(std::vector<LinearSet>{}), InvalidParameters);
}

TEST(BoundedBelow, RandomFamiliesStayInH) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 15; ++i) {
    const BoundedBelowFamily f = random_bounded_below(rng);
    validate(f);
    for (std::uint64_t h = 1; h <= 4; ++h) EXPECT_TRUE(is_in_H(f, h).in_h);
  }
}

}  // namespace
}  // namespace sumset
