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

#include "sumset/expr.hpp"
#include "sumset/oracle.hpp"

namespace sumset {
namespace {

TEST(Expr, Atoms) {
  EXPECT_EQ(evaluate("{3, 1,2}"), LinearSet::finite({1, 2, 3}));
  EXPECT_EQ(evaluate("{}"), LinearSet());
  EXPECT_EQ(evaluate("empty"), LinearSet());
  EXPECT_EQ(evaluate("Z"), LinearSet::integers());
  EXPECT_EQ(evaluate("4+5*Z"), LinearSet::interval_mod(4, 4, 5));
  EXPECT_EQ(evaluate("-1 + 5 * Z"), LinearSet::interval_mod(4, 4, 5));
  EXPECT_EQ(evaluate("[0,1]+5*Z"), LinearSet::interval_mod(0, 1, 5));
  EXPECT_EQ(evaluate("{4+5*t : t>=1}"), LinearSet::up_tail(4, 5, 1));
  EXPECT_EQ(evaluate("{-3+2*t:t>=-4}"), LinearSet::up_tail(-3, 2, -4));
}

TEST(Expr, Functions) {
  EXPECT_TRUE(evaluate("hsum(4, [0,1]+5*Z)").is_integers());
  EXPECT_EQ(to_string(evaluate("hsum(4, [0,1]+5*Z)")), "m=1; lo=0; hi=0; down={0}; up={0}; mid={}");
  EXPECT_EQ(evaluate("sum({0}, [0,2]+5*Z)"), evaluate("[0,2]+5*Z"));
  EXPECT_EQ(to_string(evaluate("inter(2+4*Z, 3+6*Z)")), "empty");
  EXPECT_EQ(evaluate("union([0,1]+5*Z, {4+5*t : t>=1})"),
            unite(LinearSet::interval_mod(0, 1, 5), LinearSet::up_tail(4, 5, 1)));
  EXPECT_EQ(evaluate("compl(compl({1,2}))"), LinearSet::finite({1, 2}));
  EXPECT_EQ(evaluate("diff(Z, 1+2*Z)"), LinearSet::interval_mod(0, 0, 2));
  EXPECT_EQ(evaluate("sum(2+4*Z, 3+6*Z)"), LinearSet::interval_mod(1, 1, 2));
}

TEST(Expr, SerializedFormIsAnAtom) {
  EXPECT_EQ(evaluate("m=5; lo=0; hi=0; down={0,1}; up={0,1}; mid={}"), LinearSet::interval_mod(0, 1, 5));
  EXPECT_EQ(evaluate("union(m=1; lo=1; hi=2; down={}; up={}; mid={1}, {2})"), LinearSet::finite({1, 2}));
}

TEST(Expr, RoundTripsCanonicalForms) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    const LinearSet s = oracle::random_set(rng);
    EXPECT_EQ(evaluate(to_string(s)), s) << to_string(s);
  }
}

TEST(Expr, BigIntegers) {
  const LinearSet s = evaluate("{123456789012345678901234567890, -1}");
  EXPECT_TRUE(s.contains(Int("123456789012345678901234567890")));
}

std::size_t error_position(std::string_view text) {
  try {
    evaluate(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no parse error for " << text;
  return 0;
}

TEST(Expr, ErrorsCarryPositions) {
  EXPECT_EQ(error_position("union({1}, )"), 11u);
  EXPECT_EQ(error_position("frob({1})"), 0u);
  EXPECT_EQ(error_position("{1,2"), 4u);
  EXPECT_EQ(error_position("[0,1]+5*Y"), 8u);
  EXPECT_EQ(error_position("{1} {2}"), 4u);
  EXPECT_EQ(error_position("hsum(0, {1})"), 5u);
  EXPECT_EQ(error_position(""), 0u);
  EXPECT_EQ(error_position("m=5; lo=0; hi=0; down={9}; up={}; mid={}"), 23u);
}

TEST(Expr, ConstructorErrorsPropagate) {
  EXPECT_THROW(evaluate("[3,1]+5*Z"), InvalidParameters);
  EXPECT_THROW(evaluate("1+0*Z"), InvalidParameters);
  EXPECT_THROW(evaluate("{1+0*t : t>=0}"), InvalidParameters);
}

}  // namespace
}  // namespace sumset
