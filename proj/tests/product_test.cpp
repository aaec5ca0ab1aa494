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

#include <functional>

#include "sumset/families.hpp"

namespace sumset {
namespace {

const GeneratorSpec kSucc = GeneratorSpec::successor();

// Plain enumeration of h-multisets from {G_r, -(d-1) G_r : q <= r <= last}.
bool brute_zero_sum(std::uint64_t d, std::uint64_t h, std::size_t q, std::size_t last) {
  std::vector<Int> pool;
  for (std::size_t r = q; r <= last; ++r) {
    pool.push_back(kSucc.G(r));
    pool.push_back(-Int(d - 1) * kSucc.G(r));
  }
  std::function<bool(std::size_t, std::uint64_t, const Int&)> go =
      [&](std::size_t from, std::uint64_t left, const Int& total) {
        if (left == 0) return total == 0;
        for (std::size_t i = from; i < pool.size(); ++i) {
          if (go(i, left - 1, total + pool[i])) return true;
        }
        return false;
      };
  return go(0, h, 0);
}

TEST(ZeroDecision, WitnessForMultiples) {
  const ZeroDecision r = theorem2_zero_decision(2, 4, kSucc);
  EXPECT_TRUE(r.zero_in_limit);
  EXPECT_EQ(r.witness, (std::vector<Int>{2, 2, -2, -2}));
  const ZeroDecision later = theorem2_zero_decision(3, 6, kSucc, 2);
  EXPECT_EQ(later.witness, (std::vector<Int>{6, 6, 6, 6, -12, -12}));
}

TEST(ZeroDecision, IndexBoundForNonMultiples) {
  const ZeroDecision r = theorem2_zero_decision(3, 5, kSucc);
  EXPECT_FALSE(r.zero_in_limit);
  EXPECT_TRUE(r.witness.empty());
  // g_r = r + 1 <= (d - 1) h = 10 up to r = 9.
  EXPECT_EQ(r.index_bound, 10u);
  EXPECT_FALSE(theorem2_zero_decision(2, 1, kSucc).zero_in_limit);
  EXPECT_THROW(theorem2_zero_decision(1, 2, kSucc), InvalidParameters);
  EXPECT_THROW(theorem2_zero_decision(2, 0, kSucc), InvalidParameters);
}

TEST(WindowSearch, FindsTheConstructiveWitness) {
  const ZeroSearchResult r = theorem2_window_search(2, 2, kSucc, 3);
  ASSERT_TRUE(r.found);
  EXPECT_EQ(r.representation, (std::vector<Int>{24, -24}));
}

TEST(WindowSearch, SmallIndicesAdmitExtraZeroSums) {
  // 2 + 6 - 4 - 4 = 0 uses four elements of A_1 for d = 3, although 3 does not
  // divide 4; the limit still excludes 0 because A_q loses these for large q.
  const ZeroSearchResult r = theorem2_window_search(3, 4, kSucc, 1);
  ASSERT_TRUE(r.found);
  Int total = 0;
  for (const Int& x : r.representation) total += x;
  EXPECT_EQ(total, 0);
  EXPECT_EQ(r.representation.size(), 4u);
  const std::size_t bound = theorem2_zero_decision(3, 4, kSucc).index_bound;
  EXPECT_FALSE(theorem2_window_search(3, 4, kSucc, bound).found);
}

TEST(WindowSearch, AgreesWithPlainEnumeration) {
  for (std::uint64_t d = 2; d <= 3; ++d) {
    for (std::uint64_t h = 1; h <= 5; ++h) {
      const std::size_t bound = theorem2_zero_decision(d, h, kSucc).index_bound;
      for (std::size_t q : {std::size_t{1}, std::size_t{2}, std::size_t{3}, bound}) {
        const std::size_t last = std::max(bound, q) + h;
        const bool brute = brute_zero_sum(d, h, q, last);
        EXPECT_EQ(theorem2_window_search(d, h, kSucc, q).found, brute) << d << " " << h << " " << q;
        // A few more indices never add a zero sum.
        EXPECT_EQ(brute_zero_sum(d, h, q, last + 2), brute) << d << " " << h << " " << q;
      }
    }
  }
}

TEST(WindowSearch, FromIndexBoundOnExactlyMultiples) {
  for (std::uint64_t d = 2; d <= 5; ++d) {
    for (std::uint64_t h = 1; h <= 12; ++h) {
      const std::size_t bound = theorem2_zero_decision(d, h, kSucc).index_bound;
      EXPECT_EQ(theorem2_window_search(d, h, kSucc, bound).found, h % d == 0) << d << " " << h;
    }
  }
}

TEST(WindowSearch, ExplicitGenerators) {
  const GeneratorSpec gen = GeneratorSpec::explicit_list({Int(3), Int(10), Int(11)});
  for (std::uint64_t h = 1; h <= 8; ++h) {
    const std::size_t bound = theorem2_zero_decision(2, h, gen).index_bound;
    EXPECT_EQ(theorem2_window_search(2, h, gen, bound).found, h % 2 == 0) << h;
  }
}

TEST(Refutation, IndexPastTheTarget) {
  EXPECT_EQ(product_refutation_index(25, kSucc), 4u);
  EXPECT_EQ(product_refutation_index(-24, kSucc), 4u);
  EXPECT_EQ(product_refutation_index(1, kSucc), 1u);
  EXPECT_THROW(product_refutation_index(0, kSucc), InvalidParameters);
  // Nothing of size below G_q is an h-fold sum of A_q except 0 at multiples.
  const ProductFamily f{2, kSucc};
  const auto s = std::get<oracle::WindowSample>(member_at(f, product_refutation_index(25, kSucc), 6));
  const oracle::WindowSample three = oracle::brute_hfold(s, 3, -25, 25);
  EXPECT_TRUE(three.core().empty());
}

TEST(BigProducts, NoOverflow) {
  EXPECT_EQ(kSucc.G(30).str(), "8222838654177922817725562880000000");
  EXPECT_TRUE(product_contains(ProductFamily{4, kSucc}, 20, -3 * kSucc.G(30)));
}

}  // namespace
}  // namespace sumset
