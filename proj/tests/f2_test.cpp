// Copyright 2026 The stabrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "stabrank/f2.hpp"

using namespace stabrank;

namespace {

F2Matrix random_matrix(std::mt19937 &rng, size_t r, size_t c) {
  F2Matrix m(r, c);
  for (size_t i = 0; i < r; i++) {
    for (size_t j = 0; j < c; j++) m.set(i, j, rng() & 1);
  }
  return m;
}

F2Vector random_vector(std::mt19937 &rng, size_t n) {
  F2Vector v(n);
  for (size_t i = 0; i < n; i++) v.set(i, rng() & 1);
  return v;
}

}  // namespace

TEST(F2Vector, StringRoundTripAndBitOrder) {
  F2Vector v = F2Vector::from_string("1101");
  EXPECT_EQ(v.size(), 4u);
  EXPECT_TRUE(v.get(0));
  EXPECT_FALSE(v.get(2));
  EXPECT_EQ(v.to_word(), 0b1011u);
  EXPECT_EQ(v.to_string(), "1101");
  EXPECT_EQ(v.weight(), 3u);
  EXPECT_THROW(F2Vector::from_string("10x"), std::invalid_argument);
}

TEST(F2Vector, WideVectorsCrossWordBoundaries) {
  F2Vector a(130);
  a.set(0, true);
  a.set(64, true);
  a.set(129, true);
  EXPECT_EQ(a.weight(), 3u);
  EXPECT_EQ(a.first_one(), 0u);
  F2Vector b = F2Vector::unit(130, 64);
  EXPECT_TRUE(dot(a, b));
  a ^= b;
  EXPECT_FALSE(a.get(64));
  a.erase(0);
  EXPECT_EQ(a.size(), 129u);
  EXPECT_TRUE(a.get(128));
}

TEST(F2Matrix, RrefOfIdentityAndRank) {
  F2Matrix id = F2Matrix::identity(5);
  RrefResult r = rref(id);
  EXPECT_EQ(r.rank, 5u);
  EXPECT_EQ(r.matrix, id);
  F2Matrix m = F2Matrix::from_strings({"1100", "0110", "1010"});
  EXPECT_EQ(rank(m), 2u);
}

TEST(F2Matrix, RandomRrefIsReducedAndPreservesRowSpace) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; trial++) {
    size_t r = 1 + rng() % 10;
    size_t c = 1 + rng() % 80;
    F2Matrix m = random_matrix(rng, r, c);
    RrefResult red = rref(m);
    ASSERT_EQ(red.pivots.size(), red.rank);
    for (size_t i = 0; i < red.rank; i++) {
      EXPECT_EQ(red.matrix.row_first_one(i), red.pivots[i]);
      for (size_t k = 0; k < r; k++) {
        EXPECT_EQ(red.matrix.get(k, red.pivots[i]), k == i);
      }
      if (i > 0) EXPECT_LT(red.pivots[i - 1], red.pivots[i]);
    }
    for (size_t i = red.rank; i < r; i++) EXPECT_TRUE(red.matrix.row_is_zero(i));
    F2Matrix stacked = m;
    for (size_t i = 0; i < red.rank; i++) stacked.append_row(red.matrix.row(i));
    EXPECT_EQ(rank(stacked), red.rank);
  }
}

TEST(F2Matrix, KernelDimensionAndOrthogonality) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 200; trial++) {
    size_t r = 1 + rng() % 9;
    size_t c = 1 + rng() % 70;
    F2Matrix m = random_matrix(rng, r, c);
    std::vector<F2Vector> ker = kernel_basis(m);
    EXPECT_EQ(ker.size() + rank(m), c);
    for (const F2Vector &v : ker) EXPECT_TRUE(m.multiply(v).is_zero());
    EXPECT_TRUE(is_independent(ker, c));
  }
}

TEST(F2Matrix, SolveFindsSolutionsExactlyWhenConsistent) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; trial++) {
    size_t r = 1 + rng() % 8;
    size_t c = 1 + rng() % 12;
    F2Matrix m = random_matrix(rng, r, c);
    F2Vector y = random_vector(rng, c);
    F2Vector b = m.multiply(y);
    auto sol = solve(m, b);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(m.multiply(*sol), b);
    F2Vector b2 = random_vector(rng, r);
    auto sol2 = solve(m, b2);
    if (sol2) EXPECT_EQ(m.multiply(*sol2), b2);
  }
  F2Matrix m = F2Matrix::from_strings({"11", "11"});
  EXPECT_FALSE(solve(m, F2Vector::from_string("10")).has_value());
}

TEST(F2Matrix, TransposeTwiceIsIdentity) {
  std::mt19937 rng(14);
  F2Matrix m = random_matrix(rng, 7, 93);
  EXPECT_EQ(m.transpose().transpose(), m);
  EXPECT_EQ(m.transpose().rows(), 93u);
}

TEST(AffineSpace, EnumeratesEachMemberOnce) {
  std::vector<F2Vector> basis = {F2Vector::from_string("1100"), F2Vector::from_string("0110"),
                                 F2Vector::from_string("0001")};
  F2Vector offset = F2Vector::from_string("1000");
  std::set<std::string> seen;
  for (const F2Vector &v : affine_space_members(basis, offset)) seen.insert(v.to_string());
  EXPECT_EQ(seen.size(), 8u);
  EXPECT_TRUE(seen.count("1000"));
  EXPECT_TRUE(seen.count("0100"));
  EXPECT_THROW(affine_space_members({F2Vector::from_string("11"), F2Vector::from_string("11")}, F2Vector(2)),
               std::invalid_argument);
}

TEST(GeneratorText, ParsesRowsSkippingBlankLinesAndComments) {
  F2Matrix g = parse_generator_matrix("# rep3\n111\n\n011\n");
  EXPECT_EQ(g.rows(), 2u);
  EXPECT_EQ(g.cols(), 3u);
  EXPECT_EQ(parse_generator_matrix(format_generator_matrix(g)), g);
  EXPECT_THROW(parse_generator_matrix("101\n11\n"), std::invalid_argument);
  EXPECT_THROW(parse_generator_matrix("1a1\n"), std::invalid_argument);
}
