/*******************************************************************************
 * Copyright (c) 2026 The qdec Authors.                                        *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "qdec/codes.hpp"

using namespace qdec;
using namespace qdec::codes;

namespace {

int dot(const gf::Field &f, const std::vector<int> &a, const std::vector<int> &b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

std::vector<int> column(const SymbolMatrix &m, int j) {
  std::vector<int> c;
  for (const auto &row : m)
    c.push_back(row[j]);
  return c;
}

struct Params {
  int q, m, n, k;
};

const Params kHamming[] = {{2, 3, 7, 4}, {2, 4, 15, 11}, {3, 2, 4, 2},
                           {3, 3, 13, 10}, {4, 2, 5, 3},  {4, 3, 21, 18},
                           {5, 2, 6, 4},  {8, 2, 9, 7},   {9, 2, 10, 8}};

} // namespace

TEST(Codes, HammingParameters) {
  for (const auto &p : kHamming) {
    const auto c = hamming_code(p.q, p.m);
    EXPECT_EQ(c.length(), p.n) << p.q << "," << p.m;
    EXPECT_EQ(c.dimension(), p.k) << p.q << "," << p.m;
  }
}

TEST(Codes, ParityCheckColumnsAreNormalisedAndOrdered) {
  for (const auto &p : kHamming) {
    const auto f = gf::Field::of_order(p.q);
    const auto h = hamming_parity_check(f, p.m);
    ASSERT_EQ(static_cast<int>(h.size()), p.m);
    for (int j = 0; j < p.n; ++j) {
      const auto c = column(h, j);
      auto lead = std::find_if(c.begin(), c.end(), [](int v) { return v != 0; });
      ASSERT_NE(lead, c.end());
      EXPECT_EQ(*lead, 1);
      if (j > 0)
        EXPECT_LT(column(h, j - 1), c);
    }
  }
}

TEST(Codes, GeneratorIsOrthogonalToParityCheck) {
  for (const auto &p : kHamming) {
    const auto f = gf::Field::of_order(p.q);
    const auto c = hamming_code(p.q, p.m);
    const auto h = hamming_parity_check(f, p.m);
    for (const auto &g : c.generator())
      for (const auto &r : h)
        EXPECT_EQ(dot(f, g, r), 0);
    const auto d = dual_code(c);
    for (const auto &g : c.generator())
      for (const auto &r : d.generator())
        EXPECT_EQ(dot(f, g, r), 0);
  }
}

TEST(Codes, MinimumDistances) {
  EXPECT_EQ(min_distance(hamming_code(2, 3)), 3);
  EXPECT_EQ(min_distance(dual_code(hamming_code(2, 3))), 4);
  EXPECT_EQ(dual_code(hamming_code(2, 3)).dimension(), 3);
  EXPECT_EQ(min_distance(hamming_code(4, 2)), 3);
  const auto d4 = dual_code(hamming_code(4, 2));
  EXPECT_EQ(d4.length(), 5);
  EXPECT_EQ(d4.dimension(), 2);
  EXPECT_EQ(min_distance(d4), 4);
  EXPECT_EQ(min_distance(dual_code(hamming_code(3, 3))), 9);
  EXPECT_EQ(min_distance(dual_code(hamming_code(9, 2))), 9);
}

// Too many codewords to enumerate: d = 3 follows from the parity checks,
// since no two columns are proportional and some three are dependent.
TEST(Codes, Gf9HammingDistanceFromParityColumns) {
  const auto f = gf::Field::of_order(9);
  const auto h = hamming_parity_check(f, 2);
  const int n = 10;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int s = 1; s < 9; ++s) {
        auto ca = column(h, a), cb = column(h, b);
        for (auto &v : cb)
          v = f.mul(v, s);
        EXPECT_NE(ca, cb);
      }
  // Column 0 = (0,1), column 1 = (1,0), column 2 = (1,1): c0 + c1 = c2.
  EXPECT_EQ(column(h, 0), (std::vector<int>{0, 1}));
  EXPECT_EQ(column(h, 1), (std::vector<int>{1, 0}));
  EXPECT_EQ(column(h, 2), (std::vector<int>{1, 1}));
  EXPECT_THROW(min_distance(hamming_code(9, 2)), std::overflow_error);
}

TEST(Codes, EnumerationAndWeights) {
  const auto d = dual_code(hamming_code(4, 2));
  const auto words = enumerate_codewords(d);
  EXPECT_EQ(words.size(), 16u);
  EXPECT_EQ(words.front(), std::vector<int>(5, 0));
  std::set<std::vector<int>> distinct(words.begin(), words.end());
  EXPECT_EQ(distinct.size(), 16u);
  for (const auto &p : kHamming) {
    const auto c = hamming_code(p.q, p.m);
    if (c.enumerable_size() == 0 || c.enumerable_size() > kEnumerationBound)
      continue;
    for (const auto &w : enumerate_codewords(c)) {
      const int wt = weight(w);
      EXPECT_TRUE(wt == 0 || wt >= 3);
    }
  }
}

TEST(Codes, DoubleDualIsIdentity) {
  for (const auto &p : kHamming) {
    const auto c = hamming_code(p.q, p.m);
    EXPECT_TRUE(same_code(dual_code(dual_code(c)), c));
    // The ternary [4,2] code is self-dual.
    EXPECT_EQ(same_code(dual_code(c), c), p.q == 3 && p.m == 2);
  }
}

TEST(Codes, RowReduceAndNullSpace) {
  const auto f = gf::Field::of_order(3);
  SymbolMatrix m = {{1, 2, 0}, {2, 1, 0}, {0, 0, 1}};
  std::vector<int> piv;
  const auto r = row_reduce(f, m, 3, &piv);
  EXPECT_EQ(r.size(), 2u);
  EXPECT_EQ(piv, (std::vector<int>{0, 2}));
  const auto ns = null_space(f, m, 3);
  ASSERT_EQ(ns.size(), 1u);
  for (const auto &row : m)
    EXPECT_EQ(dot(f, row, ns[0]), 0);
}

TEST(Codes, Errors) {
  const auto f = gf::Field::of_order(2);
  EXPECT_THROW(LinearCode(f, 3, {{1, 1, 0}, {1, 1, 0}}), std::invalid_argument);
  EXPECT_THROW(LinearCode(f, 3, {{1, 2, 0}}), std::invalid_argument);
  EXPECT_THROW(LinearCode(f, 3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(hamming_code(6, 2), std::invalid_argument);
  EXPECT_THROW(hamming_code(2, 1), std::invalid_argument);
  EXPECT_THROW(min_distance(LinearCode(f, 3, {})), std::domain_error);
}
