/*******************************************************************************
 * Copyright (c) 2026 The qdec Authors.                                        *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "qdec/codes.hpp"
#include "qdec/oa.hpp"
#include "support.hpp"

using namespace qdec;
using namespace qdec::oa;

namespace {

// Brute-force strength test: every t rows, every tuple, equal counts.
bool reference_is_oa(const OrthogonalArray &a, int t) {
  if (t == 0)
    return true;
  bool ok = true;
  for_each_subset(a.rows(), t, [&](std::span<const int> rows) {
    std::map<std::vector<int>, long long> count;
    for (int j = 0; j < a.runs(); ++j) {
      std::vector<int> key;
      for (int r : rows)
        key.push_back(a.at(r, j));
      ++count[key];
    }
    long long tuples = 1;
    for (int i = 0; i < t; ++i)
      tuples *= a.levels();
    if (static_cast<long long>(count.size()) != tuples)
      ok = false;
    for (const auto &[k, c] : count)
      if (c != count.begin()->second)
        ok = false;
    return ok;
  });
  return ok;
}

OrthogonalArray random_matrix(std::mt19937 &rng, int n, int runs, int s) {
  std::uniform_int_distribution<int> sym(0, s - 1);
  std::vector<int> e(static_cast<std::size_t>(n) * runs);
  for (auto &v : e)
    v = sym(rng);
  return OrthogonalArray(n, runs, s, std::move(e));
}

// Relabels symbols per row and shuffles columns; strength is preserved.
OrthogonalArray scramble(const OrthogonalArray &a, std::mt19937 &rng) {
  std::vector<int> cols(a.runs());
  std::iota(cols.begin(), cols.end(), 0);
  std::shuffle(cols.begin(), cols.end(), rng);
  std::vector<int> e;
  for (int k = 0; k < a.rows(); ++k) {
    std::vector<int> perm(a.levels());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int j : cols)
      e.push_back(perm[a.at(k, j)]);
  }
  return OrthogonalArray(a.rows(), a.runs(), a.levels(), std::move(e),
                         a.strength());
}

groups::AbelianGroup cyclic(int s) { return groups::AbelianGroup({s}); }

} // namespace

TEST(OrthogonalArray, ConstructorValidates) {
  EXPECT_THROW(OrthogonalArray(2, 2, 2, {0, 1, 1}), std::invalid_argument);
  EXPECT_THROW(OrthogonalArray(2, 2, 2, {0, 1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(OrthogonalArray(2, 6, 2, std::vector<int>(12, 0), 2),
               std::invalid_argument);
  EXPECT_THROW(OrthogonalArray(1, 2, 2, {0, 1}, 2), std::invalid_argument);
  const OrthogonalArray a(2, 4, 2, {0, 0, 1, 1, 0, 1, 0, 1}, 2);
  EXPECT_EQ(a.index(), 1);
  EXPECT_EQ(a.with_strength(1).index(), 2);
}

TEST(OrthogonalArray, FromDualHammingGf4) {
  const auto a = oa_from_code(codes::dual_code(codes::hamming_code(4, 2)));
  EXPECT_EQ(a.runs(), 16);
  EXPECT_EQ(a.rows(), 5);
  EXPECT_EQ(a.levels(), 4);
  EXPECT_EQ(a.strength(), 2);
  EXPECT_EQ(a.index(), 1);
  EXPECT_TRUE(reference_is_oa(a, 2));
  EXPECT_FALSE(reference_is_oa(a, 3));
}

TEST(OrthogonalArray, FromDualHammingGf9) {
  const auto a = oa_from_code(codes::dual_code(codes::hamming_code(9, 2)));
  EXPECT_EQ(a.runs(), 81);
  EXPECT_EQ(a.rows(), 10);
  EXPECT_EQ(a.levels(), 9);
  EXPECT_EQ(a.strength(), 2);
  EXPECT_TRUE(verify_strength_counting(a, 2).ok);
}

TEST(OrthogonalArray, FromSimplexCodeBinary) {
  const auto a = oa_from_code(codes::dual_code(codes::hamming_code(2, 3)));
  EXPECT_EQ(a.runs(), 8);
  EXPECT_EQ(a.rows(), 7);
  EXPECT_EQ(a.strength(), 2);
  EXPECT_EQ(a.index(), 2);
  EXPECT_TRUE(reference_is_oa(a, 2));
  EXPECT_FALSE(reference_is_oa(a, 3));
}

TEST(OrthogonalArray, FromRepetitionCode) {
  const auto f = gf::Field::of_order(2);
  const auto a = oa_from_code(codes::LinearCode(f, 2, {{1, 1}}));
  EXPECT_EQ(a, OrthogonalArray(2, 2, 2, {0, 1, 0, 1}, 1));
  EXPECT_EQ(a.index(), 1);
}

TEST(OrthogonalArray, FromCodeRejectsDegenerate) {
  const auto f = gf::Field::of_order(2);
  EXPECT_THROW(oa_from_code(codes::LinearCode(f, 3, {})), std::invalid_argument);
  // A zero coordinate gives dual distance 1.
  EXPECT_THROW(oa_from_code(codes::LinearCode(f, 2, {{1, 0}})),
               std::invalid_argument);
}

TEST(OrthogonalArray, DualDistanceWithoutEnumeratingTheDual) {
  // H_{9,2} has 9^8 words, so the dual distance of its dual comes from the
  // column search.
  EXPECT_EQ(dual_distance(codes::dual_code(codes::hamming_code(9, 2))), 3);
  EXPECT_EQ(dual_distance(codes::hamming_code(9, 2)), 9);
  EXPECT_EQ(dual_distance(codes::hamming_code(4, 3)), 16);
  EXPECT_EQ(dual_distance(codes::dual_code(codes::hamming_code(4, 3))), 3);
  EXPECT_EQ(dual_distance(codes::hamming_code(2, 3)), 4);
}

TEST(OrthogonalArray, FullFactorial) {
  const auto a = full_factorial_oa(3, 4);
  EXPECT_EQ(a.runs(), 64);
  EXPECT_EQ(a.rows(), 3);
  EXPECT_EQ(a.strength(), 3);
  EXPECT_EQ(a.index(), 1);
  EXPECT_TRUE(reference_is_oa(a, 3));
  EXPECT_EQ(a.at(0, 16), 1);
  EXPECT_EQ(a.at(2, 1), 1);
}

TEST(OrthogonalArray, ReferenceArrayCounting) {
  const auto a = test::reference_oa();
  const auto r = verify_strength_counting(a, 2);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.lambda, 1);
  const auto bad = verify_strength_counting(a, 3);
  EXPECT_FALSE(bad.ok);
  ASSERT_TRUE(bad.witness);
  EXPECT_EQ(bad.witness->rows, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(bad.witness->tuple, (std::vector<int>{0, 0, 0}));
}

TEST(OrthogonalArray, ReferenceArrayCharacters) {
  const auto a = test::reference_oa();
  const auto z22 = groups::AbelianGroup::parse("Z2xZ2");
  EXPECT_TRUE(verify_strength_characters(a, z22, 2).ok);
  EXPECT_TRUE(verify_strength_characters(a, cyclic(4), 2).ok);
  const auto r = verify_strength_characters(a, z22, 3);
  EXPECT_FALSE(r.ok);
  ASSERT_TRUE(r.witness);
  int wt = 0;
  for (int v : r.witness->v)
    wt += v != 0;
  EXPECT_EQ(wt, 3);
}

TEST(OrthogonalArray, CountingWitnessIsFirstViolation) {
  // Rows (0,1) fine, row 2 unbalanced: first failing subset is (0,2).
  const OrthogonalArray a(3, 4, 2, {0, 0, 1, 1, 0, 1, 0, 1, 0, 0, 0, 1});
  const auto r = verify_strength_counting(a, 2);
  ASSERT_FALSE(r.ok);
  EXPECT_EQ(r.witness->rows, (std::vector<int>{0, 2}));
  EXPECT_EQ(r.witness->tuple, (std::vector<int>{0, 0}));
  EXPECT_EQ(r.witness->count, 2);
}

TEST(OrthogonalArray, NonOaTwoByFourOverZ2) {
  const OrthogonalArray a(2, 4, 2, {0, 0, 1, 1, 0, 0, 1, 1});
  const auto c = verify_strength_characters(a, cyclic(2), 2);
  EXPECT_FALSE(c.ok);
  ASSERT_TRUE(c.witness);
  EXPECT_EQ(c.witness->v, (std::vector<int>{1, 1}));
  EXPECT_NEAR(c.witness->sum.real(), 4.0, 1e-12);
  EXPECT_FALSE(verify_strength_counting(a, 2).ok);
  EXPECT_TRUE(verify_strength_counting(a, 1).ok);
}

TEST(OrthogonalArray, VerifiersAgreeOnRandomMatrices) {
  std::mt19937 rng(2024);
  int positives = 0;
  const std::vector<OrthogonalArray> seeds = {
      full_factorial_oa(2, 2), full_factorial_oa(3, 2), full_factorial_oa(2, 3),
      full_factorial_oa(2, 4), test::reference_oa().select_rows(std::vector{0, 1, 2, 3})};
  for (int trial = 0; trial < 150; ++trial) {
    OrthogonalArray a = [&] {
      if (trial % 3 == 0)
        return scramble(seeds[trial / 3 % seeds.size()], rng);
      std::uniform_int_distribution<int> pn(1, 4), ps(2, 4);
      const int s = ps(rng);
      const int runs = s * s * (1 + trial % 2);
      return random_matrix(rng, pn(rng), std::min(runs, 32), s);
    }();
    std::vector<groups::AbelianGroup> gs = {cyclic(a.levels())};
    if (a.levels() == 4)
      gs.push_back(groups::AbelianGroup::parse("Z2xZ2"));
    for (int t = 1; t <= a.rows(); ++t) {
      const bool want = reference_is_oa(a, t);
      positives += want;
      EXPECT_EQ(verify_strength_counting(a, t).ok, want) << trial << " t=" << t;
      for (const auto &g : gs)
        EXPECT_EQ(verify_strength_characters(a, g, t).ok, want)
            << trial << " t=" << t << " " << g.to_string();
    }
  }
  EXPECT_GT(positives, 20);
}

TEST(OrthogonalArray, RowSubarraysKeepStrength) {
  const auto a = oa_from_code(codes::dual_code(codes::hamming_code(3, 3)));
  ASSERT_EQ(a.strength(), 2);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> rows(a.rows());
    std::iota(rows.begin(), rows.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng);
    rows.resize(2 + trial % (a.rows() - 1));
    const auto sub = a.select_rows(rows);
    EXPECT_EQ(sub.strength(), 2);
    EXPECT_TRUE(verify_strength_counting(sub, 2).ok);
  }
}

TEST(OrthogonalArray, CodeArraysMeetTheirClaim) {
  const std::pair<int, int> qm[] = {{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3},
                                    {4, 2}, {5, 2}, {7, 2}, {8, 2}};
  for (auto [q, m] : qm) {
    for (bool dual : {false, true}) {
      auto c = codes::hamming_code(q, m);
      if (dual)
        c = codes::dual_code(c);
      if (c.enumerable_size() == 0 || c.enumerable_size() > 70000)
        continue;
      const auto a = oa_from_code(c);
      const auto r = verify_strength_counting(a, a.strength());
      EXPECT_TRUE(r.ok) << q << "," << m << " dual=" << dual;
      EXPECT_EQ(r.lambda, a.index());
    }
  }
}

TEST(OrthogonalArray, Subsets) {
  std::vector<std::vector<int>> seen;
  for_each_subset(4, 2, [&](std::span<const int> s) {
    seen.emplace_back(s.begin(), s.end());
    return true;
  });
  EXPECT_EQ(seen, (std::vector<std::vector<int>>{
                      {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
}
