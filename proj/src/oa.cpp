/*******************************************************************************
 * Copyright (c) 2026 The qdec Authors.                                        *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include "qdec/oa.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qdec::oa {

namespace {

// s^t, or -1 once it exceeds `cap`.
long long bounded_power(int s, int t, long long cap) {
  long long v = 1;
  for (int i = 0; i < t; ++i) {
    v *= s;
    if (v > cap)
      return -1;
  }
  return v;
}

} // namespace

OrthogonalArray::OrthogonalArray(int rows, int runs, int levels,
                                 std::vector<int> entries, int strength)
    : n_(rows), runs_(runs), s_(levels), entries_(std::move(entries)),
      t_(strength) {
  if (n_ < 1 || runs_ < 1 || s_ < 1)
    throw std::invalid_argument("array dimensions must be positive");
  if (entries_.size() != static_cast<std::size_t>(n_) * runs_)
    throw std::invalid_argument("entry count does not match n x N");
  for (int v : entries_)
    if (v < 0 || v >= s_)
      throw std::invalid_argument("entry " + std::to_string(v) +
                                  " outside alphabet of size " +
                                  std::to_string(s_));
  if (t_ < 0 || t_ > n_)
    throw std::invalid_argument("claimed strength must lie in [0, n]");
  const long long st = bounded_power(s_, t_, runs_);
  if (st < 0 || runs_ % st != 0)
    throw std::invalid_argument("N = " + std::to_string(runs_) +
                                " is not a multiple of s^t");
  lambda_ = runs_ / st;
}

OrthogonalArray OrthogonalArray::with_strength(int t) const {
  return OrthogonalArray(n_, runs_, s_, entries_, t);
}

OrthogonalArray OrthogonalArray::select_rows(std::span<const int> rows) const {
  std::vector<int> e;
  e.reserve(rows.size() * runs_);
  for (int k : rows) {
    if (k < 0 || k >= n_)
      throw std::out_of_range("row index out of range");
    const auto r = row(k);
    e.insert(e.end(), r.begin(), r.end());
  }
  const int n = static_cast<int>(rows.size());
  return OrthogonalArray(n, runs_, s_, std::move(e), std::min(t_, n));
}

int dual_distance(const codes::LinearCode &c) {
  const int n = c.length();
  const int k = c.dimension();
  if (k == n)
    return n + 1;
  const auto dual = codes::dual_code(c);
  if (dual.enumerable_size() != 0)
    return codes::min_distance(dual);
  // d(C^perp) is the size of the smallest dependent set of columns of G.
  const auto &f = c.field();
  const auto &g = c.generator();
  for (int w = 1; w <= k + 1; ++w) {
    bool dependent = false;
    for_each_subset(n, w, [&](std::span<const int> cols) {
      codes::SymbolMatrix m(w, std::vector<int>(k));
      for (int i = 0; i < w; ++i)
        for (int r = 0; r < k; ++r)
          m[i][r] = g[r][cols[i]];
      dependent = static_cast<int>(codes::row_reduce(f, m, k).size()) < w;
      return !dependent;
    });
    if (dependent)
      return w;
  }
  return k + 1;
}

OrthogonalArray oa_from_code(const codes::LinearCode &c) {
  if (c.dimension() == 0)
    throw std::invalid_argument("cannot build an array from the zero code");
  const int dd = dual_distance(c);
  if (dd < 2)
    throw std::invalid_argument("dual distance < 2 gives no strength");
  const auto words = codes::enumerate_codewords(c);
  const int n = c.length();
  const int runs = static_cast<int>(words.size());
  std::vector<int> e(static_cast<std::size_t>(n) * runs);
  for (int j = 0; j < runs; ++j)
    for (int i = 0; i < n; ++i)
      e[static_cast<std::size_t>(i) * runs + j] = words[j][i];
  return OrthogonalArray(n, runs, c.field().order(), std::move(e),
                         std::min(dd - 1, n));
}

OrthogonalArray full_factorial_oa(int n, int s) {
  if (n < 1 || s < 1)
    throw std::invalid_argument("full factorial needs n, s >= 1");
  const long long runs =
      bounded_power(s, n, static_cast<long long>(codes::kEnumerationBound));
  if (runs < 0)
    throw std::overflow_error("s^n exceeds the enumeration bound");
  std::vector<int> e(static_cast<std::size_t>(n) * runs);
  for (long long j = 0; j < runs; ++j) {
    long long rest = j;
    for (int i = n - 1; i >= 0; --i) {
      e[static_cast<std::size_t>(i) * runs + j] = static_cast<int>(rest % s);
      rest /= s;
    }
  }
  return OrthogonalArray(n, static_cast<int>(runs), s, std::move(e), n);
}

CountingResult verify_strength_counting(const OrthogonalArray &a, int t) {
  if (t < 0 || t > a.rows())
    throw std::invalid_argument("strength must lie in [0, n]");
  const long long runs = a.runs();
  const int s = a.levels();
  CountingResult out;
  if (t == 0) {
    out.ok = true;
    out.lambda = runs;
    return out;
  }
  const long long cells = bounded_power(s, t, runs);
  if (cells < 0) {
    // Fewer runs than tuples: every tuple count is wrong, the zero tuple
    // first among them.
    std::vector<int> rows(t);
    for (int i = 0; i < t; ++i)
      rows[i] = i;
    long long zeros = 0;
    for (int j = 0; j < a.runs(); ++j) {
      bool all = true;
      for (int i = 0; i < t && all; ++i)
        all = a.at(i, j) == 0;
      zeros += all;
    }
    out.witness = CountingWitness{rows, std::vector<int>(t, 0), zeros};
    return out;
  }

  std::vector<long long> tally(cells);
  for_each_subset(a.rows(), t, [&](std::span<const int> rows) {
    std::fill(tally.begin(), tally.end(), 0);
    for (int j = 0; j < a.runs(); ++j) {
      long long cell = 0;
      for (int r : rows)
        cell = cell * s + a.at(r, j);
      ++tally[cell];
    }
    for (long long cell = 0; cell < cells; ++cell) {
      if (tally[cell] * cells == runs)
        continue;
      std::vector<int> tuple(t);
      long long rest = cell;
      for (int i = t - 1; i >= 0; --i) {
        tuple[i] = static_cast<int>(rest % s);
        rest /= s;
      }
      out.witness = CountingWitness{std::vector<int>(rows.begin(), rows.end()),
                                    std::move(tuple), tally[cell]};
      return false;
    }
    return true;
  });
  if (!out.witness) {
    out.ok = true;
    out.lambda = runs / cells;
  }
  return out;
}

CharacterResult verify_strength_characters(const OrthogonalArray &a,
                                           const groups::AbelianGroup &g,
                                           int t) {
  if (g.size() != a.levels())
    throw std::invalid_argument("group order " + std::to_string(g.size()) +
                                " does not match alphabet size " +
                                std::to_string(a.levels()));
  if (t < 0 || t > a.rows())
    throw std::invalid_argument("strength must lie in [0, n]");
  const groups::CharacterTable table(g);
  const int e = g.exponent();
  const int s = g.size();
  CharacterResult out;
  std::vector<long long> tally(e);
  std::vector<int> phase(a.runs());

  for (int w = 1; w <= t && !out.witness; ++w) {
    for_each_subset(a.rows(), w, [&](std::span<const int> support) {
      // Nonidentity values 1..s-1 on each support row, lexicographic.
      std::vector<int> vals(w, 1);
      while (true) {
        std::fill(phase.begin(), phase.end(), 0);
        for (int i = 0; i < w; ++i)
          for (int j = 0; j < a.runs(); ++j)
            phase[j] = (phase[j] + table.exponent(vals[i], a.at(support[i], j))) % e;
        std::fill(tally.begin(), tally.end(), 0);
        for (int p : phase)
          ++tally[p];
        if (!groups::tally_vanishes(tally)) {
          std::vector<int> v(a.rows(), 0);
          for (int i = 0; i < w; ++i)
            v[support[i]] = vals[i];
          out.witness = CharacterWitness{std::move(v),
                                         groups::root_of_unity_sum(tally)};
          return false;
        }
        int i = w - 1;
        while (i >= 0 && vals[i] == s - 1)
          vals[i--] = 1;
        if (i < 0)
          break;
        ++vals[i];
      }
      return true;
    });
  }
  out.ok = !out.witness;
  return out;
}

} // namespace qdec::oa
