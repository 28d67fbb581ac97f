/*******************************************************************************
 * Copyright (c) 2026 The qdec Authors.                                        *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qdec/codes.hpp"
#include "qdec/groups.hpp"

namespace qdec::oa {

/// An n x N array over the symbols {0, ..., s-1} together with a claimed
/// strength t and index lambda = N / s^t. Rows are nodes, columns are runs
/// (time slots). A claim of strength 0 is always valid and has lambda = N.
class OrthogonalArray {
public:
  /// Throws std::invalid_argument when dimensions disagree, an entry is out
  /// of range, t > n, or s^t does not divide N.
  OrthogonalArray(int rows, int runs, int levels, std::vector<int> entries,
                  int strength = 0);

  int rows() const { return n_; }
  int runs() const { return runs_; }
  int levels() const { return s_; }
  int strength() const { return t_; }
  long long index() const { return lambda_; }

  int at(int row, int col) const { return entries_[row * runs_ + col]; }
  std::span<const int> row(int k) const {
    return {entries_.data() + static_cast<std::size_t>(k) * runs_,
            static_cast<std::size_t>(runs_)};
  }
  const std::vector<int> &entries() const { return entries_; }

  OrthogonalArray with_strength(int t) const;
  /// Sub-array on the given rows, in the given order. The claim is capped at
  /// the new row count.
  OrthogonalArray select_rows(std::span<const int> rows) const;

  bool operator==(const OrthogonalArray &) const = default;

private:
  int n_;
  int runs_;
  int s_;
  std::vector<int> entries_;
  int t_;
  long long lambda_;
};

/// Columns are the codewords of `c` in enumeration order; symbols are field
/// indices. The claimed strength is d(C^perp) - 1. Throws
/// std::invalid_argument for the zero code or dual distance < 2.
OrthogonalArray oa_from_code(const codes::LinearCode &c);

/// Minimum distance of the dual code. Uses enumeration of C^perp when it is
/// small enough and otherwise the smallest linearly dependent set of
/// generator columns. Returns n + 1 when C is the full space.
int dual_distance(const codes::LinearCode &c);

/// The n x s^n array of all tuples, first row most significant; strength n.
OrthogonalArray full_factorial_oa(int n, int s);

struct CountingWitness {
  std::vector<int> rows;
  std::vector<int> tuple;
  long long count = 0;
};

struct CountingResult {
  bool ok = false;
  long long lambda = 0;
  std::optional<CountingWitness> witness;
};

/// Tallies every t-subset of rows. On failure the witness is the first
/// subset (lexicographic) and first tuple in it whose count differs from
/// N / s^t.
CountingResult verify_strength_counting(const OrthogonalArray &a, int t);

struct CharacterWitness {
  /// Element of G^n labelling the character of G^n that fails.
  std::vector<int> v;
  std::complex<double> sum;
};

struct CharacterResult {
  bool ok = false;
  std::optional<CharacterWitness> witness;
};

/// Character criterion: for every v in G^n with 1 <= wt(v) <= t,
///   sum_j prod_i chi_{v_i}(A_ij) = 0,
/// i.e. every nontrivial character of G^t supported on at most t rows sums
/// to zero over the columns. Entries are read as group elements by index.
/// v is scanned by weight, then support, then values, all lexicographic.
/// Throws std::invalid_argument if |G| != s or t > n.
CharacterResult verify_strength_characters(const OrthogonalArray &a,
                                           const groups::AbelianGroup &g,
                                           int t);

/// Calls visit(subset) for every k-subset of {0..n-1} in lexicographic
/// order; stops early when visit returns false.
template <class Visit> bool for_each_subset(int n, int k, Visit &&visit) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i)
    idx[i] = i;
  if (k > n)
    return true;
  while (true) {
    if (!visit(std::span<const int>(idx)))
      return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i)
      --i;
    if (i < 0)
      return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j)
      idx[j] = idx[j - 1] + 1;
  }
}

} // namespace qdec::oa
