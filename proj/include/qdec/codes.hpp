/*******************************************************************************
 * Copyright (c) 2026 The qdec Authors.                                        *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qdec/gf.hpp"

namespace qdec::codes {

/// Row-major list of rows; entries are field-element indices.
using SymbolMatrix = std::vector<std::vector<int>>;

/// Largest code size q^k that enumeration will walk.
inline constexpr std::uint64_t kEnumerationBound = std::uint64_t{1} << 20;

/// Longest code hamming_code() will construct.
inline constexpr int kMaxLength = 512;

/// An [n, k]_q linear code given by a k x n generator matrix of full row rank.
class LinearCode {
public:
  /// Throws std::invalid_argument if a row has the wrong length, an entry is
  /// not a field index, or the rows are linearly dependent.
  LinearCode(gf::Field field, int length, SymbolMatrix generator);

  const gf::Field &field() const { return field_; }
  int length() const { return n_; }
  int dimension() const { return static_cast<int>(generator_.size()); }
  const SymbolMatrix &generator() const { return generator_; }
  gf::Element entry(int row, int col) const;

  /// q^k, or 0 when it exceeds kEnumerationBound.
  std::uint64_t enumerable_size() const;

private:
  gf::Field field_;
  int n_;
  SymbolMatrix generator_;
};

/// Reduced row echelon form; zero rows are dropped, so the result has
/// exactly rank(m) rows. `pivots` receives the pivot column of each row.
SymbolMatrix row_reduce(const gf::Field &field, SymbolMatrix m, int cols,
                        std::vector<int> *pivots = nullptr);

/// Basis of {x : m x^T = 0}, one vector per free column in ascending order.
SymbolMatrix null_space(const gf::Field &field, const SymbolMatrix &m, int cols);

/// Parity-check matrix of H_{q,m}: columns are the projective points of
/// GF(q)^m normalised to a leading 1, in lexicographic order.
SymbolMatrix hamming_parity_check(const gf::Field &field, int m);

/// The [(q^m-1)/(q-1), n-m, 3]_q Hamming code, generated by the null-space
/// basis of hamming_parity_check().
LinearCode hamming_code(int q, int m);

/// The [n, n-k] code of all vectors orthogonal to every codeword.
LinearCode dual_code(const LinearCode &c);

/// All q^k codewords in lexicographic message order (first message symbol
/// most significant). Throws std::overflow_error past kEnumerationBound.
std::vector<std::vector<int>> enumerate_codewords(const LinearCode &c);

/// Hamming weight of a symbol vector.
int weight(std::span<const int> word);

/// Minimum weight over nonzero codewords, by full enumeration. Throws
/// std::domain_error for the zero code.
int min_distance(const LinearCode &c);

/// True iff both codes have the same field, length, and row space.
bool same_code(const LinearCode &a, const LinearCode &b);

} // namespace qdec::codes
