/*******************************************************************************
 * Copyright (c) 2026 The qdec Authors.                                        *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qdec/groups.hpp"
#include "qdec/oa.hpp"

namespace qdec::phasemat {

/// Raised when a family is not closed under the Schur product.
class SchurError : public std::invalid_argument {
public:
  SchurError(const std::string &what, int row, int col)
      : std::invalid_argument(what), row(row), col(col) {}
  int row;
  int col;
};

/// One n x N phase matrix per element h of an abelian group G, stored as
/// exponents of omega = exp(2 pi i / e(G)): P_h[k,j] = omega^{E_h[k,j]}.
///
/// Construction enforces P_e = all-ones and P_g o P_h = P_{gh}
/// (entrywise exponent addition mod e(G)).
class PhaseMatrixFamily {
public:
  /// `exponents[h]` is the row-major n x N exponent matrix of P_h. Entries
  /// are reduced mod e(G). Throws SchurError on an incompatible family and
  /// std::invalid_argument on shape errors.
  PhaseMatrixFamily(groups::AbelianGroup group, int rows, int runs,
                    std::vector<std::vector<int>> exponents);

  const groups::AbelianGroup &group() const { return group_; }
  int rows() const { return n_; }
  int runs() const { return runs_; }
  int exponent(int h, int k, int j) const {
    return exponents_[h][static_cast<std::size_t>(k) * runs_ + j];
  }
  const std::vector<int> &matrix(int h) const { return exponents_.at(h); }
  std::complex<double> value(int h, int k, int j) const;

  bool operator==(const PhaseMatrixFamily &other) const {
    return group_ == other.group_ && n_ == other.n_ && runs_ == other.runs_ &&
           exponents_ == other.exponents_;
  }

private:
  groups::AbelianGroup group_;
  int n_;
  int runs_;
  std::vector<std::vector<int>> exponents_;
};

/// An n x N matrix with entries +1 / -1, row-major.
struct SignMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<int> entries;
  int at(int k, int j) const { return entries[static_cast<std::size_t>(k) * cols + j]; }
};

struct SignMatrixTriple {
  SignMatrix x;
  SignMatrix y;
  SignMatrix z;
};

/// P_h[k,j] = chi_{m_kj}(h): each symbol is replaced by its row of the
/// character table of G. Throws std::invalid_argument if |G| != s.
PhaseMatrixFamily family_from_oa(const oa::OrthogonalArray &a,
                                 const groups::AbelianGroup &g);

struct DecouplingWitness {
  int k = 0;
  /// -1 for a failing row sum (local terms).
  int l = -1;
  int h = 0;
  int h2 = -1;
  std::complex<double> sum;
};

struct DecouplingResult {
  bool ok = false;
  std::optional<DecouplingWitness> witness;
};

/// Row sums sum_j P_h[k,j] = 0 for all k and h != e, then cross sums
/// sum_j P_h[k,j] P_h'[l,j] = 0 for all k < l and h, h' != e. Each sum is
/// an exact exponent tally tested against 1e-9 * N. Row sums are scanned
/// first; the first failure in scan order is reported.
DecouplingResult check_decoupling_conditions(const PhaseMatrixFamily &f);

/// Row-major n x N matrix of the g with v_{k,j} = chi_g, by exact exponent
/// comparison. Throws std::invalid_argument if some v_{k,j} is not a
/// character row.
std::vector<int> symbols_from_family(const PhaseMatrixFamily &f);

/// Orthogonal array of strength min(2, n) read off a family that passes
/// check_decoupling_conditions(). Throws std::invalid_argument if it does
/// not, or if a column vector is not a character.
oa::OrthogonalArray oa_from_family(const PhaseMatrixFamily &f);

/// Z2 x Z2 family with P_x, P_y, P_z taken from the triple, using the
/// Pauli element labels of errbasis. Throws SchurError (with the first
/// offending entry) unless S_x o S_y = S_z.
PhaseMatrixFamily import_sign_triple(const SignMatrixTriple &t);

/// Inverse of import_sign_triple() for a Z2 x Z2 family.
SignMatrixTriple export_sign_triple(const PhaseMatrixFamily &f);

} // namespace qdec::phasemat
