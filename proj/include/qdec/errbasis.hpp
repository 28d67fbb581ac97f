/*******************************************************************************
 * Copyright (c) 2026 The qdec Authors.                                        *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qdec/groups.hpp"

namespace qdec::errbasis {

using Matrix = Eigen::MatrixXcd;

/// Element indices of the Pauli basis over Z2 x Z2: (0,0) = 1, (0,1) = X,
/// (1,0) = Z, (1,1) = Y, so conjugation phases are (-1)^{ad - bc}.
inline constexpr int kPauliI = 0;
inline constexpr int kPauliX = 1;
inline constexpr int kPauliZ = 2;
inline constexpr int kPauliY = 3;

/// d^2 unitaries U_g on C^d labelled by an abelian index group G with
/// U_e = 1, tr U_g = d delta_{g,e} and U_g U_h = alpha(g,h) U_{gh}.
class NiceErrorBasis {
public:
  /// Only shape is validated here; use check_nice_error_basis() for the
  /// defining conditions.
  NiceErrorBasis(int d, groups::AbelianGroup group, std::vector<Matrix> unitaries,
                 std::string name);

  int dimension() const { return d_; }
  const groups::AbelianGroup &group() const { return group_; }
  int size() const { return group_.size(); }
  const Matrix &unitary(int g) const { return unitaries_.at(g); }
  /// "pauli" or "gen:<d>" for the built-in bases.
  const std::string &name() const { return name_; }

private:
  int d_;
  groups::AbelianGroup group_;
  std::vector<Matrix> unitaries_;
  std::string name_;
};

/// 1, sigma_x, sigma_y, sigma_z on Z2 x Z2 with the index map above.
NiceErrorBasis pauli_basis();

/// U_{(i,j)} = S^i T^j on Z_d x Z_d with S = sum_k |k><k+1| and
/// T = sum_k omega^k |k><k|; (i,j) has index i*d + j.
NiceErrorBasis generalized_basis(int d);

/// "pauli" or "gen:<d>". Throws std::invalid_argument otherwise.
NiceErrorBasis basis_from_name(std::string_view name);

/// alpha(g,h) = tr(U_{gh}^dagger U_g U_h) / d.
std::complex<double> factor_system(const NiceErrorBasis &b, int g, int h);

/// chi(g,h) defined by U_g^dagger U_h U_g = chi(g,h) U_h, read off as
/// tr(U_g^dagger U_h U_g U_h^dagger) / d. Throws std::runtime_error if the
/// conjugate is not a phase multiple of U_h (residual above 1e-9).
std::complex<double> conjugation_phase(const NiceErrorBasis &b, int g, int h);

/// The |G| x |G| matrix (chi(g,h)).
Matrix conjugation_phase_matrix(const NiceErrorBasis &b);

struct BasisCheck {
  bool ok = true;
  std::string failure;
};

/// Unitarity, U_e = 1, traces, pairwise orthogonality and closure up to
/// unit-modulus phases, all within `tol`.
BasisCheck check_nice_error_basis(const NiceErrorBasis &b, double tol = 1e-12);

struct CharacterTableMatch {
  bool ok = false;
  /// automorphism[g] = g' with chi(g, .) = chi_{g'} of the exact table.
  std::vector<int> automorphism;
  std::string failure;
};

/// Checks that the conjugation-phase matrix is the character table of the
/// index group up to relabelling rows by a group automorphism: rows obey
/// the group law, every row matches exactly one character (within 1e-9),
/// and the induced row map is a bijective homomorphism.
CharacterTableMatch verify_character_table(const NiceErrorBasis &b);

} // namespace qdec::errbasis
