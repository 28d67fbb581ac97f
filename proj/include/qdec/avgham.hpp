/*******************************************************************************
 * Copyright (c) 2026 The qdec Authors.                                        *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qdec/duration.hpp"
#include "qdec/errbasis.hpp"
#include "qdec/oa.hpp"
#include "qdec/phasemat.hpp"

namespace qdec::avgham {

using Matrix = Eigen::MatrixXcd;

/// Largest Hilbert-space dimension d^n handled with dense matrices.
inline constexpr int kMaxDenseDimension = 256;

/// A product of nonidentity basis elements on strictly increasing nodes:
/// U_{elements[0]} on nodes[0] (x) U_{elements[1]} on nodes[1] (x) ...
struct Term {
  std::vector<int> nodes;
  std::vector<int> elements;
  bool operator==(const Term &) const = default;
};

std::string to_string(const Term &t);

/// Every term on 1..t nodes, ordered by support size, then node tuple,
/// then element tuple (all lexicographic).
std::vector<Term> basis_terms(int nodes, int basis_size, int t);

using TermFilter = std::function<bool(const Term &)>;

/// Kronecker product a (x) b.
Matrix kron(const Matrix &a, const Matrix &b);

/// The term as an operator on (C^d)^{(x) n}; node 0 is the leftmost factor.
Matrix embed(const errbasis::NiceErrorBasis &b, int nodes, const Term &t);

struct Coefficient {
  Term term;
  std::complex<double> value;
};

/// A t-local Hamiltonian expanded in a nice error basis. The dense form is
/// the Hermitian part (M + M^dagger) / 2 of M = sum J_term term.
class Hamiltonian {
public:
  Hamiltonian(errbasis::NiceErrorBasis basis, int nodes, int locality,
              std::vector<Coefficient> coefficients);

  const errbasis::NiceErrorBasis &basis() const { return basis_; }
  int nodes() const { return n_; }
  int dimension() const { return basis_.dimension(); }
  int locality() const { return t_; }
  const std::vector<Coefficient> &coefficients() const { return coeffs_; }

  Matrix dense() const;

private:
  errbasis::NiceErrorBasis basis_;
  int n_;
  int t_;
  std::vector<Coefficient> coeffs_;
};

/// Fills every term of basis_terms(n, d^2, t) accepted by `filter` with a
/// coefficient whose real and imaginary parts are uniform in [-1, 1], drawn
/// from a 64-bit Mersenne twister seeded with `seed`. Throws
/// std::overflow_error if d^n > kMaxDenseDimension.
Hamiltonian random_tlocal_hamiltonian(const errbasis::NiceErrorBasis &b,
                                      int nodes, int t, std::uint64_t seed,
                                      const TermFilter &filter = {});

struct Slot {
  Duration duration;
  /// Basis element applied to each node during the slot.
  std::vector<int> assignment;
};

/// A timed sequence of local basis elements. Slot weights are
/// p_j = duration_j / tau with tau the total duration.
class PulseSchedule {
public:
  /// Throws std::invalid_argument on a non-positive duration, a wrong
  /// assignment length, or an element outside the basis.
  PulseSchedule(errbasis::NiceErrorBasis basis, int nodes,
                std::vector<Slot> slots);

  const errbasis::NiceErrorBasis &basis() const { return basis_; }
  int nodes() const { return n_; }
  int dimension() const { return basis_.dimension(); }
  const std::vector<Slot> &slots() const { return slots_; }
  int size() const { return static_cast<int>(slots_.size()); }

  Duration total_duration() const { return total_; }
  Duration weight(int j) const { return slots_.at(j).duration / total_; }

  bool operator==(const PulseSchedule &other) const;

private:
  errbasis::NiceErrorBasis basis_;
  int n_;
  std::vector<Slot> slots_;
  Duration total_;
};

/// V_j = (x)_k U_{m_kj}.
Matrix slot_unitary(const PulseSchedule &s, int j);

/// sum_j p_j V_j^dagger H V_j.
Matrix average_hamiltonian(const Matrix &h, const PulseSchedule &s);
Matrix average_hamiltonian(const Hamiltonian &h, const PulseSchedule &s);

/// One slot of length 1/N per column; column entries are basis elements.
/// Throws std::invalid_argument if s != d^2.
PulseSchedule schedule_from_oa(const oa::OrthogonalArray &a,
                               const errbasis::NiceErrorBasis &b);

/// schedule_from_oa() with row `l` replaced by row `k` (0-based). The
/// average keeps U_h (x) U_h' on (k, l) exactly when hh' = e and removes
/// everything else that the array decouples.
PulseSchedule selective_coupling_schedule(const oa::OrthogonalArray &a,
                                          const errbasis::NiceErrorBasis &b,
                                          int k, int l);

/// Regular schedule whose slot-j element on node k is the g with
/// conjugation phases chi(g, h) = P_h[k, j] for every h. Throws
/// std::invalid_argument if no basis element produces a column.
PulseSchedule schedule_from_family(const phasemat::PhaseMatrixFamily &f,
                                   const errbasis::NiceErrorBasis &b);

struct Segment {
  int element;
  Duration length;
};

/// Overlays per-node timelines of equal total length. Slot boundaries are
/// the union of every node's breakpoints.
PulseSchedule merge_timelines(const errbasis::NiceErrorBasis &b,
                              const std::vector<std::vector<Segment>> &rows);

/// Three-qubit Pauli decoupling scheme with slot lengths t1, t2 = t1/4,
/// t3 = t2/sqrt2 and t4 = t2 - t3 (t1 = 1/4, so tau = 1). No refinement
/// into equal slots exists since t3/t2 is irrational.
PulseSchedule nonregular_schedule();

/// The four basic lengths t1..t4 used by nonregular_schedule().
std::array<Duration, 4> nonregular_lengths();

/// True iff every slot length is a rational multiple of the first one.
bool is_refinable_regular(const PulseSchedule &s);

/// For a schedule with N equal slots: N^2 slots of length tau/N^2 where
/// node 0 holds U_j for a block of N slots while node 1 runs through all
/// of its N elements; other nodes keep their block's element. Throws
/// std::invalid_argument for unequal slots or fewer than two nodes.
PulseSchedule refine_two_nodes(const PulseSchedule &s);

/// Total time each basis element is applied to `node`.
std::vector<Duration> symbol_times(const PulseSchedule &s, int node);

/// Total time of each element pair (a, b) on nodes (k, l); index a*|G| + b.
std::vector<Duration> pair_times(const PulseSchedule &s, int k, int l);

/// sum_j p_j (x)_{i in support} U_{m_ij}^dagger U_{h_i} U_{m_ij}, i.e. the
/// averaged term restricted to its support (d^s x d^s). Identity factors
/// elsewhere are left implicit.
Matrix term_average(const PulseSchedule &s, const Term &t);

/// (x)_{i in support} U_{h_i}.
Matrix term_operator(const errbasis::NiceErrorBasis &b, const Term &t);

struct ExhaustiveReport {
  bool pass = false;
  double max_residual = 0;
  std::size_t terms_checked = 0;
  /// First term whose relative residual exceeds the tolerance.
  std::optional<Term> witness;
  double witness_residual = 0;
};

/// ||avg(term)||_F / ||term||_F <= tol for every term on up to t nodes that
/// `filter` accepts. By linearity this certifies decoupling of every such
/// Hamiltonian.
ExhaustiveReport exhaustive_term_check(const PulseSchedule &s, int t,
                                       double tol,
                                       const TermFilter &filter = {});

struct DecouplingReport {
  bool pass = false;
  int t = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  double tol = 0;
  double max_residual = 0;
  std::vector<double> residuals;
  ExhaustiveReport exhaustive;
};

/// Draws `trials` random t-local Hamiltonians (seeded), records
/// ||Hbar||_F / ||H||_F for each, and runs exhaustive_term_check(). Passes
/// iff both certificates stay within `tol`. Random trials need d^n <=
/// kMaxDenseDimension; the exhaustive check does not.
DecouplingReport verify_decoupling(const PulseSchedule &s, int t, int trials,
                                   std::uint64_t seed, double tol,
                                   const TermFilter &filter = {});

/// Selective coupling contract on nodes (k, l): a term U_h (x) U_h' on
/// exactly {k, l} with hh' = e must come back unchanged, every other term
/// on up to t nodes must vanish. Residuals are relative Frobenius norms.
ExhaustiveReport verify_selective_coupling(const PulseSchedule &s, int k,
                                           int l, int t, double tol);

/// Random-trial form of the selective contract: each trial records
/// ||Hbar - H_kept||_F / ||H||_F where H_kept holds only the preserved
/// terms of H. The exhaustive part is verify_selective_coupling().
DecouplingReport verify_selective_decoupling(const PulseSchedule &s, int k,
                                             int l, int t, int trials,
                                             std::uint64_t seed, double tol);

} // namespace qdec::avgham
