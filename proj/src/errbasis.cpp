/*******************************************************************************
 * Copyright (c) 2026 The qdec Authors.                                        *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include "qdec/errbasis.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qdec::errbasis {

namespace {
constexpr double kPhaseTolerance = 1e-9;
}

NiceErrorBasis::NiceErrorBasis(int d, groups::AbelianGroup group,
                               std::vector<Matrix> unitaries, std::string name)
    : d_(d), group_(std::move(group)), unitaries_(std::move(unitaries)),
      name_(std::move(name)) {
  if (d_ < 2)
    throw std::invalid_argument("basis dimension must be >= 2");
  if (group_.size() != d_ * d_)
    throw std::invalid_argument("index group must have order d^2");
  if (static_cast<int>(unitaries_.size()) != group_.size())
    throw std::invalid_argument("need one unitary per group element");
  for (const auto &u : unitaries_)
    if (u.rows() != d_ || u.cols() != d_)
      throw std::invalid_argument("unitary has wrong shape");
}

NiceErrorBasis pauli_basis() {
  using C = std::complex<double>;
  const C i{0, 1};
  std::vector<Matrix> u(4, Matrix::Zero(2, 2));
  u[kPauliI] << 1, 0, 0, 1;
  u[kPauliX] << 0, 1, 1, 0;
  u[kPauliY] << 0, -i, i, 0;
  u[kPauliZ] << 1, 0, 0, -1;
  return NiceErrorBasis(2, groups::AbelianGroup({2, 2}), std::move(u), "pauli");
}

NiceErrorBasis generalized_basis(int d) {
  if (d < 2)
    throw std::invalid_argument("generalized basis needs d >= 2");
  Matrix shift = Matrix::Zero(d, d);
  Matrix clock = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    shift(k, (k + 1) % d) = 1.0;
    clock(k, k) = groups::root_of_unity(k, d);
  }
  std::vector<Matrix> u;
  u.reserve(d * d);
  Matrix si = Matrix::Identity(d, d);
  for (int i = 0; i < d; ++i) {
    Matrix m = si;
    for (int j = 0; j < d; ++j) {
      u.push_back(m);
      m = m * clock;
    }
    si = si * shift;
  }
  return NiceErrorBasis(d, groups::AbelianGroup({d, d}), std::move(u),
                        "gen:" + std::to_string(d));
}

NiceErrorBasis basis_from_name(std::string_view name) {
  if (name == "pauli")
    return pauli_basis();
  if (name.substr(0, 4) == "gen:") {
    const std::string digits(name.substr(4));
    if (!digits.empty() && digits.size() <= 2 &&
        digits.find_first_not_of("0123456789") == std::string::npos) {
      const int d = std::stoi(digits);
      if (d >= 2)
        return generalized_basis(d);
    }
  }
  throw std::invalid_argument("unknown basis '" + std::string(name) +
                              "' (expected pauli or gen:<d>)");
}

std::complex<double> factor_system(const NiceErrorBasis &b, int g, int h) {
  const int gh = b.group().add(g, h);
  return (b.unitary(gh).adjoint() * b.unitary(g) * b.unitary(h)).trace() /
         static_cast<double>(b.dimension());
}

std::complex<double> conjugation_phase(const NiceErrorBasis &b, int g, int h) {
  const Matrix &ug = b.unitary(g);
  const Matrix &uh = b.unitary(h);
  const Matrix conj = ug.adjoint() * uh * ug;
  const std::complex<double> chi =
      (conj * uh.adjoint()).trace() / static_cast<double>(b.dimension());
  if ((conj - chi * uh).norm() > kPhaseTolerance)
    throw std::runtime_error("conjugation of U_" + std::to_string(h) +
                             " by U_" + std::to_string(g) +
                             " is not a phase multiple");
  return chi;
}

Matrix conjugation_phase_matrix(const NiceErrorBasis &b) {
  const int n = b.size();
  Matrix x(n, n);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      x(g, h) = conjugation_phase(b, g, h);
  return x;
}

BasisCheck check_nice_error_basis(const NiceErrorBasis &b, double tol) {
  const int n = b.size();
  const int d = b.dimension();
  const Matrix id = Matrix::Identity(d, d);
  auto fail = [](std::string msg) { return BasisCheck{false, std::move(msg)}; };
  if ((b.unitary(0) - id).norm() > tol)
    return fail("U_e is not the identity");
  for (int g = 0; g < n; ++g) {
    const Matrix &u = b.unitary(g);
    if ((u.adjoint() * u - id).norm() > tol)
      return fail("U_" + std::to_string(g) + " is not unitary");
    const std::complex<double> expected = g == 0 ? double(d) : 0.0;
    if (std::abs(u.trace() - expected) > tol)
      return fail("tr U_" + std::to_string(g) + " != d delta_{g,e}");
    for (int h = 0; h < n; ++h) {
      const std::complex<double> ip =
          (u.adjoint() * b.unitary(h)).trace() / static_cast<double>(d);
      if (std::abs(ip - (g == h ? 1.0 : 0.0)) > tol)
        return fail("<U_" + std::to_string(g) + "|U_" + std::to_string(h) +
                    "> has the wrong value");
      const auto alpha = factor_system(b, g, h);
      const Matrix prod = u * b.unitary(h);
      if (std::abs(std::abs(alpha) - 1.0) > tol ||
          (prod - alpha * b.unitary(b.group().add(g, h))).norm() > tol)
        return fail("U_" + std::to_string(g) + " U_" + std::to_string(h) +
                    " is not a phase times U_gh");
    }
  }
  return {};
}

CharacterTableMatch verify_character_table(const NiceErrorBasis &b) {
  const auto &grp = b.group();
  const int n = grp.size();
  const Matrix x = conjugation_phase_matrix(b);
  const groups::CharacterTable table(grp);
  CharacterTableMatch out;
  auto fail = [&](std::string msg) {
    out.ok = false;
    out.failure = std::move(msg);
    return out;
  };

  for (int g = 0; g < n; ++g)
    for (int g2 = 0; g2 < n; ++g2)
      for (int h = 0; h < n; ++h)
        if (std::abs(x(g, h) * x(g2, h) - x(grp.add(g, g2), h)) > kPhaseTolerance) {
          std::ostringstream os;
          os << "group law fails at g=" << g << " g'=" << g2 << " h=" << h;
          return fail(os.str());
        }

  out.automorphism.assign(n, -1);
  std::vector<bool> used(n, false);
  for (int g = 0; g < n; ++g) {
    for (int c = 0; c < n && out.automorphism[g] < 0; ++c) {
      bool match = true;
      for (int h = 0; h < n && match; ++h)
        match = std::abs(x(g, h) - table.value(c, h)) <= kPhaseTolerance;
      if (match)
        out.automorphism[g] = c;
    }
    if (out.automorphism[g] < 0)
      return fail("row " + std::to_string(g) + " matches no character");
    if (used[out.automorphism[g]])
      return fail("rows are not distinct (row " + std::to_string(g) + ")");
    used[out.automorphism[g]] = true;
  }
  for (int g = 0; g < n; ++g)
    for (int g2 = 0; g2 < n; ++g2)
      if (out.automorphism[grp.add(g, g2)] !=
          grp.add(out.automorphism[g], out.automorphism[g2]))
        return fail("row relabelling is not a homomorphism");
  out.ok = true;
  return out;
}

} // namespace qdec::errbasis
