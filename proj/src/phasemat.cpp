/*******************************************************************************
 * Copyright (c) 2026 The qdec Authors.                                        *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include "qdec/phasemat.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "qdec/errbasis.hpp"

namespace qdec::phasemat {

PhaseMatrixFamily::PhaseMatrixFamily(groups::AbelianGroup group, int rows,
                                     int runs,
                                     std::vector<std::vector<int>> exponents)
    : group_(std::move(group)), n_(rows), runs_(runs),
      exponents_(std::move(exponents)) {
  if (n_ < 1 || runs_ < 1)
    throw std::invalid_argument("family dimensions must be positive");
  const int size = group_.size();
  const int e = group_.exponent();
  if (static_cast<int>(exponents_.size()) != size)
    throw std::invalid_argument("need one phase matrix per group element");
  const std::size_t cells = static_cast<std::size_t>(n_) * runs_;
  for (auto &m : exponents_) {
    if (m.size() != cells)
      throw std::invalid_argument("phase matrix has wrong size");
    for (int &v : m)
      v = ((v % e) + e) % e;
  }
  for (std::size_t c = 0; c < cells; ++c)
    if (exponents_[0][c] != 0)
      throw SchurError("phase matrix of the identity is not all-ones",
                       static_cast<int>(c / runs_), static_cast<int>(c % runs_));
  for (int g = 1; g < size; ++g)
    for (int h = g; h < size; ++h) {
      const auto &pg = exponents_[g];
      const auto &ph = exponents_[h];
      const auto &pgh = exponents_[group_.add(g, h)];
      for (std::size_t c = 0; c < cells; ++c)
        if ((pg[c] + ph[c]) % e != pgh[c])
          throw SchurError("P_" + std::to_string(g) + " o P_" +
                               std::to_string(h) + " != P_" +
                               std::to_string(group_.add(g, h)) + " at (" +
                               std::to_string(c / runs_) + "," +
                               std::to_string(c % runs_) + ")",
                           static_cast<int>(c / runs_),
                           static_cast<int>(c % runs_));
    }
}

std::complex<double> PhaseMatrixFamily::value(int h, int k, int j) const {
  return groups::root_of_unity(exponent(h, k, j), group_.exponent());
}

PhaseMatrixFamily family_from_oa(const oa::OrthogonalArray &a,
                                 const groups::AbelianGroup &g) {
  if (a.levels() != g.size())
    throw std::invalid_argument("alphabet size " + std::to_string(a.levels()) +
                                " does not match group order " +
                                std::to_string(g.size()));
  const groups::CharacterTable table(g);
  std::vector<std::vector<int>> exps(g.size(),
                                     std::vector<int>(a.entries().size()));
  for (int h = 0; h < g.size(); ++h)
    for (std::size_t c = 0; c < a.entries().size(); ++c)
      exps[h][c] = table.exponent(a.entries()[c], h);
  return PhaseMatrixFamily(g, a.rows(), a.runs(), std::move(exps));
}

DecouplingResult check_decoupling_conditions(const PhaseMatrixFamily &f) {
  const int size = f.group().size();
  const int e = f.group().exponent();
  std::vector<long long> tally(e);
  DecouplingResult out;

  for (int k = 0; k < f.rows(); ++k)
    for (int h = 1; h < size; ++h) {
      std::fill(tally.begin(), tally.end(), 0);
      for (int j = 0; j < f.runs(); ++j)
        ++tally[f.exponent(h, k, j)];
      if (!groups::tally_vanishes(tally)) {
        out.witness = DecouplingWitness{k, -1, h, -1,
                                        groups::root_of_unity_sum(tally)};
        return out;
      }
    }

  for (int k = 0; k < f.rows(); ++k)
    for (int l = k + 1; l < f.rows(); ++l)
      for (int h = 1; h < size; ++h)
        for (int h2 = 1; h2 < size; ++h2) {
          std::fill(tally.begin(), tally.end(), 0);
          for (int j = 0; j < f.runs(); ++j)
            ++tally[(f.exponent(h, k, j) + f.exponent(h2, l, j)) % e];
          if (!groups::tally_vanishes(tally)) {
            out.witness = DecouplingWitness{k, l, h, h2,
                                            groups::root_of_unity_sum(tally)};
            return out;
          }
        }
  out.ok = true;
  return out;
}

std::vector<int> symbols_from_family(const PhaseMatrixFamily &f) {
  const groups::CharacterTable table(f.group());
  const int size = f.group().size();
  std::map<std::vector<int>, int> lookup;
  for (int g = 0; g < size; ++g) {
    std::vector<int> row(size);
    for (int h = 0; h < size; ++h)
      row[h] = table.exponent(g, h);
    lookup.emplace(std::move(row), g);
  }
  std::vector<int> symbols(static_cast<std::size_t>(f.rows()) * f.runs());
  std::vector<int> v(size);
  for (int k = 0; k < f.rows(); ++k)
    for (int j = 0; j < f.runs(); ++j) {
      for (int h = 0; h < size; ++h)
        v[h] = f.exponent(h, k, j);
      auto it = lookup.find(v);
      if (it == lookup.end())
        throw std::invalid_argument("column vector at (" + std::to_string(k) +
                                    "," + std::to_string(j) +
                                    ") is not a character of " +
                                    f.group().to_string());
      symbols[static_cast<std::size_t>(k) * f.runs() + j] = it->second;
    }
  return symbols;
}

oa::OrthogonalArray oa_from_family(const PhaseMatrixFamily &f) {
  auto symbols = symbols_from_family(f);
  const auto check = check_decoupling_conditions(f);
  if (!check.ok)
    throw std::invalid_argument("family violates the decoupling conditions");
  return oa::OrthogonalArray(f.rows(), f.runs(), f.group().size(),
                             std::move(symbols), std::min(2, f.rows()));
}

namespace {

void check_sign_matrix(const SignMatrix &m, int rows, int cols, char label) {
  if (m.rows != rows || m.cols != cols ||
      m.entries.size() != static_cast<std::size_t>(rows) * cols)
    throw std::invalid_argument(std::string("S_") + label +
                                " has mismatched shape");
  for (int v : m.entries)
    if (v != 1 && v != -1)
      throw std::invalid_argument(std::string("S_") + label +
                                  " has an entry other than +-1");
}

} // namespace

PhaseMatrixFamily import_sign_triple(const SignMatrixTriple &t) {
  const int rows = t.x.rows;
  const int cols = t.x.cols;
  check_sign_matrix(t.x, rows, cols, 'x');
  check_sign_matrix(t.y, rows, cols, 'y');
  check_sign_matrix(t.z, rows, cols, 'z');
  for (int k = 0; k < rows; ++k)
    for (int j = 0; j < cols; ++j)
      if (t.x.at(k, j) * t.y.at(k, j) != t.z.at(k, j))
        throw SchurError("S_x o S_y != S_z at (" + std::to_string(k) + "," +
                             std::to_string(j) + ")",
                         k, j);
  const std::size_t cells = static_cast<std::size_t>(rows) * cols;
  std::vector<std::vector<int>> exps(4, std::vector<int>(cells, 0));
  for (std::size_t c = 0; c < cells; ++c) {
    exps[errbasis::kPauliX][c] = t.x.entries[c] < 0;
    exps[errbasis::kPauliY][c] = t.y.entries[c] < 0;
    exps[errbasis::kPauliZ][c] = t.z.entries[c] < 0;
  }
  return PhaseMatrixFamily(groups::AbelianGroup({2, 2}), rows, cols,
                           std::move(exps));
}

SignMatrixTriple export_sign_triple(const PhaseMatrixFamily &f) {
  if (!(f.group() == groups::AbelianGroup({2, 2})))
    throw std::invalid_argument("sign triples need the group Z2xZ2");
  auto make = [&](int h) {
    SignMatrix m{f.rows(), f.runs(), std::vector<int>(f.matrix(h).size())};
    for (std::size_t c = 0; c < m.entries.size(); ++c)
      m.entries[c] = f.matrix(h)[c] ? -1 : 1;
    return m;
  };
  return {make(errbasis::kPauliX), make(errbasis::kPauliY),
          make(errbasis::kPauliZ)};
}

} // namespace qdec::phasemat
