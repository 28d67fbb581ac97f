/*******************************************************************************
 * Copyright (c) 2026 The qdec Authors.                                        *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include "qdec/codes.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qdec::codes {

LinearCode::LinearCode(gf::Field field, int length, SymbolMatrix generator)
    : field_(std::move(field)), n_(length), generator_(std::move(generator)) {
  if (n_ < 1)
    throw std::invalid_argument("code length must be positive");
  if (static_cast<int>(generator_.size()) > n_)
    throw std::invalid_argument("code dimension exceeds length");
  for (const auto &row : generator_) {
    if (static_cast<int>(row.size()) != n_)
      throw std::invalid_argument("generator row length mismatch");
    for (int v : row)
      if (v < 0 || v >= field_.order())
        throw std::invalid_argument("generator entry " + std::to_string(v) +
                                    " is not an element of " + field_.name());
  }
  const auto reduced = row_reduce(field_, generator_, n_);
  if (reduced.size() != generator_.size())
    throw std::invalid_argument("generator rows are linearly dependent");
}

gf::Element LinearCode::entry(int row, int col) const {
  return field_.element(generator_.at(row).at(col));
}

std::uint64_t LinearCode::enumerable_size() const {
  std::uint64_t size = 1;
  for (int i = 0; i < dimension(); ++i) {
    size *= static_cast<std::uint64_t>(field_.order());
    if (size > kEnumerationBound)
      return 0;
  }
  return size;
}

SymbolMatrix row_reduce(const gf::Field &f, SymbolMatrix m, int cols,
                        std::vector<int> *pivots) {
  std::vector<int> piv;
  int r = 0;
  const int rows = static_cast<int>(m.size());
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0)
      continue;
    std::swap(m[r], m[sel]);
    const int scale = f.inv(m[r][c]);
    for (int j = 0; j < cols; ++j)
      m[r][j] = f.mul(m[r][j], scale);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0)
        continue;
      const int factor = m[i][c];
      for (int j = 0; j < cols; ++j)
        m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
    }
    piv.push_back(c);
    ++r;
  }
  m.resize(r);
  if (pivots)
    *pivots = std::move(piv);
  return m;
}

SymbolMatrix null_space(const gf::Field &f, const SymbolMatrix &m, int cols) {
  std::vector<int> pivots;
  const auto rref = row_reduce(f, m, cols, &pivots);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots)
    is_pivot[c] = true;
  SymbolMatrix basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free])
      continue;
    std::vector<int> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = f.neg(rref[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

SymbolMatrix hamming_parity_check(const gf::Field &f, int m) {
  const int q = f.order();
  long long total = 1;
  for (int i = 0; i < m; ++i)
    total *= q;
  // Walk GF(q)^m lexicographically (first coordinate most significant) and
  // keep vectors whose first nonzero coordinate is 1.
  std::vector<std::vector<int>> columns;
  std::vector<int> v(m, 0);
  for (long long idx = 0; idx < total; ++idx) {
    long long rest = idx;
    for (int i = m - 1; i >= 0; --i) {
      v[i] = static_cast<int>(rest % q);
      rest /= q;
    }
    int lead = 0;
    while (lead < m && v[lead] == 0)
      ++lead;
    if (lead < m && v[lead] == 1)
      columns.push_back(v);
  }
  SymbolMatrix h(m, std::vector<int>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (int r = 0; r < m; ++r)
      h[r][c] = columns[c][r];
  return h;
}

LinearCode hamming_code(int q, int m) {
  if (m < 2)
    throw std::invalid_argument("Hamming code needs m >= 2");
  const auto field = gf::Field::of_order(q);
  long long n = 1;
  long long power = 1;
  for (int i = 0; i < m; ++i) {
    power *= q;
    if (power > static_cast<long long>(kMaxLength) * (q - 1) + 1)
      throw std::overflow_error("Hamming code H(" + std::to_string(q) + "," +
                                std::to_string(m) + ") is too long");
  }
  n = (power - 1) / (q - 1);
  const auto h = hamming_parity_check(field, m);
  return LinearCode(field, static_cast<int>(n),
                    null_space(field, h, static_cast<int>(n)));
}

LinearCode dual_code(const LinearCode &c) {
  return LinearCode(c.field(), c.length(),
                    null_space(c.field(), c.generator(), c.length()));
}

namespace {

template <class Visit>
void for_each_codeword(const LinearCode &c, Visit &&visit) {
  const std::uint64_t size = c.enumerable_size();
  if (size == 0)
    throw std::overflow_error("code has more than 2^20 codewords");
  const auto &f = c.field();
  const int q = f.order();
  const int k = c.dimension();
  const int n = c.length();
  const auto &g = c.generator();
  std::vector<int> msg(k, 0);
  std::vector<int> word(n, 0);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    std::uint64_t rest = idx;
    for (int i = k - 1; i >= 0; --i) {
      msg[i] = static_cast<int>(rest % q);
      rest /= q;
    }
    std::fill(word.begin(), word.end(), 0);
    for (int i = 0; i < k; ++i) {
      if (msg[i] == 0)
        continue;
      for (int j = 0; j < n; ++j)
        word[j] = f.add(word[j], f.mul(msg[i], g[i][j]));
    }
    visit(word);
  }
}

} // namespace

std::vector<std::vector<int>> enumerate_codewords(const LinearCode &c) {
  std::vector<std::vector<int>> out;
  out.reserve(c.enumerable_size());
  for_each_codeword(c, [&](const std::vector<int> &w) { out.push_back(w); });
  return out;
}

int weight(std::span<const int> word) {
  int w = 0;
  for (int v : word)
    w += v != 0;
  return w;
}

int min_distance(const LinearCode &c) {
  if (c.dimension() == 0)
    throw std::domain_error("minimum distance of the zero code is undefined");
  int best = c.length() + 1;
  bool first = true;
  for_each_codeword(c, [&](const std::vector<int> &w) {
    if (first) {
      first = false;
      return;
    }
    best = std::min(best, weight(w));
  });
  return best;
}

bool same_code(const LinearCode &a, const LinearCode &b) {
  if (!(a.field() == b.field()) || a.length() != b.length() ||
      a.dimension() != b.dimension())
    return false;
  return row_reduce(a.field(), a.generator(), a.length()) ==
         row_reduce(b.field(), b.generator(), b.length());
}

} // namespace qdec::codes
