/*******************************************************************************
 * Copyright (c) 2026 The qdec Authors.                                        *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include "qdec/groups.hpp"

#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qdec::groups {

AbelianGroup::AbelianGroup(std::vector<int> orders) : orders_(std::move(orders)) {
  if (orders_.empty())
    throw std::invalid_argument("abelian group needs at least one factor");
  for (int n : orders_) {
    if (n < 2)
      throw std::invalid_argument("cyclic factor order must be >= 2");
    size_ *= n;
    if (size_ > 4096)
      throw std::invalid_argument("group order exceeds 4096");
    exponent_ = std::lcm(exponent_, n);
  }
  add_.resize(static_cast<std::size_t>(size_) * size_);
  neg_.resize(size_);
  for (int a = 0; a < size_; ++a) {
    const auto ca = components(a);
    std::vector<int> c(ca.size());
    for (std::size_t i = 0; i < ca.size(); ++i)
      c[i] = (orders_[i] - ca[i]) % orders_[i];
    neg_[a] = index_of(c);
    for (int b = 0; b < size_; ++b) {
      const auto cb = components(b);
      for (std::size_t i = 0; i < ca.size(); ++i)
        c[i] = (ca[i] + cb[i]) % orders_[i];
      add_[a * size_ + b] = index_of(c);
    }
  }
}

AbelianGroup AbelianGroup::parse(std::string_view spec) {
  std::vector<int> orders;
  std::size_t i = 0;
  auto fail = [&] {
    throw std::invalid_argument("malformed group spec '" + std::string(spec) +
                                "' (expected e.g. Z2xZ2)");
  };
  while (i < spec.size()) {
    if (std::tolower(static_cast<unsigned char>(spec[i])) != 'z')
      fail();
    ++i;
    const std::size_t start = i;
    while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i])))
      ++i;
    if (i == start || i - start > 4)
      fail();
    orders.push_back(std::stoi(std::string(spec.substr(start, i - start))));
    if (i == spec.size())
      break;
    if (std::tolower(static_cast<unsigned char>(spec[i])) != 'x')
      fail();
    ++i;
    if (i == spec.size())
      fail();
  }
  if (orders.empty())
    fail();
  return AbelianGroup(std::move(orders));
}

std::string AbelianGroup::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i)
      os << 'x';
    os << 'Z' << orders_[i];
  }
  return os.str();
}

void AbelianGroup::check(int a) const {
  if (a < 0 || a >= size_)
    throw std::out_of_range("group element index " + std::to_string(a) +
                            " outside " + to_string());
}

std::vector<int> AbelianGroup::components(int index) const {
  check(index);
  std::vector<int> c(orders_.size());
  for (int i = static_cast<int>(orders_.size()) - 1; i >= 0; --i) {
    c[i] = index % orders_[i];
    index /= orders_[i];
  }
  return c;
}

int AbelianGroup::index_of(std::span<const int> c) const {
  if (c.size() != orders_.size())
    throw std::invalid_argument("component count mismatch");
  int idx = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 0 || c[i] >= orders_[i])
      throw std::out_of_range("group component out of range");
    idx = idx * orders_[i] + c[i];
  }
  return idx;
}

int AbelianGroup::add(int a, int b) const {
  check(a);
  check(b);
  return add_[a * size_ + b];
}

int AbelianGroup::neg(int a) const {
  check(a);
  return neg_[a];
}

int character_exponent(const AbelianGroup &g, int a, int b) {
  const auto ca = g.components(a);
  const auto cb = g.components(b);
  const int e = g.exponent();
  long long sum = 0;
  for (std::size_t i = 0; i < ca.size(); ++i)
    sum += static_cast<long long>(ca[i]) * cb[i] * (e / g.orders()[i]);
  return static_cast<int>(sum % e);
}

CharacterTable::CharacterTable(AbelianGroup group) : group_(std::move(group)) {
  const int n = group_.size();
  exponents_.resize(static_cast<std::size_t>(n) * n);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      exponents_[g * n + h] = character_exponent(group_, g, h);
}

std::complex<double> CharacterTable::value(int g, int h) const {
  return root_of_unity(exponent(g, h), group_.exponent());
}

int CharacterTable::find_row(std::span<const int> row) const {
  const int n = group_.size();
  if (static_cast<int>(row.size()) != n)
    return -1;
  // A character is fixed by its values, so a linear scan is unambiguous.
  for (int g = 0; g < n; ++g) {
    bool match = true;
    for (int h = 0; h < n && match; ++h)
      match = exponents_[g * n + h] == row[h];
    if (match)
      return g;
  }
  return -1;
}

std::complex<double> root_of_unity(long long k, int e) {
  const long long r = ((k % e) + e) % e;
  const long double angle = 2.0L * 3.141592653589793238462643383279502884L *
                            static_cast<long double>(r) / e;
  return {static_cast<double>(std::cos(angle)),
          static_cast<double>(std::sin(angle))};
}

std::complex<double> root_of_unity_sum(std::span<const long long> tally) {
  const int e = static_cast<int>(tally.size());
  long double re = 0;
  long double im = 0;
  for (int r = 0; r < e; ++r) {
    if (tally[r] == 0)
      continue;
    const long double angle =
        2.0L * 3.141592653589793238462643383279502884L * r / e;
    re += tally[r] * std::cos(angle);
    im += tally[r] * std::sin(angle);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

bool tally_vanishes(std::span<const long long> tally) {
  long long total = 0;
  for (long long c : tally)
    total += c < 0 ? -c : c;
  return std::abs(root_of_unity_sum(tally)) <=
         kVanishingTolerance * static_cast<double>(total);
}

UniformityResult is_uniform_group_ring_element(
    const AbelianGroup &g, std::span<const std::complex<double>> weights) {
  const int n = g.size();
  if (static_cast<int>(weights.size()) > n)
    throw std::invalid_argument("more weights than group elements");
  const CharacterTable table(g);
  auto weight = [&](int h) {
    return h < static_cast<int>(weights.size()) ? weights[h]
                                                : std::complex<double>{};
  };
  UniformityResult out;
  double scale = 0;
  for (int h = 0; h < n; ++h) {
    out.mu += weight(h);
    scale += std::abs(weight(h));
  }
  for (int c = 1; c < n; ++c) {
    std::complex<double> value;
    for (int h = 0; h < n; ++h)
      value += weight(h) * table.value(c, h);
    if (std::abs(value) > kVanishingTolerance * scale) {
      out.failing_character = c;
      out.failing_value = value;
      return out;
    }
  }
  out.uniform = true;
  return out;
}

} // namespace qdec::groups
