/*******************************************************************************
 * Copyright (c) 2026 The qdec Authors.                                        *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#pragma once

#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qdec::groups {

/// Relative threshold below which a character sum counts as zero.
inline constexpr double kVanishingTolerance = 1e-9;

/// Finite abelian group Z_{n_1} x ... x Z_{n_r}.
///
/// Elements are indexed 0..|G|-1 in mixed radix with the first factor most
/// significant, so index 0 is the identity.
class AbelianGroup {
public:
  /// Throws std::invalid_argument for an empty list, a factor order < 2, or
  /// |G| > 4096.
  explicit AbelianGroup(std::vector<int> orders);

  /// Parses "Z2xZ2", "Z9", "Z3xZ3" (case-insensitive 'z', 'x' separators).
  static AbelianGroup parse(std::string_view spec);

  std::string to_string() const;
  const std::vector<int> &orders() const { return orders_; }
  int size() const { return size_; }
  /// lcm of the factor orders.
  int exponent() const { return exponent_; }

  std::vector<int> components(int index) const;
  int index_of(std::span<const int> components) const;

  int add(int a, int b) const;
  int neg(int a) const;
  int identity() const { return 0; }

  bool operator==(const AbelianGroup &other) const {
    return orders_ == other.orders_;
  }

private:
  void check(int a) const;

  std::vector<int> orders_;
  int size_ = 1;
  int exponent_ = 1;
  std::vector<int> add_;
  std::vector<int> neg_;
};

/// Exponent E with chi_g(h) = omega^E, omega = exp(2 pi i / e(G)):
/// sum_i g_i h_i (e(G) / n_i) mod e(G).
int character_exponent(const AbelianGroup &g, int a, int b);

/// Exact character table of an abelian group stored as exponents of the
/// primitive e(G)-th root of unity. Row g is the character chi_g.
class CharacterTable {
public:
  explicit CharacterTable(AbelianGroup group);

  const AbelianGroup &group() const { return group_; }
  int exponent(int g, int h) const { return exponents_[g * group_.size() + h]; }
  std::complex<double> value(int g, int h) const;

  /// The g whose row equals `row` exactly, or -1.
  int find_row(std::span<const int> row) const;

private:
  AbelianGroup group_;
  std::vector<int> exponents_;
};

/// omega^k for omega = exp(2 pi i / e), evaluated in extended precision.
std::complex<double> root_of_unity(long long k, int e);

/// sum_r tally[r] omega^r for omega = exp(2 pi i / tally.size()).
std::complex<double> root_of_unity_sum(std::span<const long long> tally);

/// True iff |sum_r tally[r] omega^r| <= kVanishingTolerance * sum_r |tally[r]|.
bool tally_vanishes(std::span<const long long> tally);

struct UniformityResult {
  bool uniform = false;
  /// chi_1(v) = sum of all weights.
  std::complex<double> mu;
  /// First g != e with chi_g(v) != 0 when not uniform.
  int failing_character = -1;
  std::complex<double> failing_value;
};

/// Decides whether v = sum_h mu_h h is a multiple of the sum of all group
/// elements by checking chi_g(v) = 0 for every nontrivial character.
/// `weights` is indexed by element; missing trailing entries count as 0.
UniformityResult is_uniform_group_ring_element(
    const AbelianGroup &g, std::span<const std::complex<double>> weights);

} // namespace qdec::groups
