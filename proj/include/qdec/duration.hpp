/*******************************************************************************
 * Copyright (c) 2026 The qdec Authors.                                        *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace qdec::avgham {

/// Exact rational with int64 numerator and positive denominator, always in
/// lowest terms. Arithmetic throws std::overflow_error instead of wrapping.
class Rational {
public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  int sign() const { return (num_ > 0) - (num_ < 0); }
  double to_double() const { return static_cast<double>(num_) / den_; }
  std::string to_string() const;

  friend Rational operator+(const Rational &a, const Rational &b);
  friend Rational operator-(const Rational &a, const Rational &b);
  friend Rational operator-(const Rational &a);
  friend Rational operator*(const Rational &a, const Rational &b);
  friend Rational operator/(const Rational &a, const Rational &b);
  friend bool operator==(const Rational &a, const Rational &b) = default;
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

private:
  std::int64_t num_;
  std::int64_t den_;
};

/// A length a + b sqrt(2) with a, b rational. Signs and comparisons are
/// decided exactly.
class Duration {
public:
  Duration() = default;
  Duration(Rational a, Rational b = {}) : a_(a), b_(b) {}

  static Duration sqrt2() { return {Rational(0), Rational(1)}; }

  const Rational &rational_part() const { return a_; }
  const Rational &sqrt2_part() const { return b_; }

  /// -1, 0 or +1.
  int sign() const;
  double to_double() const;
  std::string to_string() const;

  friend Duration operator+(const Duration &x, const Duration &y);
  friend Duration operator-(const Duration &x, const Duration &y);
  friend Duration operator*(const Duration &x, const Duration &y);
  /// Throws std::domain_error on division by zero.
  friend Duration operator/(const Duration &x, const Duration &y);
  friend bool operator==(const Duration &x, const Duration &y) = default;
  friend std::strong_ordering operator<=>(const Duration &x, const Duration &y);

private:
  Rational a_;
  Rational b_;
};

/// True iff x / y is rational, i.e. (a_x, b_x) and (a_y, b_y) are
/// proportional over Q. Both must be nonzero.
bool commensurable(const Duration &x, const Duration &y);

} // namespace qdec::avgham
