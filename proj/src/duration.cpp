/*******************************************************************************
 * Copyright (c) 2026 The qdec Authors.                                        *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include "qdec/duration.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qdec::avgham {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide v) {
  if (v > INT64_MAX || v < -INT64_MAX)
    throw std::overflow_error("rational arithmetic overflow");
  return static_cast<std::int64_t>(v);
}

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0)
    a = -a;
  if (b < 0)
    b = -b;
  while (b != 0) {
    const Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make(Wide num, Wide den) {
  if (den == 0)
    throw std::domain_error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational(narrow(num), narrow(den));
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0)
    throw std::domain_error("zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::string Rational::to_string() const {
  if (den_ == 1)
    return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational &a, const Rational &b) {
  return make(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}
Rational operator-(const Rational &a, const Rational &b) { return a + (-b); }
Rational operator-(const Rational &a) { return Rational(-a.num_, a.den_); }
Rational operator*(const Rational &a, const Rational &b) {
  return make(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
}
Rational operator/(const Rational &a, const Rational &b) {
  if (b.num_ == 0)
    throw std::domain_error("division by zero");
  return make(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_);
}
std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
  return Wide(a.num_) * b.den_ <=> Wide(b.num_) * a.den_;
}

int Duration::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0)
    return sa;
  if (sa == 0 || sa == sb)
    return sb;
  // Opposite signs: the larger of a^2 and 2 b^2 wins; they never tie.
  return (a_ * a_ > Rational(2) * b_ * b_) ? sa : sb;
}

double Duration::to_double() const {
  return a_.to_double() + b_.to_double() * std::sqrt(2.0);
}

std::string Duration::to_string() const {
  if (b_.sign() == 0)
    return a_.to_string();
  std::string s = a_.sign() == 0 ? "" : a_.to_string() + (b_.sign() > 0 ? "+" : "");
  return s + b_.to_string() + "*sqrt2";
}

Duration operator+(const Duration &x, const Duration &y) {
  return {x.a_ + y.a_, x.b_ + y.b_};
}
Duration operator-(const Duration &x, const Duration &y) {
  return {x.a_ - y.a_, x.b_ - y.b_};
}
Duration operator*(const Duration &x, const Duration &y) {
  return {x.a_ * y.a_ + Rational(2) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
}
Duration operator/(const Duration &x, const Duration &y) {
  // Multiply through by the conjugate a - b sqrt2.
  const Rational norm = y.a_ * y.a_ - Rational(2) * y.b_ * y.b_;
  if (norm.sign() == 0)
    throw std::domain_error("division by a zero duration");
  const Duration conj{y.a_, -y.b_};
  const Duration top = x * conj;
  return {top.a_ / norm, top.b_ / norm};
}
std::strong_ordering operator<=>(const Duration &x, const Duration &y) {
  const int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less
               : s > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
}

bool commensurable(const Duration &x, const Duration &y) {
  if (x.sign() == 0 || y.sign() == 0)
    throw std::invalid_argument("commensurability of a zero duration");
  return x.rational_part() * y.sqrt2_part() == x.sqrt2_part() * y.rational_part();
}

} // namespace qdec::avgham
