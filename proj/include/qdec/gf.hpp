/*******************************************************************************
 * Copyright (c) 2026 The qdec Authors.                                        *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace qdec::gf {

class Element;

/// Finite field GF(p^m), q = p^m <= 64, in a fixed polynomial basis.
///
/// Elements are addressed by an index in [0, q): the coefficient vector
/// (c_0, ..., c_{m-1}) of c_0 + c_1 x + ... maps to sum_i c_i p^i, which is
/// lexicographic order on (c_{m-1}, ..., c_0). Index 0 is zero and index 1 is
/// one. This index doubles as the orthogonal-array symbol for the element.
///
/// A Field is a cheap handle onto immutable shared tables.
class Field {
public:
  /// Throws std::invalid_argument for non-prime p, m < 1, or an order
  /// outside the built-in modulus table.
  static Field create(int p, int m);

  /// Builds GF(q) for a supported prime power q.
  static Field of_order(int q);

  int characteristic() const;
  int degree() const;
  int order() const;

  /// Monic modulus, lowest degree coefficient first (size m + 1).
  const std::vector<int> &modulus() const;

  /// "GF(p^m)", or "GF(p)" for prime fields.
  std::string name() const;

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const;
  /// Throws std::domain_error for a == 0.
  int inv(int a) const;
  int div(int a, int b) const;
  int pow(int a, unsigned e) const;

  std::vector<int> coeffs(int index) const;
  int from_coeffs(std::span<const int> coeffs) const;

  Element element(int index) const;
  Element zero() const;
  Element one() const;
  /// All q elements by index; zero first, one second.
  std::vector<Element> enumerate() const;

  bool operator==(const Field &other) const;

private:
  struct Tables;
  explicit Field(std::shared_ptr<const Tables> tables);
  void check_index(int a) const;

  std::shared_ptr<const Tables> tables_;
};

class Element {
public:
  Element(Field field, int index);

  const Field &field() const { return field_; }
  int index() const { return index_; }
  std::vector<int> coeffs() const { return field_.coeffs(index_); }
  bool is_zero() const { return index_ == 0; }

  Element inv() const;
  Element pow(unsigned e) const;

  friend Element operator+(const Element &a, const Element &b);
  friend Element operator-(const Element &a, const Element &b);
  friend Element operator-(const Element &a);
  friend Element operator*(const Element &a, const Element &b);
  friend Element operator/(const Element &a, const Element &b);
  friend bool operator==(const Element &a, const Element &b);

private:
  Field field_;
  int index_;
};

std::string to_string(const Element &e);

/// True iff `poly` (lowest degree first, monic, degree >= 1) has no monic
/// factor of degree 1..deg/2 over GF(p).
bool is_irreducible(std::span<const int> poly, int p);

bool is_prime(int p);

} // namespace qdec::gf
