/*******************************************************************************
 * Copyright (c) 2026 The qdec Authors.                                        *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include "qdec/gf.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qdec::gf {

namespace {

// Moduli for the non-prime orders, lowest degree coefficient first.
const std::map<int, std::vector<int>> kModulusTable = {
    {4, {1, 1, 1}},             // x^2 + x + 1
    {8, {1, 1, 0, 1}},          // x^3 + x + 1
    {9, {1, 0, 1}},             // x^2 + 1
    {16, {1, 1, 0, 0, 1}},      // x^4 + x + 1
    {25, {1, 1, 1}},            // x^2 + x + 1
    {27, {1, 2, 0, 1}},         // x^3 + 2x + 1
    {32, {1, 0, 1, 0, 0, 1}},   // x^5 + x^2 + 1
    {49, {3, 1, 1}},            // x^2 + x + 3
    {64, {1, 1, 0, 0, 0, 0, 1}} // x^6 + x + 1
};

constexpr int kMaxOrder = 64;

using Poly = std::vector<int>;

void trim(Poly &a) {
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

// Remainder of a modulo a monic b over GF(p).
Poly poly_mod(Poly a, const Poly &b, int p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly &a, const Poly &b, int p) {
  if (a.empty() || b.empty())
    return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return c;
}

} // namespace

bool is_prime(int p) {
  if (p < 2)
    return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

bool is_irreducible(std::span<const int> poly, int p) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2 || f.back() != 1)
    return false;
  const int deg = static_cast<int>(f.size()) - 1;
  // Every monic polynomial of degree k is x^k plus one of p^k lower parts.
  for (int k = 1; 2 * k <= deg; ++k) {
    int count = 1;
    for (int i = 0; i < k; ++i)
      count *= p;
    for (int lower = 0; lower < count; ++lower) {
      Poly g(k + 1, 0);
      int rest = lower;
      for (int i = 0; i < k; ++i) {
        g[i] = rest % p;
        rest /= p;
      }
      g[k] = 1;
      if (poly_mod(f, g, p).empty())
        return false;
    }
  }
  return true;
}

struct Field::Tables {
  int p = 0;
  int m = 0;
  int q = 0;
  Poly modulus;
  std::vector<int> add;
  std::vector<int> mul;
  std::vector<int> neg;
  std::vector<int> inv;
};

Field::Field(std::shared_ptr<const Tables> tables)
    : tables_(std::move(tables)) {}

Field Field::create(int p, int m) {
  if (!is_prime(p))
    throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                " is not prime");
  if (m < 1)
    throw std::invalid_argument("field degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxOrder)
      throw std::invalid_argument("field order " + std::to_string(p) + "^" +
                                  std::to_string(m) +
                                  " exceeds the supported maximum 64");
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->m = m;
  t->q = static_cast<int>(q);
  if (m == 1) {
    t->modulus = {0, 1};
  } else {
    auto it = kModulusTable.find(t->q);
    if (it == kModulusTable.end())
      throw std::invalid_argument("unsupported field order " +
                                  std::to_string(q));
    t->modulus = it->second;
  }
  if (!is_irreducible(t->modulus, p))
    throw std::logic_error("modulus for GF(" + std::to_string(q) +
                           ") is reducible");

  const int qq = t->q;
  auto to_poly = [&](int idx) {
    Poly c(m, 0);
    for (int i = 0; i < m; ++i) {
      c[i] = idx % p;
      idx /= p;
    }
    return c;
  };
  auto from_poly = [&](const Poly &c) {
    int idx = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
      idx = idx * p + c[i];
    return idx;
  };

  t->add.assign(qq * qq, 0);
  t->mul.assign(qq * qq, 0);
  t->neg.assign(qq, 0);
  t->inv.assign(qq, 0);
  for (int a = 0; a < qq; ++a) {
    const Poly pa = to_poly(a);
    Poly na(m);
    for (int i = 0; i < m; ++i)
      na[i] = (p - pa[i]) % p;
    t->neg[a] = from_poly(na);
    for (int b = 0; b < qq; ++b) {
      const Poly pb = to_poly(b);
      Poly s(m);
      for (int i = 0; i < m; ++i)
        s[i] = (pa[i] + pb[i]) % p;
      t->add[a * qq + b] = from_poly(s);
      t->mul[a * qq + b] = from_poly(poly_mod(poly_mul(pa, pb, p), t->modulus, p));
    }
  }
  for (int a = 1; a < qq; ++a)
    for (int b = 1; b < qq; ++b)
      if (t->mul[a * qq + b] == 1) {
        t->inv[a] = b;
        break;
      }
  return Field(std::move(t));
}

Field Field::of_order(int q) {
  for (int p = 2; p <= q; ++p) {
    if (!is_prime(p) || q % p != 0)
      continue;
    int m = 0;
    int rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++m;
    }
    if (rest != 1)
      break;
    return create(p, m);
  }
  throw std::invalid_argument(std::to_string(q) + " is not a prime power");
}

int Field::characteristic() const { return tables_->p; }
int Field::degree() const { return tables_->m; }
int Field::order() const { return tables_->q; }
const std::vector<int> &Field::modulus() const { return tables_->modulus; }

std::string Field::name() const {
  std::ostringstream os;
  os << "GF(" << tables_->p;
  if (tables_->m > 1)
    os << '^' << tables_->m;
  os << ')';
  return os.str();
}

void Field::check_index(int a) const {
  if (a < 0 || a >= tables_->q)
    throw std::out_of_range("element index " + std::to_string(a) +
                            " outside " + name());
}

int Field::add(int a, int b) const {
  check_index(a);
  check_index(b);
  return tables_->add[a * tables_->q + b];
}

int Field::neg(int a) const {
  check_index(a);
  return tables_->neg[a];
}

int Field::sub(int a, int b) const { return add(a, neg(b)); }

int Field::mul(int a, int b) const {
  check_index(a);
  check_index(b);
  return tables_->mul[a * tables_->q + b];
}

int Field::inv(int a) const {
  check_index(a);
  if (a == 0)
    throw std::domain_error("inversion of zero in " + name());
  return tables_->inv[a];
}

int Field::div(int a, int b) const { return mul(a, inv(b)); }

int Field::pow(int a, unsigned e) const {
  int result = 1;
  int base = a;
  check_index(a);
  while (e) {
    if (e & 1u)
      result = mul(result, base);
    base = mul(base, base);
    e >>= 1u;
  }
  return result;
}

std::vector<int> Field::coeffs(int index) const {
  check_index(index);
  std::vector<int> c(tables_->m);
  for (int i = 0; i < tables_->m; ++i) {
    c[i] = index % tables_->p;
    index /= tables_->p;
  }
  return c;
}

int Field::from_coeffs(std::span<const int> c) const {
  if (static_cast<int>(c.size()) != tables_->m)
    throw std::invalid_argument("coefficient vector length mismatch");
  int idx = 0;
  for (int i = tables_->m - 1; i >= 0; --i) {
    if (c[i] < 0 || c[i] >= tables_->p)
      throw std::out_of_range("coefficient outside [0, p)");
    idx = idx * tables_->p + c[i];
  }
  return idx;
}

Element Field::element(int index) const {
  check_index(index);
  return Element(*this, index);
}

Element Field::zero() const { return Element(*this, 0); }
Element Field::one() const { return Element(*this, 1); }

std::vector<Element> Field::enumerate() const {
  std::vector<Element> out;
  out.reserve(tables_->q);
  for (int i = 0; i < tables_->q; ++i)
    out.emplace_back(*this, i);
  return out;
}

bool Field::operator==(const Field &other) const {
  return tables_ == other.tables_ ||
         (tables_->p == other.tables_->p && tables_->m == other.tables_->m);
}

Element::Element(Field field, int index)
    : field_(std::move(field)), index_(index) {}

namespace {
void require_same(const Element &a, const Element &b) {
  if (!(a.field() == b.field()))
    throw std::invalid_argument("field mismatch: " + a.field().name() +
                                " vs " + b.field().name());
}
} // namespace

Element Element::inv() const { return {field_, field_.inv(index_)}; }
Element Element::pow(unsigned e) const { return {field_, field_.pow(index_, e)}; }

Element operator+(const Element &a, const Element &b) {
  require_same(a, b);
  return {a.field_, a.field_.add(a.index_, b.index_)};
}
Element operator-(const Element &a, const Element &b) {
  require_same(a, b);
  return {a.field_, a.field_.sub(a.index_, b.index_)};
}
Element operator-(const Element &a) { return {a.field_, a.field_.neg(a.index_)}; }
Element operator*(const Element &a, const Element &b) {
  require_same(a, b);
  return {a.field_, a.field_.mul(a.index_, b.index_)};
}
Element operator/(const Element &a, const Element &b) {
  require_same(a, b);
  return {a.field_, a.field_.div(a.index_, b.index_)};
}
bool operator==(const Element &a, const Element &b) {
  return a.field_ == b.field_ && a.index_ == b.index_;
}

std::string to_string(const Element &e) {
  const auto c = e.coeffs();
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    if (c[i] == 0)
      continue;
    if (!first)
      os << " + ";
    first = false;
    if (i == 0 || c[i] != 1)
      os << c[i];
    if (i >= 1)
      os << 'x';
    if (i >= 2)
      os << '^' << i;
  }
  if (first)
    os << '0';
  return os.str();
}

} // namespace qdec::gf
