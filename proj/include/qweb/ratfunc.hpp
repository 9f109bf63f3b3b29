#pragma once

// Fraction field of Z[q, q^-1], used only for exact linear algebra.
// Normal form: denominator is a primitive polynomial in Z[q] with nonzero
// constant term and positive leading coefficient; gcd(num, den) is a unit.

#include "qweb/laurent.hpp"

namespace qweb {

namespace detail {

inline Int int_gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline Int content(const LaurentPoly& p) {
  Int g = 0;
  for (const auto& [e, c] : p.terms()) g = int_gcd(g, c);
  return g;
}

// Primitive part, with min exponent shifted to 0 and positive leading coeff.
inline LaurentPoly primitive_part(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  Int g = content(p);
  if (p.terms().rbegin()->second < 0) g = -g;
  LaurentPoly r;
  int s = p.min_exp();
  for (const auto& [e, c] : p.terms()) r.add_term(e - s, c / g);
  return r;
}

// gcd over Q[q] up to units, computed by a primitive remainder sequence.
// Inputs and output are primitive polynomials with constant term != 0.
inline LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  while (!b.is_zero()) {
    // Pseudo-remainder of a by b.
    int da = a.max_exp(), db = b.max_exp();
    if (da < db) {
      std::swap(a, b);
      std::swap(da, db);
    }
    Int lb = b.terms().rbegin()->second;
    LaurentPoly r = a;
    for (int d = da; d >= db; --d) {
      Int lc = r.coeff(d);
      if (lc == 0) continue;
      // r <- lb * r - lc * q^{d-db} * b
      LaurentPoly scaled;
      for (const auto& [e, c] : r.terms()) scaled.add_term(e, c * lb);
      for (const auto& [e, c] : b.terms())
        scaled.add_term(e + d - db, -c * lc);
      r = std::move(scaled);
    }
    a = b;
    b = primitive_part(r);
  }
  return primitive_part(a);
}

}  // namespace detail

class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(LaurentPoly n) : num_(std::move(n)), den_(1) {}  // NOLINT(implicit)
  RatFunc(long n) : num_(n), den_(1) {}                    // NOLINT(implicit)
  RatFunc(LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
    normalize();
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::invalid_argument("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  // Exact only when the denominator is a unit.
  std::optional<LaurentPoly> as_laurent() const {
    return divide_exact(num_, den_);
  }

  std::string str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = LaurentPoly(1);
      return;
    }
    // Fold q-powers of the denominator into the numerator.
    int sd = den_.min_exp();
    den_ = den_.shifted(-sd);
    num_ = num_.shifted(-sd);
    LaurentPoly g = detail::poly_gcd(num_, den_);
    if (!g.is_one()) {
      int sn = num_.min_exp();
      num_ = *divide_exact(num_.shifted(-sn), g);
      num_ = num_.shifted(sn);
      den_ = *divide_exact(den_, g);
    }
    Int cn = detail::content(num_);
    Int cd = detail::content(den_);
    Int c = detail::int_gcd(cn, cd);
    if (den_.terms().rbegin()->second < 0) c = -c;
    if (c != 1) {
      LaurentPoly n2, d2;
      for (const auto& [e, v] : num_.terms()) n2.add_term(e, v / c);
      for (const auto& [e, v] : den_.terms()) d2.add_term(e, v / c);
      num_ = std::move(n2);
      den_ = std::move(d2);
    }
    int sd2 = den_.min_exp();
    if (sd2 != 0) {
      den_ = den_.shifted(-sd2);
      num_ = num_.shifted(-sd2);
    }
  }

  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace qweb
