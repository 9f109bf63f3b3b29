#pragma once

// Exact arithmetic in Z[q, q^-1] with arbitrary-precision integer
// coefficients, plus the balanced q-combinatorics built on top of it
// (quantum integers and Gaussian binomials).

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace qweb {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Sparse Laurent polynomial, canonical form: no zero coefficients stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c) { if (c != 0) terms_[0] = c; }  // NOLINT(implicit)
  LaurentPoly(const Int& c) { if (c != 0) terms_[0] = c; }

  static LaurentPoly monomial(const Int& c, int exp) {
    LaurentPoly p;
    if (c != 0) p.terms_[exp] = c;
    return p;
  }
  // q^k
  static LaurentPoly q(int k = 1) { return monomial(1, k); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 &&
           terms_.begin()->second == 1;
  }
  // Nonzero monomial +-c q^k?
  bool is_monomial() const { return terms_.size() == 1; }

  const std::map<int, Int>& terms() const { return terms_; }

  Int coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
  }

  int min_exp() const {
    if (is_zero()) throw std::logic_error("min_exp of zero polynomial");
    return terms_.begin()->first;
  }
  int max_exp() const {
    if (is_zero()) throw std::logic_error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
  }

  void add_term(int exp, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
      terms_.emplace(exp, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }
  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r;
    for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  // Multiply by q^k.
  LaurentPoly shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ < b.terms_;
  }

  // Canonical textual form, terms by ascending exponent: "q^-2 + 2 + q^2".
  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Int a = c;
      if (first) {
        if (a < 0) {
          os << "-";
          a = -a;
        }
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      if (e == 0) {
        os << a;
      } else {
        if (a != 1) os << a << "*";
        if (e == 1)
          os << "q";
        else
          os << "q^" << e;
      }
      first = false;
    }
    return os.str();
  }

 private:
  std::map<int, Int> terms_;
};

// q <-> q^-1 involution.
inline LaurentPoly bar(const LaurentPoly& p) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term(-e, c);
  return r;
}

// Balanced quantum integer [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}.
inline LaurentPoly qint(int n) {
  LaurentPoly r;
  if (n == 0) return r;
  int m = n < 0 ? -n : n;
  for (int e = m - 1; e >= 1 - m; e -= 2) r.add_term(e, n < 0 ? -1 : 1);
  return r;
}

// Balanced Gaussian binomial. Hard zero outside 0 <= k <= m (so zero for
// all m < 0); satisfies [m k] = q^k [m-1 k] + q^{k-m} [m-1 k-1].
inline LaurentPoly qbinom(int m, int k) {
  if (k < 0 || k > m || m < 0) return LaurentPoly();
  if (k == 0 || k == m) return LaurentPoly(1);
  // Build Pascal rows with the balanced recurrence.
  std::vector<LaurentPoly> row{LaurentPoly(1)};
  for (int r = 1; r <= m; ++r) {
    int top = std::min(r, k);
    std::vector<LaurentPoly> next(top + 1);
    next[0] = LaurentPoly(1);
    for (int j = 1; j <= top; ++j) {
      LaurentPoly v;
      if (j < static_cast<int>(row.size())) v += row[j].shifted(j);
      v += row[j - 1].shifted(j - r);
      next[j] = std::move(v);
    }
    row = std::move(next);
  }
  return row[k];
}

// Exact substitution q -> q0 (q0 != 0).
inline Rat eval_at(const LaurentPoly& p, const Rat& q0) {
  if (q0 == 0) throw std::invalid_argument("eval_at: q0 must be nonzero");
  Rat acc = 0;
  for (const auto& [e, c] : p.terms()) {
    Rat pw = 1;
    int m = e < 0 ? -e : e;
    for (int i = 0; i < m; ++i) pw *= q0;
    if (e < 0) pw = Rat(denominator(pw), numerator(pw));
    acc += Rat(c) * pw;
  }
  return acc;
}

// Exact division; nullopt when b does not divide a over Z[q, q^-1].
inline std::optional<LaurentPoly> divide_exact(const LaurentPoly& a,
                                               const LaurentPoly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return LaurentPoly();
  // Long division over Q on q-shifted representatives.
  int sa = a.min_exp(), sb = b.min_exp();
  std::map<int, Rat> rem;
  for (const auto& [e, c] : a.terms()) rem[e - sa] = Rat(c);
  int db = b.max_exp() - sb;
  Rat lead_b(b.terms().rbegin()->second);
  std::map<int, Rat> quot;
  while (!rem.empty()) {
    int dr = rem.rbegin()->first;
    if (dr < db) return std::nullopt;
    Rat f = rem.rbegin()->second / lead_b;
    quot[dr - db] = f;
    for (const auto& [e, c] : b.terms()) {
      int pos = dr - db + (e - sb);
      auto it = rem.find(pos);
      Rat v = (it == rem.end() ? Rat(0) : it->second) - f * Rat(c);
      if (v == 0) {
        if (it != rem.end()) rem.erase(it);
      } else {
        rem[pos] = v;
      }
    }
  }
  LaurentPoly q;
  for (const auto& [e, c] : quot) {
    if (denominator(c) != 1) return std::nullopt;
    q.add_term(e + sa - sb, numerator(c));
  }
  return q;
}

}  // namespace qweb
