#pragma once

// Dense matrices over Z[q, q^-1], sized for representation-theory blocks
// (dimensions stay below a few hundred).

#include <vector>

#include "qweb/laurent.hpp"

namespace qweb {

struct MatLP {
  int rows = 0;
  int cols = 0;
  std::vector<LaurentPoly> a;

  MatLP() = default;
  MatLP(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  static MatLP identity(int n) {
    MatLP m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = LaurentPoly(1);
    return m;
  }

  LaurentPoly& operator()(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const LaurentPoly& operator()(int r, int c) const {
    return a[static_cast<size_t>(r) * cols + c];
  }

  bool is_zero() const {
    for (const auto& x : a)
      if (!x.is_zero()) return false;
    return true;
  }

  MatLP transpose() const {
    MatLP t(cols, rows);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend MatLP operator*(const MatLP& x, const MatLP& y) {
    if (x.cols != y.rows) throw std::invalid_argument("MatLP: shape mismatch");
    MatLP z(x.rows, y.cols);
    for (int r = 0; r < x.rows; ++r)
      for (int k = 0; k < x.cols; ++k) {
        const LaurentPoly& v = x(r, k);
        if (v.is_zero()) continue;
        for (int c = 0; c < y.cols; ++c) {
          const LaurentPoly& w = y(k, c);
          if (!w.is_zero()) z(r, c) += v * w;
        }
      }
    return z;
  }

  friend MatLP operator+(const MatLP& x, const MatLP& y) {
    if (x.rows != y.rows || x.cols != y.cols)
      throw std::invalid_argument("MatLP: shape mismatch");
    MatLP z = x;
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
    return z;
  }

  friend MatLP operator-(const MatLP& x, const MatLP& y) {
    if (x.rows != y.rows || x.cols != y.cols)
      throw std::invalid_argument("MatLP: shape mismatch");
    MatLP z = x;
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
    return z;
  }

  friend MatLP operator*(const LaurentPoly& s, const MatLP& y) {
    MatLP z = y;
    for (auto& x : z.a) x = s * x;
    return z;
  }

  friend bool operator==(const MatLP& x, const MatLP& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }

  // Kronecker product, row-major index convention (left factor is the
  // slower-varying index).
  friend MatLP kron(const MatLP& x, const MatLP& y) {
    MatLP z(x.rows * y.rows, x.cols * y.cols);
    for (int rx = 0; rx < x.rows; ++rx)
      for (int cx = 0; cx < x.cols; ++cx) {
        const LaurentPoly& v = x(rx, cx);
        if (v.is_zero()) continue;
        for (int ry = 0; ry < y.rows; ++ry)
          for (int cy = 0; cy < y.cols; ++cy) {
            const LaurentPoly& w = y(ry, cy);
            if (!w.is_zero()) z(rx * y.rows + ry, cx * y.cols + cy) = v * w;
          }
      }
    return z;
  }
};

// Inverse of a monomial matrix (exactly one +-q^k entry per row/column).
inline MatLP invert_monomial(const MatLP& m) {
  if (m.rows != m.cols) throw std::invalid_argument("invert_monomial: not square");
  MatLP inv(m.rows, m.cols);
  std::vector<bool> used(m.cols, false);
  for (int r = 0; r < m.rows; ++r) {
    int hit = -1;
    for (int c = 0; c < m.cols; ++c) {
      if (m(r, c).is_zero()) continue;
      if (hit >= 0 || !m(r, c).is_monomial())
        throw std::invalid_argument("invert_monomial: not monomial");
      hit = c;
    }
    if (hit < 0 || used[hit])
      throw std::invalid_argument("invert_monomial: singular");
    used[hit] = true;
    const auto& term = *m(r, hit).terms().begin();
    if (term.second != 1 && term.second != -1)
      throw std::invalid_argument("invert_monomial: non-unit coefficient");
    inv(hit, r) = LaurentPoly::monomial(term.second, -term.first);
  }
  return inv;
}

}  // namespace qweb
