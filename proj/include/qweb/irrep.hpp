#pragma once

// Fundamental U_q(sl_n) irreps in the Gel'fand-Tsetlin basis, built by the
// branching recursion V_a^n = V_{a-1}^{n-1} (+) V_a^{n-1}. The first block
// is the i_{-1} image, the second the i_0 image, at every level.

#include <map>

#include "qweb/matrix.hpp"

namespace qweb {

enum class Gen { Xp, Xm, K, Kinv };

struct Irrep {
  int n = 0;
  int a = 0;
  int dim = 0;
  int bm = 0;  // dim of the V_{a-1}^{n-1} block (0 if absent)
  int b0 = 0;  // dim of the V_a^{n-1} block (0 if absent)
  // generators X_i^+, X_i^-, K_i, K_i^{-1}; index 0 is the paper's i = 1
  std::vector<MatLP> xp, xm, k, kinv;
  MatLP tau, tau_inv;  // K^rho = prod_j K_j^{j(n-j)}

  bool has_im() const { return bm > 0; }
  bool has_iz() const { return b0 > 0; }

  // inclusion of / projection onto the two branching blocks
  MatLP im() const {
    MatLP m(dim, bm);
    for (int i = 0; i < bm; ++i) m(i, i) = LaurentPoly(1);
    return m;
  }
  MatLP iz() const {
    MatLP m(dim, b0);
    for (int i = 0; i < b0; ++i) m(bm + i, i) = LaurentPoly(1);
    return m;
  }
  MatLP pm() const { return im().transpose(); }
  MatLP p0() const { return iz().transpose(); }

  const MatLP& gen(Gen g, int i) const {
    switch (g) {
      case Gen::Xp: return xp[i];
      case Gen::Xm: return xm[i];
      case Gen::K: return k[i];
      default: return kinv[i];
    }
  }
};

namespace detail {

inline MatLP block_diag(const MatLP& x, const MatLP& y) {
  MatLP z(x.rows + y.rows, x.cols + y.cols);
  for (int r = 0; r < x.rows; ++r)
    for (int c = 0; c < x.cols; ++c) z(r, c) = x(r, c);
  for (int r = 0; r < y.rows; ++r)
    for (int c = 0; c < y.cols; ++c) z(x.rows + r, x.cols + c) = y(r, c);
  return z;
}

inline long binom_long(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

// Builds and caches every fundamental irrep of u_q(sl_n) for n up to the
// requested bound. Immutable after construction.
class IrrepTower {
 public:
  explicit IrrepTower(int max_n) {
    for (int n = 0; n <= max_n; ++n)
      for (int a = 0; a <= n; ++a) build(n, a);
  }

  const Irrep& at(int n, int a) const {
    auto it = reps_.find({n, a});
    if (it == reps_.end()) throw std::out_of_range("IrrepTower: irrep not built");
    return it->second;
  }

 private:
  void build(int n, int a) {
    Irrep r;
    r.n = n;
    r.a = a;
    if (a == 0 || a == n) {
      r.dim = 1;
      r.bm = a == n ? 1 : 0;
      r.b0 = a == 0 ? 1 : 0;
      if (n == 0) {
        r.bm = r.b0 = 0;  // nothing below level 0
      }
      for (int i = 0; i + 1 < n; ++i) {
        r.xp.push_back(MatLP(1, 1));
        r.xm.push_back(MatLP(1, 1));
        r.k.push_back(MatLP::identity(1));
        r.kinv.push_back(MatLP::identity(1));
      }
    } else {
      const Irrep& r1 = at(n - 1, a - 1);
      const Irrep& r0 = at(n - 1, a);
      r.bm = r1.dim;
      r.b0 = r0.dim;
      r.dim = r.bm + r.b0;
      for (int i = 0; i + 1 < n - 1; ++i) {
        r.xp.push_back(detail::block_diag(r1.xp[i], r0.xp[i]));
        r.xm.push_back(detail::block_diag(r1.xm[i], r0.xm[i]));
        r.k.push_back(detail::block_diag(r1.k[i], r0.k[i]));
        r.kinv.push_back(detail::block_diag(r1.kinv[i], r0.kinv[i]));
      }
      // top generators: X+ = i_{-1} i_0 p_{-1} p_0, X- = i_0 i_{-1} p_0 p_{-1},
      // K acting by (1, q) on the first block's sub-blocks and (q^{-1}, 1)
      // on the second's.
      MatLP im = r.im(), iz = r.iz(), pm = r.pm(), p0 = r.p0();
      r.xp.push_back(im * r1.iz() * r0.pm() * p0);
      r.xm.push_back(iz * r0.im() * r1.p0() * pm);
      auto kblock = [](const Irrep& rr, const LaurentPoly& cm,
                       const LaurentPoly& c0) {
        MatLP d(rr.dim, rr.dim);
        for (int i = 0; i < rr.bm; ++i) d(i, i) = cm;
        for (int i = 0; i < rr.b0; ++i) d(rr.bm + i, rr.bm + i) = c0;
        if (rr.dim == 1 && rr.bm + rr.b0 == 0) d(0, 0) = LaurentPoly(1);
        return d;
      };
      MatLP k1 = kblock(r1, LaurentPoly(1), LaurentPoly::q(1));
      MatLP k0 = kblock(r0, LaurentPoly::q(-1), LaurentPoly(1));
      r.k.push_back(detail::block_diag(k1, k0));
      MatLP k1i = kblock(r1, LaurentPoly(1), LaurentPoly::q(-1));
      MatLP k0i = kblock(r0, LaurentPoly::q(1), LaurentPoly(1));
      r.kinv.push_back(detail::block_diag(k1i, k0i));
    }
    // tau = prod_j K_j^{j(n-j)}; all K's are diagonal monomial matrices
    r.tau = MatLP::identity(r.dim);
    for (int j = 1; j <= n - 1; ++j) {
      int e = j * (n - j);
      for (int d = 0; d < r.dim; ++d) {
        LaurentPoly kd = r.k[j - 1](d, d);
        const auto& t = *kd.terms().begin();
        r.tau(d, d) *= LaurentPoly::monomial(1, t.first * e);
      }
    }
    r.tau_inv = invert_monomial(r.tau);
    reps_.emplace(std::make_pair(n, a), std::move(r));
  }

  std::map<std::pair<int, int>, Irrep> reps_;
};

}  // namespace qweb
