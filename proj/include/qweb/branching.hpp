#pragma once

// The diagrammatic Gel'fand-Tsetlin functor on polygon webs, computed by
// the reduction-path model: dGT sends a level-n web sum to a matrix of
// level-(n-1) web sums indexed by the subset of traversed boundary points.

#include <set>

#include "qweb/polygons.hpp"

namespace qweb {

// Boundary flow reduction pattern (a', b'). For the P family both vectors
// live in {0,1}^k with b'_i <= a'_i, a'_{i+1}; for Q, a' in {0,1}^k and
// b' in {-1,0}^k with a'_i b'_i = 0 = a'_{i+1} b'_i.
struct ReductionPattern {
  Family family;
  std::vector<int> ap;
  std::vector<int> bp;
};

inline std::vector<ReductionPattern> admissible_patterns(Family fam, int k) {
  std::vector<ReductionPattern> out;
  if (k < 1) return out;
  for (int ma = 0; ma < (1 << k); ++ma) {
    for (int mb = 0; mb < (1 << k); ++mb) {
      std::vector<int> ap(k), bp(k);
      for (int i = 0; i < k; ++i) {
        ap[i] = (ma >> i) & 1;
        bp[i] = ((mb >> i) & 1) * (fam == Family::P ? 1 : -1);
      }
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        int an = ap[(i + 1) % k];
        if (fam == Family::P)
          ok = bp[i] <= ap[i] && bp[i] <= an;
        else
          ok = ap[i] * bp[i] == 0 && an * bp[i] == 0;
      }
      if (ok) out.push_back({fam, std::move(ap), std::move(bp)});
    }
  }
  return out;
}

// Boundary points are numbered 1..2k in the reverse of the Label(a,b) word
// order: 2i-1 sits at the vertex with outgoing edge b_i - a_i, and 2i at the
// vertex with incoming edge b_i - a_{i+1}.
inline std::set<int> pattern_subset(const ReductionPattern& p) {
  std::set<int> s;
  int k = static_cast<int>(p.ap.size());
  for (int i = 0; i < k; ++i) {
    bool odd, even;
    if (p.family == Family::P) {
      odd = p.ap[i] == 1 && p.bp[i] == 0;
      even = p.ap[(i + 1) % k] == 1 && p.bp[i] == 0;
    } else {
      odd = p.ap[i] == 1 || p.bp[i] == -1;
      even = p.ap[(i + 1) % k] == 1 || p.bp[i] == -1;
    }
    if (odd) s.insert(2 * i + 1);
    if (even) s.insert(2 * i + 2);
  }
  return s;
}

// Point number for the boundary factor at position pos (1-based, Label
// order): the two enumerations are mutually reversed.
inline int point_for_label_position(int k, int pos) { return 2 * k + 1 - pos; }

namespace detail {
inline int dot(const std::vector<int>& x, const std::vector<int>& y) {
  int s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}
inline std::vector<int> rotl(const std::vector<int>& x) {
  if (x.empty()) return x;
  std::vector<int> r(x.begin() + 1, x.end());
  r.push_back(x[0]);
  return r;
}
inline int sum(const std::vector<int>& x) {
  return std::accumulate(x.begin(), x.end(), 0);
}
}  // namespace detail

// The coefficient of the single term dGT_{a',b'}(web): a signed monomial.
// For Q the exponent uses +n*sum(b'); the body of the source text prints
// -n*sum(b') there, which contradicts its own specializations and worked
// examples, while its summary tables carry the + sign.
inline LaurentPoly dgt_coefficient(const PolygonWeb& w,
                                   const ReductionPattern& pat) {
  if (pat.family != w.family)
    throw std::invalid_argument("dgt_coefficient: family mismatch");
  const auto& a = w.flows.a;
  const auto& b = w.flows.b;
  int k = w.flows.k();
  if (static_cast<int>(pat.ap.size()) != k)
    throw std::invalid_argument("dgt_coefficient: size mismatch");
  std::vector<int> arot = detail::rotl(a);
  std::vector<int> a_plus_rot(k);
  for (int i = 0; i < k; ++i) a_plus_rot[i] = a[i] + arot[i];
  int sign = detail::dot(pat.bp, a_plus_rot);
  int sap = detail::sum(pat.ap), sbp = detail::sum(pat.bp);
  int a1 = k > 0 ? a[0] : 0;
  int exp;
  if (w.family == Family::P) {
    exp = w.l * (sbp - sap + 1) + detail::dot(detail::rotl(pat.ap), b) -
          detail::dot(pat.bp, a) - a1 - w.n * (k > 0 ? pat.ap[0] : 0);
  } else {
    exp = w.l * (sap - sbp - k + 1) + detail::sum(b) + w.n * sbp +
          detail::dot(pat.bp, arot) - detail::dot(pat.ap, b) - a1 -
          w.n * (k > 0 ? pat.ap[0] : 0);
  }
  LaurentPoly c = LaurentPoly::monomial(1, exp);
  return ((sign % 2) + 2) % 2 == 0 ? c : -c;
}

// Matrix of level-(n-1) web sums, keyed by traversed boundary subsets.
struct BranchImage {
  int n_out;  // n - 1
  std::map<std::set<int>, WebSum> entries;

  WebSum& entry(const std::set<int>& s, int n, const FlowPair& flows) {
    auto it = entries.find(s);
    if (it == entries.end())
      it = entries.emplace(s, WebSum(n, flows)).first;
    return it->second;
  }
};

inline void dgt_accumulate(BranchImage& img, const PolygonWeb& w,
                           const LaurentPoly& coeff) {
  int k = w.flows.k();
  int n1 = w.n - 1;
  if (k == 0) {
    // Circle: the empty path and the full perimeter cycle; the empty web
    // only admits the empty path.
    FlowPair f{};
    auto& e = img.entry({}, n1, f);
    if (w.family == Family::P) {
      e.add_web(Family::P, f, w.l, coeff * LaurentPoly::q(w.l));
      e.add_web(Family::P, f, w.l - 1, coeff * LaurentPoly::q(w.l - w.n));
    } else {
      e.add_web(Family::Q, f, w.l, coeff);
    }
    return;
  }
  for (const auto& pat : admissible_patterns(w.family, k)) {
    LaurentPoly c = coeff * dgt_coefficient(w, pat);
    FlowPair tf;
    tf.a.resize(k);
    tf.b.resize(k);
    for (int i = 0; i < k; ++i) {
      tf.a[i] = w.flows.a[i] + pat.ap[i];
      tf.b[i] = w.flows.b[i] + pat.bp[i];
    }
    if (!tf.admissible(n1)) continue;  // some boundary label left [0, n-1]
    auto& e = img.entry(pattern_subset(pat), n1, tf);
    e.add_web(w.family, tf, w.l, c);
  }
}

inline BranchImage dgt(const WebSum& x) {
  BranchImage img;
  img.n_out = x.n() - 1;
  for (const auto& [key, c] : x.terms()) {
    PolygonWeb w{key.first, x.n(), x.flows(), key.second};
    dgt_accumulate(img, w, c);
  }
  // Drop entries that collapsed to zero.
  for (auto it = img.entries.begin(); it != img.entries.end();) {
    if (it->second.is_zero())
      it = img.entries.erase(it);
    else
      ++it;
  }
  return img;
}

inline BranchImage dgt(const PolygonWeb& w) {
  WebSum x(w.n, w.flows);
  x.add_web(w.family, w.flows, w.l, LaurentPoly(1));
  return dgt(x);
}

}  // namespace qweb
