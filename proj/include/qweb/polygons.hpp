#pragma once

// Polygonal webs: the P- and Q-families of 2k-gons indexed by boundary flow
// vectors (a, b) and an internal flow label l, together with boundary label
// patterns, canonical forms, the P=Q identifications, and formal sums.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <tuple>
#include <vector>

#include "qweb/laurent.hpp"

namespace qweb {

enum class Family : int { P = 0, Q = 1 };

inline char family_char(Family f) { return f == Family::P ? 'P' : 'Q'; }

struct FlowPair {
  std::vector<int> a;
  std::vector<int> b;

  int k() const { return static_cast<int>(a.size()); }

  // min/max over the empty vector are 0 by convention.
  int min_a() const { return a.empty() ? 0 : *std::min_element(a.begin(), a.end()); }
  int max_a() const { return a.empty() ? 0 : *std::max_element(a.begin(), a.end()); }
  int min_b() const { return b.empty() ? 0 : *std::min_element(b.begin(), b.end()); }
  int max_b() const { return b.empty() ? 0 : *std::max_element(b.begin(), b.end()); }
  int sum_a() const { return std::accumulate(a.begin(), a.end(), 0); }
  int sum_b() const { return std::accumulate(b.begin(), b.end(), 0); }
  // sum minus max / sum minus min
  int sumhat_b() const { return sum_b() - max_b(); }
  int sumtah_a() const { return sum_a() - min_a(); }

  bool admissible(int n) const {
    if (a.size() != b.size()) return false;
    int kk = k();
    for (int i = 0; i < kk; ++i) {
      int an = a[(i + 1) % kk];
      if (b[i] < a[i] || b[i] < an) return false;
      if (b[i] > n + a[i] || b[i] > n + an) return false;
    }
    return true;
  }

  FlowPair shifted(int c) const {
    FlowPair r = *this;
    for (auto& x : r.a) x += c;
    for (auto& x : r.b) x += c;
    return r;
  }

  friend bool operator==(const FlowPair& x, const FlowPair& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator<(const FlowPair& x, const FlowPair& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  }
};

struct BoundaryPoint {
  int label;
  bool in;  // true: '-' (incoming / downward), false: '+' (outgoing)
  friend bool operator==(const BoundaryPoint& x, const BoundaryPoint& y) {
    return x.label == y.label && x.in == y.in;
  }
};

using BoundarySignature = std::vector<BoundaryPoint>;

// Label(a,b) = (b_k - a_1, -)(b_k - a_k, +) ... (b_1 - a_2, -)(b_1 - a_1, +).
inline BoundarySignature boundary_label(const FlowPair& f) {
  BoundarySignature s;
  int k = f.k();
  for (int j = k; j >= 1; --j) {
    int bi = f.b[j - 1];
    s.push_back({bi - f.a[j % k], true});
    s.push_back({bi - f.a[j - 1], false});
  }
  return s;
}

// l-range of each family; all internal edge labels lie in [0, n] iff l is
// inside this window.
inline int l_min(Family fam, int n, const FlowPair& f) {
  return fam == Family::P ? f.max_b() : f.max_a();
}
inline int l_max(Family fam, int n, const FlowPair& f) {
  return fam == Family::P ? f.min_a() + n : f.min_b();
}

struct PolygonWeb {
  Family family;
  int n;
  FlowPair flows;
  int l;

  friend bool operator==(const PolygonWeb& x, const PolygonWeb& y) {
    return x.family == y.family && x.n == y.n && x.flows == y.flows && x.l == y.l;
  }
  friend bool operator<(const PolygonWeb& x, const PolygonWeb& y) {
    return std::tie(x.family, x.n, x.flows, x.l) <
           std::tie(y.family, y.n, y.flows, y.l);
  }

  std::string str() const {
    std::string s(1, family_char(family));
    s += "^" + std::to_string(n) + "_{(";
    for (size_t i = 0; i < flows.a.size(); ++i)
      s += (i ? "," : "") + std::to_string(flows.a[i]);
    s += "),(";
    for (size_t i = 0; i < flows.b.size(); ++i)
      s += (i ? "," : "") + std::to_string(flows.b[i]);
    s += ")}{" + std::to_string(l) + "}";
    return s;
  }
};

// Shift all flow labels so min(a) = 0 (no-op for k = 0).
inline PolygonWeb canonical_form(const PolygonWeb& w) {
  if (w.flows.k() == 0) return w;
  int c = w.flows.min_a();
  return PolygonWeb{w.family, w.n, w.flows.shifted(-c), w.l - c};
}

// Admissible webs only; out-of-range internal labels are the zero morphism.
inline std::optional<PolygonWeb> make_web(Family fam, int n, const FlowPair& f,
                                          int l) {
  if (!f.admissible(n)) return std::nullopt;
  if (l < l_min(fam, n, f) || l > l_max(fam, n, f)) return std::nullopt;
  return canonical_form(PolygonWeb{fam, n, f, l});
}

namespace detail {

// Identified (family, l) pairs at fixed canonical flows, from Lemma P=Q
// plus the k <= 1 tree degenerations.
inline std::vector<std::pair<std::pair<Family, int>, std::pair<Family, int>>>
identification_pairs(int n, const FlowPair& f) {
  using FL = std::pair<Family, int>;
  std::vector<std::pair<FL, FL>> pairs;
  int k = f.k();
  auto P = [](int l) { return FL{Family::P, l}; };
  auto Q = [](int l) { return FL{Family::Q, l}; };
  if (k == 0) {
    pairs.push_back({Q(0), P(0)});
    pairs.push_back({P(n), P(0)});
    return pairs;
  }
  bool const_a = f.min_a() == f.max_a();
  bool const_b = f.min_b() == f.max_b();
  if (k == 1) {
    pairs.push_back({Q(f.a[0]), P(f.a[0] + n)});
    pairs.push_back({Q(f.b[0]), P(f.b[0])});
    pairs.push_back({P(f.a[0] + n), P(f.b[0])});
    return pairs;
  }
  if (k == 2) {
    pairs.push_back({Q(f.min_b()), P(f.max_b())});
    pairs.push_back({Q(f.max_a()), P(f.min_a() + n)});
    return pairs;
  }
  if (const_a) pairs.push_back({Q(f.max_a()), P(f.min_a() + n)});
  if (const_b) pairs.push_back({Q(f.min_b()), P(f.max_b())});
  return pairs;
}

}  // namespace detail

// Unique representative of the equivalence class of w in SymCat_n. The
// Q-side rewrites to the P-side; for merged P-classes the smaller l wins.
inline PolygonWeb canonical_rep(const PolygonWeb& w0) {
  PolygonWeb w = canonical_form(w0);
  using FL = std::pair<Family, int>;
  auto pairs = detail::identification_pairs(w.n, w.flows);
  // Tiny union-find over the touched labels.
  std::map<FL, FL> parent;
  std::function<FL(FL)> find = [&](FL x) {
    auto it = parent.find(x);
    if (it == parent.end() || it->second == x) return x;
    FL r = find(it->second);
    parent[x] = r;
    return r;
  };
  for (auto& [u, v] : pairs) {
    FL ru = find(u), rv = find(v);
    if (ru == rv) continue;
    // order: P before Q, then smaller l
    FL lo = ru, hi = rv;
    if (std::tie(rv.first, rv.second) < std::tie(ru.first, ru.second))
      std::swap(lo, hi);
    parent[hi] = lo;
    parent[lo] = lo;
  }
  FL r = find({w.family, w.l});
  return PolygonWeb{r.first, w.n, w.flows, r.second};
}

inline bool web_eq(const PolygonWeb& u, const PolygonWeb& v) {
  if (u.n != v.n) return false;
  return canonical_rep(u) == canonical_rep(v);
}

// Formal linear combination of webs over a fixed level and boundary.
// Terms are stored on canonical class representatives.
class WebSum {
 public:
  WebSum(int n, FlowPair flows) : n_(n), flows_(std::move(flows)) {
    if (flows_.k() > 0) flows_ = flows_.shifted(-flows_.min_a());
  }

  int n() const { return n_; }
  const FlowPair& flows() const { return flows_; }
  BoundarySignature boundary() const { return boundary_label(flows_); }
  bool is_zero() const { return terms_.empty(); }
  size_t breadth() const { return terms_.size(); }

  const std::map<std::pair<Family, int>, LaurentPoly>& terms() const {
    return terms_;
  }

  LaurentPoly coeff(Family fam, int l) const {
    PolygonWeb rep = canonical_rep(PolygonWeb{fam, n_, flows_, l});
    auto it = terms_.find({rep.family, rep.l});
    return it == terms_.end() ? LaurentPoly() : it->second;
  }

  // Zero webs (inadmissible l) are silently dropped.
  void add_web(Family fam, const FlowPair& raw, int l, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto w = make_web(fam, n_, raw, l);
    if (!w) return;
    PolygonWeb rep = canonical_rep(*w);
    if (!(rep.flows == flows_))
      throw std::invalid_argument("WebSum: boundary mismatch");
    auto key = std::make_pair(rep.family, rep.l);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  WebSum& operator+=(const WebSum& o) {
    if (o.n_ != n_ || !(o.flows_ == flows_))
      throw std::invalid_argument("WebSum: boundary mismatch");
    for (const auto& [key, c] : o.terms_) {
      auto it = terms_.find(key);
      if (it == terms_.end()) {
        terms_.emplace(key, c);
      } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
      }
    }
    return *this;
  }

  friend WebSum operator+(WebSum x, const WebSum& y) {
    x += y;
    return x;
  }

  friend WebSum operator*(const LaurentPoly& c, const WebSum& x) {
    WebSum r(x.n_, x.flows_);
    if (c.is_zero()) return r;
    for (const auto& [key, v] : x.terms_) r.terms_[key] = c * v;
    return r;
  }

  friend bool operator==(const WebSum& x, const WebSum& y) {
    return x.n_ == y.n_ && x.flows_ == y.flows_ && x.terms_ == y.terms_;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [key, c] : terms_) {
      if (!first) s += " + ";
      PolygonWeb w{key.first, n_, flows_, key.second};
      if (c.is_one())
        s += w.str();
      else
        s += "(" + c.str() + ")*" + w.str();
      first = false;
    }
    return s;
  }

 private:
  int n_;
  FlowPair flows_;
  std::map<std::pair<Family, int>, LaurentPoly> terms_;
};

// Number of admissible internal labels, before identifications.
inline int label_count(Family fam, int n, const FlowPair& f) {
  int lo = l_min(fam, n, f), hi = l_max(fam, n, f);
  return hi >= lo ? hi - lo + 1 : 0;
}

}  // namespace qweb
