#pragma once

// The three relation families (square-switch, its complement, and the
// Kekule spans APR/AQR), their orthogonal complements, breadth and
// circumference diagnostics, and the dGT-inductive kernel certificate.

#include <optional>
#include <string>

#include "qweb/branching.hpp"
#include "qweb/linalg.hpp"
#include "qweb/polygons.hpp"

namespace qweb {

enum class RelationLabel { SS, SSPrime, APR, AQR };

inline const char* relation_name(RelationLabel l) {
  switch (l) {
    case RelationLabel::SS: return "SS";
    case RelationLabel::SSPrime: return "SS'";
    case RelationLabel::APR: return "APR";
    default: return "AQR";
  }
}

struct FormalTerm {
  Family family;
  int l;
  LaurentPoly coeff;
};

struct RelationElement {
  int index;  // the paper's l, m or j index
  std::vector<FormalTerm> formal;
  WebSum sum;
};

struct RelationSpace {
  RelationLabel label;
  int n;
  FlowPair flows;
  std::vector<RelationElement> elements;

  std::vector<RelationElement> nonzero_elements() const {
    std::vector<RelationElement> out;
    for (const auto& e : elements)
      if (!e.sum.is_zero()) out.push_back(e);
    return out;
  }
};

namespace detail {

inline RelationElement make_element(int n, const FlowPair& f, int index,
                                    std::vector<FormalTerm> formal) {
  RelationElement e{index, std::move(formal), WebSum(n, f)};
  for (const auto& t : e.formal) e.sum.add_web(t.family, f, t.l, t.coeff);
  return e;
}

inline LaurentPoly sign_pow(int s) {
  return ((s % 2) + 2) % 2 == 0 ? LaurentPoly(1) : LaurentPoly(-1);
}

}  // namespace detail

// (b - n, rotl(a)): the flow transport realizing a Q-polygon as a rotated
// P-polygon with the same internal label (overall sign +1).
inline FlowPair rotate_Q_to_P(const FlowPair& f, int n) {
  FlowPair r;
  r.a.reserve(f.k());
  for (int x : f.b) r.a.push_back(x - n);
  r.b = detail::rotl(f.a);
  return r;
}

inline FlowPair rotate_P_to_Q(const FlowPair& f, int n) {
  // inverse of the above: a = rotr(b'), b = a' + n
  FlowPair r;
  if (!f.b.empty()) {
    r.a.push_back(f.b.back());
    r.a.insert(r.a.end(), f.b.begin(), f.b.end() - 1);
  }
  for (int x : f.a) r.b.push_back(x + n);
  return r;
}

// Square-switch spanning set (k = 2 only).
inline RelationSpace ss_span(int n, const FlowPair& f) {
  if (f.k() != 2) throw std::invalid_argument("ss_span: squares only");
  RelationSpace sp{RelationLabel::SS, n, f, {}};
  int d = n + f.sum_a() - f.sum_b();
  if (d >= 0) {
    for (int l = f.max_b(); l <= f.min_a() + n; ++l) {
      std::vector<FormalTerm> terms{{Family::P, l, LaurentPoly(1)}};
      for (int m = f.max_a(); m <= f.min_b(); ++m) {
        LaurentPoly c = qbinom(d, m + l - f.sum_b());
        if (!c.is_zero()) terms.push_back({Family::Q, m, -c});
      }
      sp.elements.push_back(detail::make_element(n, f, l, std::move(terms)));
    }
  } else {
    for (int l = f.max_a(); l <= f.min_b(); ++l) {
      std::vector<FormalTerm> terms{{Family::Q, l, LaurentPoly(1)}};
      for (int m = f.max_b(); m <= n + f.min_a(); ++m) {
        LaurentPoly c = qbinom(-d, m + l - f.sum_a() - n);
        if (!c.is_zero()) terms.push_back({Family::P, m, -c});
      }
      sp.elements.push_back(detail::make_element(n, f, l, std::move(terms)));
    }
  }
  return sp;
}

// Complementary spanning set with SS = APR (+) SS' (k = 2 only).
inline RelationSpace ss_prime_span(int n, const FlowPair& f) {
  if (f.k() != 2) throw std::invalid_argument("ss_prime_span: squares only");
  RelationSpace sp{RelationLabel::SSPrime, n, f, {}};
  int d = n + f.sum_a() - f.sum_b();
  if (d == 0) {
    // Balanced case: APR is empty and SS' is all of SS, which reduces to
    // the pairing Q{m} = P{sum b - m}. Both q-binomial branches degenerate
    // here (their leading coefficient is [(-1) choose 0] = 0).
    for (int m = f.max_a(); m <= f.min_b(); ++m) {
      std::vector<FormalTerm> terms{{Family::Q, m, LaurentPoly(1)},
                                    {Family::P, f.sum_b() - m, LaurentPoly(-1)}};
      sp.elements.push_back(detail::make_element(n, f, m, std::move(terms)));
    }
    return sp;
  }
  if (d > 0) {
    for (int m = f.max_a(); m <= f.min_b(); ++m) {
      std::vector<FormalTerm> terms{{Family::Q, m, LaurentPoly(1)}};
      for (int l = n + f.sum_a() - m; l <= n + f.min_a(); ++l) {
        LaurentPoly c =
            qbinom(m + l - 1 - f.sum_b(), m + l - n - f.sum_a());
        if (c.is_zero()) continue;
        terms.push_back(
            {Family::P, l, -(detail::sign_pow(m + l + n + f.sum_a()) * c)});
      }
      sp.elements.push_back(detail::make_element(n, f, m, std::move(terms)));
    }
  } else {
    for (int m = f.max_b(); m <= f.min_a() + n; ++m) {
      std::vector<FormalTerm> terms{{Family::P, m, LaurentPoly(1)}};
      for (int l = f.sum_b() - m; l <= f.min_b(); ++l) {
        LaurentPoly c =
            qbinom(m + l - n - 1 - f.sum_a(), m + l - f.sum_b());
        if (c.is_zero()) continue;
        terms.push_back(
            {Family::Q, l, -(detail::sign_pow(m + l + f.sum_b()) * c)});
      }
      sp.elements.push_back(detail::make_element(n, f, m, std::move(terms)));
    }
  }
  return sp;
}

// Kekule relations among P-polygons.
inline RelationSpace apr_span(int n, const FlowPair& f) {
  RelationSpace sp{RelationLabel::APR, n, f, {}};
  int sa = f.sum_a(), sb = f.sum_b();
  for (int j = sb; j <= sa + n - 1; ++j) {
    std::vector<FormalTerm> terms;
    for (int k = -f.sumhat_b(); k <= -f.sumtah_a() + 1; ++k) {
      LaurentPoly c = qbinom(j + k - f.max_b(), j - sb) *
                      qbinom(f.min_a() + n - j - k, sa + n - 1 - j);
      if (c.is_zero()) continue;
      terms.push_back({Family::P, j + k, detail::sign_pow(j + k) * c});
    }
    sp.elements.push_back(detail::make_element(n, f, j, std::move(terms)));
  }
  return sp;
}

// Kekule relations among Q-polygons (|boundary|/2 = k).
inline RelationSpace aqr_span(int n, const FlowPair& f) {
  RelationSpace sp{RelationLabel::AQR, n, f, {}};
  int kk = f.k();
  int sa = f.sum_a(), sb = f.sum_b();
  int jhi = sb - n * (kk - 1) - 1;
  for (int j = sa; j <= jhi; ++j) {
    std::vector<FormalTerm> terms;
    for (int k = -f.sumtah_a(); k <= -f.sumhat_b() + n * kk + 1; ++k) {
      LaurentPoly c = qbinom(j + k - f.max_a(), j - sa) *
                      qbinom(f.min_b() - j - k, jhi - j);
      if (c.is_zero()) continue;
      terms.push_back({Family::Q, j + k, detail::sign_pow(j + k) * c});
    }
    sp.elements.push_back(detail::make_element(n, f, j, std::move(terms)));
  }
  return sp;
}

// AQR derived from APR on the rotated flows; must agree with aqr_span.
inline RelationSpace aqr_span_transported(int n, const FlowPair& f) {
  RelationSpace rot = apr_span(n, rotate_Q_to_P(f, n));
  RelationSpace sp{RelationLabel::AQR, n, f, {}};
  for (const auto& e : rot.elements) {
    std::vector<FormalTerm> terms;
    for (const auto& t : e.formal) terms.push_back({Family::Q, t.l, t.coeff});
    sp.elements.push_back(detail::make_element(n, f, e.index, std::move(terms)));
  }
  return sp;
}

// A vector in the dual of AP (or AQ): coefficients indexed by admissible l.
struct DualFunctional {
  Family family;
  int n;
  FlowPair flows;
  std::map<int, LaurentPoly> coeffs;

  LaurentPoly at(int l) const {
    auto it = coeffs.find(l);
    return it == coeffs.end() ? LaurentPoly() : it->second;
  }
};

// Orthogonal complement of APR in AP*, one functional per j*.
inline std::vector<DualFunctional> apr_complement(int n, const FlowPair& f) {
  std::vector<DualFunctional> out;
  int sa = f.sum_a(), sb = f.sum_b();
  for (int js = -f.sumhat_b(); js <= -f.sumtah_a(); ++js) {
    DualFunctional e{Family::P, n, f, {}};
    for (int ks = sb; ks <= n + sa; ++ks) {
      LaurentPoly c = qbinom(n + sa - sb, ks - sb);
      if (c.is_zero()) continue;
      int l = ks + js;
      if (l < l_min(Family::P, n, f) || l > l_max(Family::P, n, f))
        throw std::logic_error("apr_complement: support left the l-window");
      e.coeffs[l] = c;
    }
    out.push_back(std::move(e));
  }
  return out;
}

// Formal dual pairing sum_l f(l) * x(l); x given as a formal expansion.
inline LaurentPoly pair(const DualFunctional& f,
                        const std::vector<FormalTerm>& x) {
  LaurentPoly acc;
  for (const auto& t : x) {
    if (t.family != f.family) continue;
    acc += f.at(t.l) * t.coeff;
  }
  return acc;
}

inline LaurentPoly pair(const DualFunctional& f, const RelationElement& x) {
  return pair(f, x.formal);
}

// Pullback of a level-(n-1) functional along dGT_empty on the P family:
// (dGT0* g)(l) = q^{l-a1} g(l) + q^{l-a1+sum b-sum a-n} g(l+1) pulled back
// through dGT0(P{l}) = q^{l-a1} P{l} + q^{l-a1+sum b-sum a-n} P{l-1}.
inline DualFunctional dgt_empty_pullback(const DualFunctional& g, int n,
                                         const FlowPair& f) {
  DualFunctional e{Family::P, n, f, {}};
  int a1 = f.k() > 0 ? f.a[0] : 0;
  int drop = f.sum_b() - f.sum_a() - n;
  for (int l = l_min(Family::P, n, f); l <= l_max(Family::P, n, f); ++l) {
    LaurentPoly v = LaurentPoly::q(l - a1) * g.at(l) +
                    LaurentPoly::q(l - a1 + drop) * g.at(l - 1);
    if (!v.is_zero()) e.coeffs[l] = v;
  }
  return e;
}

inline size_t breadth(const WebSum& x) { return x.breadth(); }

// Largest even count of pairwise-distinct boundary points, in cyclic order,
// with labels strictly between 0 and n and alternating orientations.
inline int circumference(int n, const FlowPair& f) {
  BoundarySignature sig = boundary_label(f);
  int m = static_cast<int>(sig.size());
  if (m == 0) return 0;
  std::vector<int> nontrivial;
  for (int i = 0; i < m; ++i)
    if (sig[i].label > 0 && sig[i].label < n) nontrivial.push_back(i);
  int best = 0;
  int t = static_cast<int>(nontrivial.size());
  for (unsigned mask = 0; mask < (1u << t); ++mask) {
    std::vector<int> pick;
    for (int i = 0; i < t; ++i)
      if (mask & (1u << i)) pick.push_back(nontrivial[i]);
    int c = static_cast<int>(pick.size());
    if (c <= best || c % 2 != 0) continue;
    bool ok = true;
    for (int i = 0; i < c && ok; ++i)
      ok = sig[pick[i]].in != sig[pick[(i + 1) % c]].in;
    if (ok) best = c;
  }
  return best;
}

inline bool is_hexagonal(int n, const FlowPair& f) {
  return circumference(n, f) >= 6;
}

// --- dGT-inductive kernel verification -----------------------------------

struct InductiveCase {
  RelationLabel label;
  int element_index;
  std::vector<int> subset;
  bool ok;
  std::string detail;
};

struct InductiveReport {
  int n = 0;
  FlowPair flows;
  bool ok = true;
  int cases = 0;
  std::vector<InductiveCase> failures;
  std::vector<InductiveCase> all_cases;
};

namespace detail {

inline std::vector<VecRF> websum_matrix(const std::vector<const WebSum*>& sums,
                                        std::vector<std::pair<Family, int>>* keys) {
  std::set<std::pair<Family, int>> keyset;
  for (const auto* s : sums)
    for (const auto& [k, c] : s->terms()) keyset.insert(k);
  keys->assign(keyset.begin(), keyset.end());
  std::vector<VecRF> out;
  for (const auto* s : sums) {
    VecRF v;
    v.reserve(keys->size());
    for (const auto& k : *keys) {
      auto it = s->terms().find(k);
      v.push_back(it == s->terms().end() ? RatFunc(0) : RatFunc(it->second));
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace detail

// Spanning sets available at a given level and flows: SS for squares plus
// APR and AQR everywhere.
inline std::vector<WebSum> relation_span_sums(int n, const FlowPair& f) {
  std::vector<WebSum> out;
  auto push = [&out](const RelationSpace& sp) {
    for (const auto& e : sp.elements)
      if (!e.sum.is_zero()) out.push_back(e.sum);
  };
  if (f.k() == 2) push(ss_span(n, f));
  push(apr_span(n, f));
  push(aqr_span(n, f));
  return out;
}

// Certify that every dGT matrix entry of every spanning element lies in the
// relation span one level down.
inline InductiveReport verify_kernel_inductive(int n, const FlowPair& f,
                                               const RelationSpace& space,
                                               bool keep_passes = false) {
  InductiveReport rep;
  rep.n = n;
  rep.flows = f;
  for (const auto& elem : space.elements) {
    if (elem.sum.is_zero()) continue;
    BranchImage img = dgt(elem.sum);
    for (const auto& [s, y] : img.entries) {
      ++rep.cases;
      std::vector<WebSum> span = relation_span_sums(n - 1, y.flows());
      std::vector<const WebSum*> all{&y};
      for (const auto& w : span) all.push_back(&w);
      std::vector<std::pair<Family, int>> keys;
      auto mat = detail::websum_matrix(all, &keys);
      std::vector<VecRF> basis(mat.begin() + 1, mat.end());
      auto witness = in_span(mat[0], basis);
      InductiveCase c{space.label, elem.index,
                      std::vector<int>(s.begin(), s.end()), witness.has_value(),
                      ""};
      if (!witness) {
        c.detail = "entry not in level-" + std::to_string(n - 1) +
                   " relation span: " + y.str();
        rep.failures.push_back(c);
        rep.ok = false;
      } else if (keep_passes) {
        std::string w = "witness:";
        for (const auto& x : *witness) w += " " + x.str();
        c.detail = w;
      }
      if (keep_passes) rep.all_cases.push_back(c);
    }
  }
  return rep;
}

}  // namespace qweb
