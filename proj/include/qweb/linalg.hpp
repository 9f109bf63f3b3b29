#pragma once

// Exact dense linear algebra over the fraction field of Z[q, q^-1]:
// span membership with witness coefficients, rank, and null spaces.

#include <vector>

#include "qweb/ratfunc.hpp"

namespace qweb {

using VecRF = std::vector<RatFunc>;

// Row-echelon basis maintained incrementally. Rows are kept reduced against
// each other; pivot columns are tracked so membership tests give witnesses.
class SpanBasis {
 public:
  explicit SpanBasis(size_t dim) : dim_(dim) {}

  size_t rank() const { return rows_.size(); }
  size_t dim() const { return dim_; }

  // Reduce v against the basis. Returns the residual and the coefficients
  // of the reduction in terms of the inserted generator vectors.
  std::pair<VecRF, VecRF> reduce(VecRF v) const {
    VecRF coeffs(gens_, RatFunc(0));
    for (size_t r = 0; r < rows_.size(); ++r) {
      const RatFunc& x = v[pivots_[r]];
      if (x.is_zero()) continue;
      RatFunc f = x;  // rows are normalized to pivot 1
      for (size_t j = 0; j < dim_; ++j)
        if (!rows_[r][j].is_zero()) v[j] -= f * rows_[r][j];
      for (size_t j = 0; j < gens_; ++j)
        if (!hist_[r][j].is_zero()) coeffs[j] += f * hist_[r][j];
    }
    return {std::move(v), std::move(coeffs)};
  }

  // Insert a generator vector. Returns true if it enlarged the span.
  bool insert(const VecRF& v) {
    auto [res, coeffs] = reduce(v);
    ++gens_;
    for (auto& h : hist_) h.push_back(RatFunc(0));
    size_t p = 0;
    while (p < dim_ && res[p].is_zero()) ++p;
    if (p == dim_) return false;
    RatFunc inv = RatFunc(1) / res[p];
    for (auto& x : res) x *= inv;
    VecRF h(gens_, RatFunc(0));
    h[gens_ - 1] = inv;
    for (size_t j = 0; j + 1 < gens_; ++j) h[j] = -inv * coeffs[j];
    rows_.push_back(std::move(res));
    hist_.push_back(std::move(h));
    pivots_.push_back(p);
    return true;
  }

  bool contains(const VecRF& v) const {
    auto [res, coeffs] = reduce(v);
    for (const auto& x : res)
      if (!x.is_zero()) return false;
    return true;
  }

 private:
  size_t dim_;
  size_t gens_ = 0;
  std::vector<VecRF> rows_;
  std::vector<VecRF> hist_;  // expression of each row in the generators
  std::vector<size_t> pivots_;
};

// v = sum_i c_i basis_i, or nullopt. Witnesses are verified by recombination.
inline std::optional<VecRF> in_span(const VecRF& v,
                                    const std::vector<VecRF>& basis) {
  if (basis.empty()) {
    for (const auto& x : v)
      if (!x.is_zero()) return std::nullopt;
    return VecRF{};
  }
  size_t dim = v.size();
  SpanBasis sb(dim);
  for (const auto& b : basis) {
    if (b.size() != dim) throw std::invalid_argument("in_span: length mismatch");
    sb.insert(b);
  }
  auto [res, coeffs] = sb.reduce(v);
  for (const auto& x : res)
    if (!x.is_zero()) return std::nullopt;
  // recombine to double-check the witness
  VecRF chk(dim, RatFunc(0));
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < dim; ++j)
      if (!coeffs[i].is_zero()) chk[j] += coeffs[i] * basis[i][j];
  for (size_t j = 0; j < dim; ++j)
    if (!(chk[j] == v[j])) throw std::logic_error("in_span: witness failed");
  return coeffs;
}

inline size_t rank(const std::vector<VecRF>& vecs) {
  if (vecs.empty()) return 0;
  SpanBasis sb(vecs[0].size());
  for (const auto& v : vecs) sb.insert(v);
  return sb.rank();
}

// Null space of the linear map x -> sum_j x_j col_j, i.e. relations among
// the columns. Columns are given as (possibly long) vectors.
inline std::vector<VecRF> null_space(const std::vector<VecRF>& cols) {
  size_t nc = cols.size();
  if (nc == 0) return {};
  size_t dim = cols[0].size();
  // Row-reduce the transpose: treat every coordinate as a constraint row.
  // Maintain echelon rows over the column-index space.
  SpanBasis sb(nc);
  for (size_t r = 0; r < dim; ++r) {
    VecRF row(nc);
    bool nonzero = false;
    for (size_t c = 0; c < nc; ++c) {
      row[c] = cols[c][r];
      nonzero = nonzero || !row[c].is_zero();
    }
    if (nonzero) sb.insert(row);
    if (sb.rank() == nc) return {};
  }
  // Rebuild the reduced rows and back-substitute for the kernel.
  std::vector<VecRF> rows;
  std::vector<size_t> pivots;
  {
    SpanBasis tmp(nc);
    std::vector<VecRF> reduced;
    for (size_t r = 0; r < dim; ++r) {
      VecRF row(nc);
      for (size_t c = 0; c < nc; ++c) row[c] = cols[c][r];
      auto [res, coeff] = tmp.reduce(row);
      size_t p = 0;
      while (p < nc && res[p].is_zero()) ++p;
      if (p == nc) continue;
      RatFunc inv = RatFunc(1) / res[p];
      for (auto& x : res) x *= inv;
      tmp.insert(row);
      rows.push_back(std::move(res));
      pivots.push_back(p);
    }
  }
  // Full reduction upwards so each pivot column is cleared elsewhere.
  for (size_t i = rows.size(); i-- > 0;) {
    for (size_t k = 0; k < i; ++k) {
      RatFunc f = rows[k][pivots[i]];
      if (f.is_zero()) continue;
      for (size_t c = 0; c < nc; ++c) rows[k][c] -= f * rows[i][c];
    }
  }
  std::vector<bool> is_pivot(nc, false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<VecRF> kernel;
  for (size_t fc = 0; fc < nc; ++fc) {
    if (is_pivot[fc]) continue;
    VecRF k(nc, RatFunc(0));
    k[fc] = RatFunc(1);
    for (size_t r = 0; r < rows.size(); ++r) k[pivots[r]] = -rows[r][fc];
    kernel.push_back(std::move(k));
  }
  return kernel;
}

}  // namespace qweb
