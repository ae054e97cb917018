/*
  This is linalg.hpp, part of qlie.
  Distributed under the MIT license; see the LICENSE file.

  Exact linear algebra over Q(q): dense row reduction for small systems,
  and an incremental echelon span over sparse vectors with arbitrary
  ordered coordinate keys.
*/

#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "qlie/scalar.hpp"

namespace qlie {

using QVec = std::vector<QScalar>;
using QMat = std::vector<QVec>;

/* Reduced row echelon form in place.  Columns are processed left to
   right; returns the pivot column of each pivot row, in row order. */
inline std::vector<std::size_t> rref(QMat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t sel = rank;
    while (sel < m.size() && m[sel][col].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[rank], m[sel]);
    QScalar inv = QScalar::one() / m[rank][col];
    for (std::size_t c = col; c < cols; ++c) m[rank][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      QScalar f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

/* Basis of the right nullspace of a matrix with `cols` columns, one
   vector per free column, in ascending column order. */
inline std::vector<QVec> nullspace(QMat m, std::size_t cols) {
  for (auto& row : m)
    if (row.size() != cols) throw MathFault("nullspace: ragged matrix");
  std::vector<std::size_t> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<QVec> out;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    QVec x(cols, QScalar::zero());
    x[c] = QScalar::one();
    for (std::size_t r = 0; r < pivots.size(); ++r)
      x[pivots[r]] = -m[r][c];
    out.push_back(std::move(x));
  }
  return out;
}

struct LinSolve {
  bool consistent = false;
  bool unique = false;
  QVec x;  // one solution (free coordinates zero) when consistent
};

/* Exact solution of A x = b. */
inline LinSolve solve(QMat a, const QVec& b) {
  std::size_t cols = a.empty() ? 0 : a[0].size();
  if (a.size() != b.size()) throw MathFault("solve: shape mismatch");
  for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(b[r]);
  std::vector<std::size_t> pivots = rref(a);
  LinSolve res;
  if (!pivots.empty() && pivots.back() == cols) return res;  // inconsistent
  res.consistent = true;
  res.unique = (pivots.size() == cols);
  res.x.assign(cols, QScalar::zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) res.x[pivots[r]] = a[r][cols];
  return res;
}

/* Growing echelonized span of sparse vectors.  K is the coordinate key,
   C its ordering; each stored row is scaled to have coefficient 1 on its
   leading (smallest) key, and rows are kept sorted by leading key. */
template <class K, class C = std::less<K>>
class EchelonSpan {
 public:
  using Vec = std::map<K, QScalar, C>;

  /* Residual of v after reduction against the span (empty if spanned). */
  Vec reduce(Vec v) const {
    for (const auto& [lead, row] : rows_) {
      auto it = v.find(lead);
      if (it == v.end()) continue;
      QScalar f = it->second;
      for (const auto& [k, c] : row) {
        auto jt = v.find(k);
        if (jt == v.end())
          v.emplace(k, -(f * c));
        else {
          jt->second -= f * c;
          if (jt->second.is_zero()) v.erase(jt);
        }
      }
    }
    return v;
  }

  bool contains(const Vec& v) const { return reduce(v).empty(); }

  /* Add v to the span; returns false when v was already spanned. */
  bool insert(Vec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    QScalar inv = QScalar::one() / v.begin()->second;
    for (auto& [k, c] : v) c *= inv;
    K lead = v.begin()->first;
    rows_.emplace(std::move(lead), std::move(v));
    return true;
  }

  std::size_t dim() const { return rows_.size(); }
  const std::map<K, Vec, C>& rows() const { return rows_; }

 private:
  std::map<K, Vec, C> rows_;
};

}  // namespace qlie
