#ifndef DYNRES_POLYMATRIX_HPP
#define DYNRES_POLYMATRIX_HPP

#include <vector>

#include "dynres/poly.hpp"

namespace dynres {

// Matrix of polynomials with graded twists.  Entry (i,j) is zero or
// homogeneous of degree coltwist[j] - rowtwist[i].
struct PolyMatrix {
  int rows = 0, cols = 0, nvars = 0;
  std::vector<MultiPoly> entries;  // row-major
  std::vector<long long> rowtwist, coltwist;

  PolyMatrix() = default;
  PolyMatrix(int r, int c, int nv)
      : rows(r), cols(c), nvars(nv), entries(r * c, MultiPoly(nv)), rowtwist(r, 0), coltwist(c, 0) {}

  MultiPoly& at(int i, int j) { return entries[i * cols + j]; }
  const MultiPoly& at(int i, int j) const { return entries[i * cols + j]; }

  static PolyMatrix identity(int n, int nv) {
    PolyMatrix m(n, n, nv);
    for (int i = 0; i < n; ++i) m.at(i, i) = MultiPoly::constant(nv, Rat(1));
    return m;
  }

  bool is_zero() const {
    for (const MultiPoly& p : entries)
      if (!p.is_zero()) return false;
    return true;
  }

  bool is_homogeneous() const {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        const MultiPoly& p = at(i, j);
        if (p.is_zero()) continue;
        int d;
        if (!p.is_homogeneous(&d)) return false;
        if (d != coltwist[j] - rowtwist[i]) return false;
      }
    return true;
  }

  PolyMatrix operator*(const PolyMatrix& o) const {
    if (cols != o.rows || nvars != o.nvars) throw variable_mismatch("matrix dimension mismatch");
    PolyMatrix r(rows, o.cols, nvars);
    r.rowtwist = rowtwist;
    r.coltwist = o.coltwist;
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        const MultiPoly& a = at(i, k);
        if (a.is_zero()) continue;
        for (int j = 0; j < o.cols; ++j) {
          const MultiPoly& b = o.at(k, j);
          if (b.is_zero()) continue;
          r.at(i, j) += a * b;
        }
      }
    return r;
  }

  PolyMatrix operator+(const PolyMatrix& o) const {
    if (rows != o.rows || cols != o.cols) throw variable_mismatch("matrix dimension mismatch");
    PolyMatrix r(*this);
    for (int i = 0; i < rows * cols; ++i) r.entries[i] += o.entries[i];
    return r;
  }

  PolyMatrix operator-(const PolyMatrix& o) const {
    if (rows != o.rows || cols != o.cols) throw variable_mismatch("matrix dimension mismatch");
    PolyMatrix r(*this);
    for (int i = 0; i < rows * cols; ++i) r.entries[i] -= o.entries[i];
    return r;
  }

  PolyMatrix transpose() const {
    PolyMatrix r(cols, rows, nvars);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    for (int i = 0; i < rows; ++i) r.coltwist[i] = -rowtwist[i];
    for (int j = 0; j < cols; ++j) r.rowtwist[j] = -coltwist[j];
    return r;
  }

  PolyMatrix column(int j) const {
    PolyMatrix r(rows, 1, nvars);
    r.rowtwist = rowtwist;
    r.coltwist = {coltwist[j]};
    for (int i = 0; i < rows; ++i) r.at(i, 0) = at(i, j);
    return r;
  }

  // evaluate all entries at the origin
  std::vector<std::vector<Rat>> constant_part() const {
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m[i][j] = at(i, j).constant_term();
    return m;
  }

  bool all_entries_in_maximal_ideal() const {
    for (const MultiPoly& p : entries)
      if (p.constant_term() != 0) return false;
    return true;
  }
};

// Rank over the fraction field by fraction-free (Bareiss) elimination.
inline int poly_rank(PolyMatrix m) {
  int r = 0;
  MultiPoly prev_pivot = MultiPoly::constant(m.nvars, Rat(1));
  for (int col = 0; col < m.cols && r < m.rows; ++col) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (!m.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    for (int i = r + 1; i < m.rows; ++i) {
      for (int j = col + 1; j < m.cols; ++j) {
        MultiPoly num = m.at(r, col) * m.at(i, j) - m.at(i, col) * m.at(r, j);
        m.at(i, j) = exact_div(num, prev_pivot);
      }
      m.at(i, col) = MultiPoly(m.nvars);
    }
    prev_pivot = m.at(r, col);
    ++r;
  }
  return r;
}

// Determinant by fraction-free elimination.
inline MultiPoly poly_det(PolyMatrix m) {
  if (m.rows != m.cols) throw math_error("determinant of non-square matrix");
  int n = m.rows;
  if (n == 0) return MultiPoly::constant(m.nvars, Rat(1));
  MultiPoly prev_pivot = MultiPoly::constant(m.nvars, Rat(1));
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (!m.at(i, k).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return MultiPoly(m.nvars);
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(k, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        MultiPoly num = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = exact_div(num, prev_pivot);
      }
    prev_pivot = m.at(k, k);
  }
  MultiPoly d = m.at(n - 1, n - 1);
  if (sign < 0) d = -d;
  return d;
}

}  // namespace dynres

#endif
