#ifndef DYNRES_EXTERIOR_HPP
#define DYNRES_EXTERIOR_HPP

#include <map>
#include <vector>

#include "dynres/polymatrix.hpp"

namespace dynres {

// k-subsets of {0..n-1} in lexicographic order; wedge bases e_S are indexed
// by sorted subsets.
inline std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> s(k);
  for (int i = 0; i < k; ++i) s[i] = i;
  for (;;) {
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i) --i;
    if (i < 0) break;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

// Koszul sign of e_S ^ e_T -> e_{S u T}; zero if they overlap.
inline int wedge_sign(const std::vector<int>& S, const std::vector<int>& T) {
  int inv = 0;
  for (int s : S)
    for (int t : T) {
      if (s == t) return 0;
      if (s > t) ++inv;
    }
  return (inv % 2 == 0) ? 1 : -1;
}

inline std::vector<int> set_complement(const std::vector<int>& S, int n) {
  std::vector<int> out;
  size_t k = 0;
  for (int i = 0; i < n; ++i) {
    if (k < S.size() && S[k] == i)
      ++k;
    else
      out.push_back(i);
  }
  return out;
}

inline MultiPoly poly_minor(const PolyMatrix& m, const std::vector<int>& rows,
                            const std::vector<int>& cols) {
  int k = static_cast<int>(rows.size());
  PolyMatrix sub(k, k, m.nvars);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(rows[i], cols[j]);
  return poly_det(sub);
}

// Lambda^k of a map F -> G on lexicographic wedge bases: entry (S,T) is the
// minor with rows S and columns T.
inline PolyMatrix exterior_power(const PolyMatrix& m, int k) {
  auto rowsets = k_subsets(m.rows, k);
  auto colsets = k_subsets(m.cols, k);
  PolyMatrix out(static_cast<int>(rowsets.size()), static_cast<int>(colsets.size()), m.nvars);
  for (size_t i = 0; i < rowsets.size(); ++i) {
    long long t = 0;
    for (int r : rowsets[i]) t += m.rowtwist[r];
    out.rowtwist[i] = t;
  }
  for (size_t j = 0; j < colsets.size(); ++j) {
    long long t = 0;
    for (int c : colsets[j]) t += m.coltwist[c];
    out.coltwist[j] = t;
  }
  for (size_t i = 0; i < rowsets.size(); ++i)
    for (size_t j = 0; j < colsets.size(); ++j) out.at(i, j) = poly_minor(m, rowsets[i], colsets[j]);
  return out;
}

// Pfaffian of a skew matrix (even size), expansion along the first remaining
// index with memoization.
inline MultiPoly pfaffian(const PolyMatrix& m) {
  if (m.rows != m.cols) throw math_error("pfaffian of non-square matrix");
  if (m.rows % 2 != 0) return MultiPoly(m.nvars);
  std::map<std::vector<int>, MultiPoly> memo;
  std::function<const MultiPoly&(const std::vector<int>&)> pf =
      [&](const std::vector<int>& idx) -> const MultiPoly& {
    auto it = memo.find(idx);
    if (it != memo.end()) return it->second;
    MultiPoly val(m.nvars);
    if (idx.empty()) {
      val = MultiPoly::constant(m.nvars, Rat(1));
    } else {
      int a = idx[0];
      int sgn = 1;
      for (size_t j = 1; j < idx.size(); ++j) {
        std::vector<int> rest;
        for (size_t t = 1; t < idx.size(); ++t)
          if (t != j) rest.push_back(idx[t]);
        MultiPoly term = m.at(a, idx[j]) * pf(rest);
        if (sgn > 0)
          val += term;
        else
          val -= term;
        sgn = -sgn;
      }
    }
    return memo.emplace(idx, std::move(val)).first->second;
  };
  std::vector<int> all(m.rows);
  for (int i = 0; i < m.rows; ++i) all[i] = i;
  return pf(all);
}

}  // namespace dynres

#endif
