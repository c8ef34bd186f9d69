#ifndef DYNRES_LINALG_HPP
#define DYNRES_LINALG_HPP

#include <map>
#include <vector>

#include "dynres/budgets.hpp"
#include "dynres/polymatrix.hpp"

namespace dynres {

using RatMatrix = std::vector<std::vector<Rat>>;

// Reduced row echelon form in place; returns pivot column of each pivot row.
inline std::vector<int> rref(RatMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[r]);
    Rat d = m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] /= d;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline int rat_rank(RatMatrix m) { return static_cast<int>(rref(m).size()); }

inline std::vector<Expo> monomials_of_degree(int nvars, int d) {
  std::vector<Expo> out;
  Expo e(nvars, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == nvars - 1) {
      e[pos] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[pos] = k;
      rec(pos + 1, left - k);
    }
    e[pos] = 0;
  };
  if (nvars == 0) {
    if (d == 0) out.push_back(e);
    return out;
  }
  rec(0, d);
  return out;  // graded-lex descending within the fixed degree
}

struct GradedSolveResult {
  bool solved = false;  // false = certified NoSolution in the forced degrees
  bool unique = false;  // no free coordinates in the solution slice
  PolyMatrix x;
};

// Solve A x = b exactly where A is homogeneous and the entry degrees of x are
// forced by the twists.  Free coordinates are set to zero.  Each graded slice
// is a finite rational linear system, so solvability is decidable; budget
// overruns are reported distinctly.
inline GradedSolveResult graded_solve(const PolyMatrix& A, const PolyMatrix& b,
                                      const Budget& budget = Budget()) {
  if (A.rows != b.rows || b.cols != 1) throw variable_mismatch("graded_solve shape mismatch");
  if (!A.is_homogeneous() || !b.is_homogeneous()) throw math_error("graded_solve requires homogeneous input");
  int nv = A.nvars;

  GradedSolveResult res;
  res.x = PolyMatrix(A.cols, 1, nv);
  res.x.rowtwist = A.coltwist;
  res.x.coltwist = {b.coltwist[0]};

  // unknowns: monomial coefficients of each x_j
  struct Unknown {
    int j;
    Expo e;
  };
  std::vector<Unknown> unknowns;
  std::vector<std::pair<int, int>> unknown_range(A.cols, {0, 0});
  for (int j = 0; j < A.cols; ++j) {
    long long d = b.coltwist[0] - A.coltwist[j];
    unknown_range[j].first = static_cast<int>(unknowns.size());
    if (d >= 0) {
      if (d > budget.solve_degree_cap) throw budget_error("graded_solve degree cap exceeded");
      for (const Expo& e : monomials_of_degree(nv, static_cast<int>(d)))
        unknowns.push_back({j, e});
    }
    unknown_range[j].second = static_cast<int>(unknowns.size());
  }

  // equations keyed by (row, monomial)
  std::map<std::pair<int, Expo>, int> eq_index;
  auto eq_of = [&](int i, const Expo& e) {
    auto [it, fresh] = eq_index.try_emplace({i, e}, static_cast<int>(eq_index.size()));
    return it->second;
  };
  struct Cell {
    int eq, un;
    Rat c;
  };
  std::vector<Cell> cells;
  for (int u = 0; u < static_cast<int>(unknowns.size()); ++u) {
    const Unknown& un = unknowns[u];
    for (int i = 0; i < A.rows; ++i) {
      const MultiPoly& a = A.at(i, un.j);
      for (const auto& t : a.terms()) cells.push_back({eq_of(i, expo_mul(t.e, un.e)), u, t.c});
    }
  }
  std::vector<std::pair<int, Rat>> rhs;
  for (int i = 0; i < A.rows; ++i)
    for (const auto& t : b.at(i, 0).terms()) rhs.push_back({eq_of(i, t.e), t.c});

  long long nrows = static_cast<long long>(eq_index.size());
  long long ncols = static_cast<long long>(unknowns.size()) + 1;
  if (nrows * ncols > budget.solve_cell_cap) throw budget_error("graded_solve size cap exceeded");

  RatMatrix m(nrows, std::vector<Rat>(ncols, Rat(0)));
  for (const Cell& c : cells) m[c.eq][c.un] += c.c;
  for (const auto& [eq, c] : rhs) m[eq].back() += c;

  std::vector<int> pivots = rref(m);
  int nun = static_cast<int>(unknowns.size());
  // inconsistent iff some pivot is in the rhs column
  for (int p : pivots)
    if (p == nun) return res;  // solved = false

  std::vector<Rat> sol(nun, Rat(0));
  for (size_t r = 0; r < pivots.size(); ++r) sol[pivots[r]] = m[r].back();
  res.solved = true;
  res.unique = (static_cast<int>(pivots.size()) == nun);
  for (int u = 0; u < nun; ++u) {
    if (sol[u] == 0) continue;
    res.x.at(unknowns[u].j, 0) += MultiPoly::monomial(nv, unknowns[u].e, sol[u]);
  }
  return res;
}

}  // namespace dynres

#endif
