#ifndef DYNRES_GROEBNER_HPP
#define DYNRES_GROEBNER_HPP

#include <optional>
#include <set>
#include <vector>

#include "dynres/budgets.hpp"
#include "dynres/poly.hpp"

namespace dynres {

// Full normal form of p modulo the (not necessarily Groebner) list of monic
// reducers, graded-lex.
inline MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis) {
  MultiPoly rem(p.nvars());
  MultiPoly w(p);
  while (!w.is_zero()) {
    const auto& lt = w.leading();
    const MultiPoly* red = nullptr;
    for (const MultiPoly& g : basis)
      if (!g.is_zero() && expo_divides(g.leading().e, lt.e)) {
        red = &g;
        break;
      }
    if (red) {
      w -= red->term_mul(expo_div(lt.e, red->leading().e), lt.c / red->leading().c);
    } else {
      rem += MultiPoly::monomial(p.nvars(), lt.e, lt.c);
      w -= MultiPoly::monomial(p.nvars(), lt.e, lt.c);
    }
  }
  return rem;
}

inline MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
  Expo l = expo_lcm(f.leading().e, g.leading().e);
  MultiPoly a = f.term_mul(expo_div(l, f.leading().e), Rat(1) / f.leading().c);
  MultiPoly b = g.term_mul(expo_div(l, g.leading().e), Rat(1) / g.leading().c);
  return a - b;
}

// Buchberger's algorithm with the product and chain criteria; returns the
// unique reduced graded-lex basis, monic, sorted by descending leading term.
inline std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& gens,
                                         const Budget& budget = Budget()) {
  std::vector<MultiPoly> basis;
  for (const MultiPoly& g : gens)
    if (!g.is_zero()) {
      basis.push_back(g);
      basis.back().make_monic();
    }

  // pair queue ordered by (lcm degree, lcm, i, j); done set for the chain criterion
  struct PairKey {
    int deg;
    Expo lcm;
    int i, j;
    bool operator<(const PairKey& o) const {
      if (deg != o.deg) return deg < o.deg;
      if (lcm != o.lcm) return grlex_greater(o.lcm, lcm);
      if (i != o.i) return i < o.i;
      return j < o.j;
    }
  };
  std::set<PairKey> queue;
  std::set<std::pair<int, int>> treated;
  auto push_pair = [&](int i, int j) {
    Expo l = expo_lcm(basis[i].leading().e, basis[j].leading().e);
    queue.insert(PairKey{expo_degree(l), l, i, j});
  };
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) push_pair(static_cast<int>(i), static_cast<int>(j));

  long long pairs_done = 0;
  while (!queue.empty()) {
    PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    treated.insert({pk.i, pk.j});
    if (++pairs_done > budget.groebner_pair_cap)
      throw budget_error("Groebner pair cap exceeded");
    if (pk.deg > budget.groebner_degree_cap)
      throw budget_error("Groebner degree cap exceeded");

    const Expo& li = basis[pk.i].leading().e;
    const Expo& lj = basis[pk.j].leading().e;
    // product criterion
    if (expo_lcm(li, lj) == expo_mul(li, lj)) continue;
    // chain criterion
    bool skip = false;
    for (size_t k = 0; k < basis.size() && !skip; ++k) {
      int ki = static_cast<int>(k);
      if (ki == pk.i || ki == pk.j) continue;
      if (!expo_divides(basis[k].leading().e, pk.lcm)) continue;
      auto p1 = std::minmax(pk.i, ki), p2 = std::minmax(pk.j, ki);
      if (treated.count({p1.first, p1.second}) && treated.count({p2.first, p2.second})) skip = true;
    }
    if (skip) continue;

    MultiPoly r = normal_form(s_polynomial(basis[pk.i], basis[pk.j]), basis);
    if (r.is_zero()) continue;
    r.make_monic();
    basis.push_back(std::move(r));
    if (static_cast<long long>(basis.size()) > budget.groebner_basis_cap)
      throw budget_error("Groebner basis cap exceeded");
    int t = static_cast<int>(basis.size()) - 1;
    for (int i = 0; i < t; ++i) push_pair(i, t);
  }

  // minimalize: drop elements whose leading term is divisible by another's
  std::vector<MultiPoly> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Expo &ei = basis[i].leading().e, &ej = basis[j].leading().e;
      if (expo_divides(ej, ei) && (ei != ej || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // reduce tails
  std::vector<MultiPoly> reduced(minimal);
  for (size_t i = 0; i < reduced.size(); ++i) {
    std::vector<MultiPoly> others;
    for (size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    reduced[i] = normal_form(reduced[i], others);
    reduced[i].make_monic();
  }
  std::sort(reduced.begin(), reduced.end(), [](const MultiPoly& a, const MultiPoly& b) {
    return grlex_greater(a.leading().e, b.leading().e);
  });
  return reduced;
}

// Generator list with a cached reduced graded-lex basis.
struct IdealHandle {
  int nvars = 0;
  std::vector<MultiPoly> gens;
  mutable std::optional<std::vector<MultiPoly>> gb;

  IdealHandle() = default;
  IdealHandle(int nv, std::vector<MultiPoly> g) : nvars(nv), gens(std::move(g)) {}

  const std::vector<MultiPoly>& groebner(const Budget& budget = Budget()) const {
    if (!gb) gb = buchberger(gens, budget);
    return *gb;
  }

  bool contains(const MultiPoly& p, const Budget& budget = Budget()) const {
    return normal_form(p, groebner(budget)).is_zero();
  }

  bool is_unit(const Budget& budget = Budget()) const {
    const auto& basis = groebner(budget);
    return basis.size() == 1 && basis[0].degree() == 0;
  }
};

namespace detail {
// minimum number of variables meeting every support set (exact branch search)
inline int min_cover(const std::vector<std::vector<int>>& supports, int depth,
                     std::vector<char>& chosen, int best) {
  const std::vector<int>* open = nullptr;
  for (const auto& s : supports) {
    bool hit = false;
    for (int v : s) hit = hit || chosen[v];
    if (!hit) {
      open = &s;
      break;
    }
  }
  if (!open) return depth;
  if (depth + 1 >= best) return best;  // cannot improve
  for (int v : *open) {
    chosen[v] = 1;
    best = std::min(best, min_cover(supports, depth + 1, chosen, best));
    chosen[v] = 0;
  }
  return best;
}
}  // namespace detail

// Krull dimension of the quotient by the ideal (staircase dimension of the
// initial ideal); -1 for the unit ideal.
inline int ideal_dimension(const IdealHandle& ideal, const Budget& budget = Budget()) {
  const auto& basis = ideal.groebner(budget);
  if (basis.empty()) return ideal.nvars;  // zero ideal
  if (basis.size() == 1 && basis[0].degree() == 0) return -1;
  std::vector<std::vector<int>> supports;
  for (const MultiPoly& g : basis) {
    std::vector<int> s;
    const Expo& e = g.leading().e;
    for (int v = 0; v < ideal.nvars; ++v)
      if (e[v] > 0) s.push_back(v);
    supports.push_back(std::move(s));
  }
  std::vector<char> chosen(ideal.nvars, 0);
  int cover = detail::min_cover(supports, 0, chosen, ideal.nvars + 1);
  return ideal.nvars - cover;
}

// grade = codimension for homogeneous ideals of a polynomial ring.
inline bool grade_at_least(const IdealHandle& ideal, int k, const Budget& budget = Budget()) {
  int dim = ideal_dimension(ideal, budget);
  if (dim < 0) return true;  // unit ideal
  return ideal.nvars - dim >= k;
}

inline bool ideal_equal(const IdealHandle& a, const IdealHandle& b, const Budget& budget = Budget()) {
  if (a.nvars != b.nvars) throw variable_mismatch("ideals over different rings");
  for (const MultiPoly& g : b.gens)
    if (!a.contains(g, budget)) return false;
  for (const MultiPoly& g : a.gens)
    if (!b.contains(g, budget)) return false;
  return true;
}

}  // namespace dynres

#endif
