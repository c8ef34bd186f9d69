#ifndef DYNRES_BEMULT_HPP
#define DYNRES_BEMULT_HPP

#include "dynres/complex.hpp"
#include "dynres/exterior.hpp"

namespace dynres {

// First structure theorem data: a3 = Lambda^{r3} d3; a2 and a1 factor the
// exterior powers of d2 and d1 through the wedge-with maps.
struct Multipliers {
  PolyMatrix a3;  // C(f2,f3) x 1
  PolyMatrix a2;  // C(f1,r2) x 1, rows indexed by r2-subsets of F1
  MultiPoly a1;   // scalar multiplier M -> Lambda^{f0} F0
};

namespace detail {

// Row vector of (e_T ^ a3)-coefficients: index T over r2-subsets of F2.
inline std::vector<MultiPoly> wedge_with_a3(const PolyMatrix& a3, int f2, int f3) {
  auto Ts = k_subsets(f2, f2 - f3);
  auto comp_index = [&](const std::vector<int>& S) {
    auto all = k_subsets(f2, f3);
    for (size_t i = 0; i < all.size(); ++i)
      if (all[i] == S) return static_cast<int>(i);
    return -1;
  };
  std::vector<MultiPoly> w;
  w.reserve(Ts.size());
  for (const auto& T : Ts) {
    std::vector<int> Tc = set_complement(T, f2);
    int sgn = wedge_sign(T, Tc);
    MultiPoly v = a3.at(comp_index(Tc), 0);
    if (sgn < 0) v = -v;
    w.push_back(std::move(v));
  }
  return w;
}

// Solve column * w = rhs_row exactly (rhs over the same index set as w);
// returns the unique quotient or throws math_error on failure.
inline MultiPoly ratio_against_row(const std::vector<MultiPoly>& w,
                                   const std::vector<MultiPoly>& rhs, const char* what) {
  int pick = -1;
  for (size_t t = 0; t < w.size(); ++t)
    if (!w[t].is_zero()) {
      pick = static_cast<int>(t);
      break;
    }
  if (pick < 0) throw math_error(std::string(what) + ": wedge row vanishes (not acyclic in grade 1)");
  MultiPoly q(w[pick].nvars());
  if (!rhs[pick].is_zero()) q = exact_div(rhs[pick], w[pick]);
  for (size_t t = 0; t < w.size(); ++t)
    if (q * w[t] != rhs[t])
      throw math_error(std::string(what) + ": factorization fails (not acyclic in grade 1)");
  return q;
}

}  // namespace detail

inline Multipliers be_multipliers(const GradedComplex& C) {
  if (!C.shape_ok()) throw math_error("be_multipliers: malformed complex");
  int f0 = C.format.f0, f1 = C.format.f1, f2 = C.format.f2, f3 = C.format.f3;
  int r1 = C.format.r1(), r2 = C.format.r2();

  Multipliers M;
  M.a3 = exterior_power(C.d3, f3);

  std::vector<MultiPoly> w3 = detail::wedge_with_a3(M.a3, f2, f3);
  PolyMatrix L2 = exterior_power(C.d2, r2);
  auto Us = k_subsets(f1, r2);
  auto Ts = k_subsets(f2, r2);
  M.a2 = PolyMatrix(static_cast<int>(Us.size()), 1, C.nvars);
  for (size_t u = 0; u < Us.size(); ++u) {
    std::vector<MultiPoly> rhs;
    rhs.reserve(Ts.size());
    for (size_t t = 0; t < Ts.size(); ++t) rhs.push_back(L2.at(static_cast<int>(u), static_cast<int>(t)));
    M.a2.at(static_cast<int>(u), 0) = detail::ratio_against_row(w3, rhs, "a2");
  }
  for (size_t u = 0; u < Us.size(); ++u) {
    long long t = 0;
    for (int i : Us[u]) t += C.s1[i];
    M.a2.rowtwist[u] = t;
  }
  long long s2_sum = 0, s3_sum = 0;
  for (long long v : C.s2) s2_sum += v;
  for (long long v : C.s3) s3_sum += v;
  M.a2.coltwist = {s2_sum - s3_sum};

  // a1: Lambda^{r1} d1 = a1 . (- ^ a2)
  PolyMatrix L1 = exterior_power(C.d1, r1);  // 1 x C(f1, r1) since r1 = f0
  auto Vs = k_subsets(f1, r1);
  std::vector<MultiPoly> w2, rhs1;
  auto u_index = [&](const std::vector<int>& S) {
    for (size_t i = 0; i < Us.size(); ++i)
      if (Us[i] == S) return static_cast<int>(i);
    return -1;
  };
  for (size_t v = 0; v < Vs.size(); ++v) {
    std::vector<int> Vc = set_complement(Vs[v], f1);
    int sgn = wedge_sign(Vs[v], Vc);
    MultiPoly val = M.a2.at(u_index(Vc), 0);
    if (sgn < 0) val = -val;
    w2.push_back(std::move(val));
    rhs1.push_back(L1.at(0, static_cast<int>(v)));
  }
  (void)f0;
  M.a1 = detail::ratio_against_row(w2, rhs1, "a1");
  return M;
}

}  // namespace dynres

#endif
