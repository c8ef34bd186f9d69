#ifndef DYNRES_STRUCTMAPS_HPP
#define DYNRES_STRUCTMAPS_HPP

#include <optional>

#include "dynres/bemult.hpp"
#include "dynres/levi.hpp"

namespace dynres {

// Higher structure maps in degree one.
//   w31: M* (x) Lambda^{r1+1} F1 -> F2, columns over (r1+1)-subsets of F1
//   w21: M* (x) Lambda^{r1} F1 (x) F2 -> F3, columns over (r1-subset, F2 index)
// For f0 = 1 these are the DG product Lambda^2 F1 -> F2 and F1 (x) F2 -> F3.
struct StructureMaps {
  PolyMatrix w31;
  PolyMatrix w21;
};

namespace detail {

inline long long twist_M(const GradedComplex& C) {
  long long t = 0;
  for (long long v : C.s3) t += v;
  for (long long v : C.s2) t -= v;
  for (long long v : C.s1) t += v;
  return t;
}

// beta: M* (x) Lambda^{r1} F1 -> R, indexed by r1-subsets of F1.  The
// normalization factor (-1)^{r2(f3+1)} makes the structure maps of the
// standard split complex the identity on Z and on F3* for every format.
inline std::vector<MultiPoly> beta_from_a2(const GradedComplex& C, const Multipliers& M) {
  int f1 = C.format.f1, r1 = C.format.r1();
  int norm = (C.format.r2() * (C.format.f3 + 1)) % 2 == 0 ? 1 : -1;
  auto Ss = k_subsets(f1, r1);
  auto Us = k_subsets(f1, C.format.r2());
  auto u_index = [&](const std::vector<int>& S) {
    for (size_t i = 0; i < Us.size(); ++i)
      if (Us[i] == S) return static_cast<int>(i);
    return -1;
  };
  std::vector<MultiPoly> beta;
  beta.reserve(Ss.size());
  for (const auto& S : Ss) {
    std::vector<int> Sc = set_complement(S, f1);
    int sgn = norm * wedge_sign(Sc, S);
    MultiPoly v = M.a2.at(u_index(Sc), 0);
    if (sgn < 0) v = -v;
    beta.push_back(std::move(v));
  }
  return beta;
}

// Composite M* (x) Lambda^{r1+1} F1 -> F1 through beta; the target of the
// lift through d2.  Columns over (r1+1)-subsets P of F1.
inline PolyMatrix w31_rhs(const GradedComplex& C, const std::vector<MultiPoly>& beta) {
  int f1 = C.format.f1, r1 = C.format.r1();
  auto Ps = k_subsets(f1, r1 + 1);
  auto Ss = k_subsets(f1, r1);
  auto s_index = [&](const std::vector<int>& S) {
    for (size_t i = 0; i < Ss.size(); ++i)
      if (Ss[i] == S) return static_cast<int>(i);
    return -1;
  };
  long long tM = twist_M(C);
  PolyMatrix B(f1, static_cast<int>(Ps.size()), C.nvars);
  B.rowtwist.assign(C.s1.begin(), C.s1.end());
  for (size_t p = 0; p < Ps.size(); ++p) {
    const auto& P = Ps[p];
    long long t = -tM;
    for (int i : P) t += C.s1[i];
    B.coltwist[p] = t;
    for (size_t k = 0; k < P.size(); ++k) {
      // e_P -> sum_k (-1)^{r1-k} e_{P minus p_k} (x) e_{p_k}
      std::vector<int> rest;
      for (size_t m = 0; m < P.size(); ++m)
        if (m != k) rest.push_back(P[m]);
      MultiPoly term = beta[s_index(rest)];
      if ((r1 - static_cast<int>(k)) % 2 != 0) term = -term;
      B.at(P[k], static_cast<int>(p)) += term;
    }
  }
  return B;
}

}  // namespace detail

// Lift through d2: d2 . w31 = (composite through beta).  The composite is
// checked to die under d1 first; the graded solve sets free coordinates to
// zero, so the output is deterministic.
inline PolyMatrix lift_w31(const GradedComplex& C, const Multipliers& M,
                           const Budget& budget = Budget()) {
  std::vector<MultiPoly> beta = detail::beta_from_a2(C, M);
  PolyMatrix B = detail::w31_rhs(C, beta);
  if (!(C.d1 * B).is_zero()) throw math_error("lift_w31: composite does not die under d1");
  PolyMatrix w31(C.format.f2, B.cols, C.nvars);
  w31.rowtwist.assign(C.s2.begin(), C.s2.end());
  w31.coltwist = B.coltwist;
  for (int col = 0; col < B.cols; ++col) {
    GradedSolveResult r = graded_solve(C.d2, B.column(col), budget);
    if (!r.solved) throw math_error("lift_w31: no lift exists (complex not acyclic?)");
    for (int i = 0; i < C.format.f2; ++i) w31.at(i, col) = r.x.at(i, 0);
  }
  return w31;
}

namespace detail {

// Difference of the two composites M* (x) Lambda^{r1} F1 (x) F2 -> F2; lands
// in ker d2 and lifts through d3 to w21.  Columns indexed (S, c) with S an
// r1-subset of F1 and c an F2 index, flattened S-major.
inline PolyMatrix w21_rhs(const GradedComplex& C, const std::vector<MultiPoly>& beta,
                          const PolyMatrix& w31) {
  int f1 = C.format.f1, f2 = C.format.f2, r1 = C.format.r1();
  auto Ss = k_subsets(f1, r1);
  auto Ps = k_subsets(f1, r1 + 1);
  auto p_index = [&](const std::vector<int>& P) {
    for (size_t i = 0; i < Ps.size(); ++i)
      if (Ps[i] == P) return static_cast<int>(i);
    return -1;
  };
  long long tM = twist_M(C);
  PolyMatrix D(f2, static_cast<int>(Ss.size()) * f2, C.nvars);
  D.rowtwist.assign(C.s2.begin(), C.s2.end());
  for (size_t s = 0; s < Ss.size(); ++s) {
    const auto& S = Ss[s];
    long long base = -tM;
    for (int i : S) base += C.s1[i];
    for (int c = 0; c < f2; ++c) {
      int col = static_cast<int>(s) * f2 + c;
      D.coltwist[col] = base + C.s2[c];
      // beta_S . e_c
      D.at(c, col) += beta[s];
      // - sum_k d2[k,c] . sign(S,{k}) . w31[, S u {k}]
      for (int k = 0; k < f1; ++k) {
        std::vector<int> K{k};
        int sgn = wedge_sign(S, K);
        if (sgn == 0) continue;
        std::vector<int> P(S);
        P.push_back(k);
        std::sort(P.begin(), P.end());
        int pcol = p_index(P);
        for (int i = 0; i < f2; ++i) {
          MultiPoly term = C.d2.at(k, c) * w31.at(i, pcol);
          if (sgn > 0) term = -term;
          D.at(i, col) += term;
        }
      }
    }
  }
  return D;
}

}  // namespace detail

inline PolyMatrix lift_w21(const GradedComplex& C, const Multipliers& M, const PolyMatrix& w31,
                           const Budget& budget = Budget()) {
  std::vector<MultiPoly> beta = detail::beta_from_a2(C, M);
  PolyMatrix D = detail::w21_rhs(C, beta, w31);
  if (!(C.d2 * D).is_zero()) throw math_error("lift_w21: difference does not land in ker d2");
  PolyMatrix w21(C.format.f3, D.cols, C.nvars);
  w21.rowtwist.assign(C.s3.begin(), C.s3.end());
  w21.coltwist = D.coltwist;
  for (int col = 0; col < D.cols; ++col) {
    GradedSolveResult r = graded_solve(C.d3, D.column(col), budget);
    if (!r.solved) throw math_error("lift_w21: no lift exists (complex not acyclic?)");
    for (int i = 0; i < C.format.f3; ++i) w21.at(i, col) = r.x.at(i, 0);
  }
  return w21;
}

inline StructureMaps structure_maps(const GradedComplex& C, const Budget& budget = Budget()) {
  Multipliers M = be_multipliers(C);
  StructureMaps S;
  S.w31 = lift_w31(C, M, budget);
  S.w21 = lift_w21(C, M, S.w31, budget);
  return S;
}

// The standard split complex of the format over Q (a zero-variable polynomial
// ring) and its equivariant structure maps from the generic pipeline: the
// graded solve zeroes exactly the F3-valued freedom, which reproduces the
// projection maps.
inline GradedComplex split_complex(const Format& f) {
  GradedComplex C;
  C.format = f;
  C.nvars = 0;
  int f0 = f.f0, f1 = f.f1, f2 = f.f2, f3 = f.f3, r2 = f.r2();
  C.s0.assign(f0, 0);
  C.s1.assign(f1, 0);
  C.s2.assign(f2, 0);
  C.s3.assign(f3, 0);
  C.d1 = PolyMatrix(f0, f1, 0);
  C.d2 = PolyMatrix(f1, f2, 0);
  C.d3 = PolyMatrix(f2, f3, 0);
  // F1 = F0 + Z, F2 = F3 + Z
  for (int i = 0; i < f0; ++i) C.d1.at(i, i) = MultiPoly::constant(0, Rat(1));
  for (int k = 0; k < r2; ++k) C.d2.at(f0 + k, f3 + k) = MultiPoly::constant(0, Rat(1));
  for (int i = 0; i < f3; ++i) C.d3.at(i, i) = MultiPoly::constant(0, Rat(1));
  C.sync_twists();
  return C;
}

inline StructureMaps split_structure_maps(const Format& f, const Budget& budget = Budget()) {
  GradedComplex C = split_complex(f);
  return structure_maps(C, budget);
}

// Degree-one gauge action: u1 maps M* (x) Lambda^{r1+1} F1 -> F3 (an f3 x
// C(f1,r1+1) matrix).  w31 shifts by d3 u1 and w21 absorbs the matching
// correction so the defining identities keep holding.
inline StructureMaps gauge_action(const GradedComplex& C, const StructureMaps& S,
                                  const PolyMatrix& u1) {
  if (u1.rows != C.format.f3 || u1.cols != S.w31.cols)
    throw variable_mismatch("gauge_action: u1 has wrong shape");
  StructureMaps out;
  out.w31 = S.w31 + C.d3 * u1;
  out.w31.rowtwist = S.w31.rowtwist;
  out.w31.coltwist = S.w31.coltwist;
  int f1 = C.format.f1, f2 = C.format.f2, r1 = C.format.r1();
  auto Ss = k_subsets(f1, r1);
  auto Ps = k_subsets(f1, r1 + 1);
  auto p_index = [&](const std::vector<int>& P) {
    for (size_t i = 0; i < Ps.size(); ++i)
      if (Ps[i] == P) return static_cast<int>(i);
    return -1;
  };
  out.w21 = S.w21;
  for (size_t s = 0; s < Ss.size(); ++s) {
    const auto& Sset = Ss[s];
    for (int c = 0; c < f2; ++c) {
      int col = static_cast<int>(s) * f2 + c;
      for (int k = 0; k < f1; ++k) {
        std::vector<int> K{k};
        int sgn = wedge_sign(Sset, K);
        if (sgn == 0) continue;
        std::vector<int> P(Sset);
        P.push_back(k);
        std::sort(P.begin(), P.end());
        int pcol = p_index(P);
        for (int i = 0; i < C.format.f3; ++i) {
          MultiPoly term = C.d2.at(k, c) * u1.at(i, pcol);
          if (sgn > 0) term = -term;
          out.w21.at(i, col) += term;
        }
      }
    }
  }
  return out;
}

// Tor_1 (x) Tor_1 -> Tor_2 multiplication over the residue field: the DG
// product reduced modulo the maximal ideal.  Only defined for minimal
// complexes, where it is independent of the choice of lift.
inline RatMatrix tor_m11(const GradedComplex& C, const StructureMaps& S) {
  if (!C.is_minimal()) throw non_minimal_complex();
  if (C.format.f0 != 1) throw unsupported_f0("tor_m11 requires f0 = 1");
  return S.w31.constant_part();
}

inline bool rat_matrix_is_zero(const RatMatrix& m) {
  for (const auto& row : m)
    for (const Rat& v : row)
      if (v != 0) return false;
  return true;
}

// Double-coset label of the family of a minimal resolution.  Betti numbers
// select the candidate components; the (1,5,6,2) pair is separated by the
// vanishing of m11; families that stay ambiguous (larger exceptional formats)
// come back as a partial label listing every candidate.
struct FamilyLabel {
  Format format;
  bool partial = false;
  std::vector<int> candidate_cosets;               // indices into the coset table
  std::vector<std::vector<int>> candidate_words;   // minimal representative words
  std::optional<bool> m11_nonzero;
};

inline FamilyLabel classify_family(const GradedComplex& C, const Budget& budget = Budget(),
                                   const StructureMaps* maps = nullptr) {
  if (C.format.f0 != 1) throw unsupported_f0("classify_family requires f0 = 1");
  if (!format_is_dynkin(C.format)) throw non_dynkin_format();
  if (!C.shape_ok() || !(C.d1 * C.d2).is_zero() || !(C.d2 * C.d3).is_zero())
    throw math_error("classify_family: input is not a complex of the stated format");
  if (!C.is_minimal()) throw non_minimal_complex();

  // perfection: the quotient by I = I_{f0}(d1) must have codimension 3
  {
    std::vector<MultiPoly> gens;
    for (int j = 0; j < C.format.f1; ++j)
      if (!C.d1.at(0, j).is_zero()) gens.push_back(C.d1.at(0, j));
    IdealHandle I(C.nvars, std::move(gens));
    int dim = ideal_dimension(I, budget);
    if (dim < 0 || C.nvars - dim != 3) throw not_perfect();
  }

  CosetComponentMatch match = coset_component_match(C.format);
  std::array<int, 4> betti{C.format.f0, C.format.f1, C.format.f2, C.format.f3};
  std::vector<int> candidates;
  for (size_t k = 0; k < match.cosets.cosets.size(); ++k) {
    const LeviComponent& comp = match.decomposition.components[match.coset_to_component[k]];
    if (comp.j == 0) continue;
    std::array<int, 4> b{1, static_cast<int>(comp.mu.size()),
                         static_cast<int>(comp.mu.size()) + static_cast<int>(comp.lambda.size()) - 1,
                         static_cast<int>(comp.lambda.size())};
    if (b == betti) candidates.push_back(static_cast<int>(k));
  }
  if (candidates.empty()) throw math_error("classify_family: no component carries these Betti numbers");

  FamilyLabel label;
  label.format = C.format;
  auto word_of = [&](int k) {
    return match.cosets.quotient.orbit.words[match.cosets.cosets[k].min_index];
  };
  if (candidates.size() == 1) {
    label.candidate_cosets = candidates;
    label.candidate_words = {word_of(candidates[0])};
    return label;
  }
  if (C.format == Format(1, 5, 6, 2)) {
    StructureMaps local;
    if (!maps) {
      local = structure_maps(C, budget);
      maps = &local;
    }
    bool nonzero = !rat_matrix_is_zero(tor_m11(C, *maps));
    label.m11_nonzero = nonzero;
    // m11 = 0 belongs to the S_{2,2} component, m11 != 0 to S_{2,1}
    for (int k : candidates) {
      const LeviComponent& comp = match.decomposition.components[match.coset_to_component[k]];
      bool is_szz = (comp.lambda == Partition{2, 2});
      if ((nonzero && !is_szz) || (!nonzero && is_szz)) {
        label.candidate_cosets = {k};
        label.candidate_words = {word_of(k)};
        return label;
      }
    }
    throw math_error("classify_family: E6 candidates did not split by m11");
  }
  label.partial = true;
  for (int k : candidates) {
    label.candidate_cosets.push_back(k);
    label.candidate_words.push_back(word_of(k));
  }
  return label;
}

}  // namespace dynres

#endif
