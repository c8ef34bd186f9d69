#ifndef DYNRES_COMPLEX_HPP
#define DYNRES_COMPLEX_HPP

#include <optional>
#include <string>
#include <vector>

#include "dynres/diagram.hpp"
#include "dynres/exterior.hpp"
#include "dynres/groebner.hpp"
#include "dynres/linalg.hpp"

namespace dynres {

// Length-3 complex of graded free modules over Q[x_1..x_n]:
//   0 -> F3 --d3--> F2 --d2--> F1 --d1--> F0.
// Twists s_i are the generator degrees of F_i; differentials are homogeneous
// of degree zero with respect to them.
struct GradedComplex {
  Format format;
  int nvars = 0;
  std::vector<long long> s0, s1, s2, s3;
  PolyMatrix d1, d2, d3;  // d1: f0 x f1, d2: f1 x f2, d3: f2 x f3

  void sync_twists() {
    d1.rowtwist.assign(s0.begin(), s0.end());
    d1.coltwist.assign(s1.begin(), s1.end());
    d2.rowtwist.assign(s1.begin(), s1.end());
    d2.coltwist.assign(s2.begin(), s2.end());
    d3.rowtwist.assign(s2.begin(), s2.end());
    d3.coltwist.assign(s3.begin(), s3.end());
  }

  bool shape_ok() const {
    return d1.rows == format.f0 && d1.cols == format.f1 && d2.rows == format.f1 &&
           d2.cols == format.f2 && d3.rows == format.f2 && d3.cols == format.f3 &&
           static_cast<int>(s0.size()) == format.f0 && static_cast<int>(s1.size()) == format.f1 &&
           static_cast<int>(s2.size()) == format.f2 && static_cast<int>(s3.size()) == format.f3;
  }

  bool is_minimal() const {
    return d1.all_entries_in_maximal_ideal() && d2.all_entries_in_maximal_ideal() &&
           d3.all_entries_in_maximal_ideal();
  }
};

struct ComplexReport {
  bool shape_ok = false;
  bool homogeneous = false;
  bool dd_zero = false;
  bool ranks_ok = false;                 // rank d_i == r_i
  std::optional<bool> grades_ok;         // grade I_{r_i}(d_i) >= i (if budget allowed)
  std::optional<bool> acyclic;           // Buchsbaum-Eisenbud criterion
  std::optional<bool> dual_acyclic;      // same for the dual complex
  std::vector<std::string> notes;

  bool structurally_ok() const { return shape_ok && homogeneous && dd_zero && ranks_ok; }
};

namespace detail {

inline IdealHandle minor_ideal(const PolyMatrix& m, int k) {
  std::vector<MultiPoly> gens;
  for (const auto& rows : k_subsets(m.rows, k))
    for (const auto& cols : k_subsets(m.cols, k)) {
      MultiPoly p = poly_minor(m, rows, cols);
      if (!p.is_zero()) gens.push_back(std::move(p));
    }
  return IdealHandle(m.nvars, std::move(gens));
}

}  // namespace detail

// Check the Buchsbaum-Eisenbud acyclicity data for the complex and its dual.
// Grade conditions run only when check_grades is set (they may be expensive);
// the structural checks are always performed.
inline ComplexReport validate_complex(const GradedComplex& C, bool check_grades = true,
                                      const Budget& budget = Budget()) {
  ComplexReport rep;
  rep.shape_ok = C.shape_ok();
  if (!rep.shape_ok) {
    rep.notes.push_back("matrix shapes or twist lengths do not match the format");
    return rep;
  }
  rep.homogeneous = C.d1.is_homogeneous() && C.d2.is_homogeneous() && C.d3.is_homogeneous();
  if (!rep.homogeneous) rep.notes.push_back("differentials are not homogeneous of degree zero");
  rep.dd_zero = (C.d1 * C.d2).is_zero() && (C.d2 * C.d3).is_zero();
  if (!rep.dd_zero) rep.notes.push_back("d o d != 0");
  if (!rep.dd_zero) return rep;

  int r1 = C.format.r1(), r2 = C.format.r2(), r3 = C.format.r3();
  int rk1 = poly_rank(C.d1), rk2 = poly_rank(C.d2), rk3 = poly_rank(C.d3);
  rep.ranks_ok = (rk1 == r1 && rk2 == r2 && rk3 == r3);
  if (!rep.ranks_ok)
    rep.notes.push_back("ranks (" + std::to_string(rk1) + "," + std::to_string(rk2) + "," +
                        std::to_string(rk3) + ") differ from (r1,r2,r3)");

  if (check_grades && rep.ranks_ok) {
    try {
      bool g1 = grade_at_least(detail::minor_ideal(C.d1, r1), 1, budget);
      bool g2 = grade_at_least(detail::minor_ideal(C.d2, r2), 2, budget);
      bool g3 = grade_at_least(detail::minor_ideal(C.d3, r3), 3, budget);
      rep.grades_ok = g1 && g2 && g3;
      rep.acyclic = rep.ranks_ok && *rep.grades_ok;
      // dual: 0 -> F0* -> F1* -> F2* -> F3*; acyclic iff grade I_{r_i} >= 4 - i
      bool h1 = grade_at_least(detail::minor_ideal(C.d3, r3), 1, budget);
      bool h2 = grade_at_least(detail::minor_ideal(C.d2, r2), 2, budget);
      bool h3 = grade_at_least(detail::minor_ideal(C.d1, r1), 3, budget);
      rep.dual_acyclic = h1 && h2 && h3;
    } catch (const budget_error& e) {
      rep.notes.push_back(std::string("grade checks skipped: ") + e.what());
    }
  }
  return rep;
}

}  // namespace dynres

#endif
