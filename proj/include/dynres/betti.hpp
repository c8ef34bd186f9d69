#ifndef DYNRES_BETTI_HPP
#define DYNRES_BETTI_HPP

#include "dynres/levi.hpp"

namespace dynres {

// Graded Betti table of a cyclic quotient (f0 = 1, s0 = {0}): twist multisets
// in the resolution convention 0 -> (+)R(-s3j) -> (+)R(-s2j) -> (+)R(-s1j) -> R.
struct BettiTable {
  Format format;
  std::vector<long long> s1, s2, s3;

  BettiTable(Format f, std::vector<long long> a, std::vector<long long> b,
             std::vector<long long> c)
      : format(f), s1(std::move(a)), s2(std::move(b)), s3(std::move(c)) {
    if (format.f0 != 1) throw unsupported_f0("BettiTable requires f0 = 1");
    if (static_cast<int>(s1.size()) != format.f1 || static_cast<int>(s2.size()) != format.f2 ||
        static_cast<int>(s3.size()) != format.f3)
      throw malformed_format("twist multiset sizes do not match the format");
  }
};

// Generator degrees of the z1-degree-j slice of R (x) L(omega_{x1})^dual:
// S_lambda F3* contributes tableau sums over the degrees -s_{3.}, S_mu F1
// tableau sums over s_{1.}, added pairwise.  Sorted ascending.
inline std::vector<long long> component_generator_degrees(const BettiTable& t, int j) {
  if (!format_is_dynkin(t.format)) throw non_dynkin_format();
  LeviDecomposition dec = z1_decomposition(t.format);
  std::vector<long long> neg_s3;
  for (long long v : t.s3) neg_s3.push_back(-v);
  std::vector<long long> out;
  for (const auto& comp : dec.components) {
    if (comp.j != j) continue;
    std::vector<long long> degs3 = schur_degrees(comp.lambda, neg_s3);
    std::vector<long long> degs1 = schur_degrees(comp.mu, t.s1);
    for (long long m = 0; m < comp.multiplicity; ++m)
      for (long long a : degs3)
        for (long long b : degs1) out.push_back(a + b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct AdmissibilityReport {
  bool dynkin = false;
  bool degree_zero_generator = false;
  bool inequality_2min_lt_max = false;
  bool parity_ok = false;
  std::vector<std::string> notes;

  bool all_necessary_conditions() const {
    return dynkin && degree_zero_generator && inequality_2min_lt_max && parity_ok;
  }
};

// Necessary conditions on the graded Betti table of a grade-3 perfect cyclic
// quotient.  These are necessary only; the report never claims realizability.
inline AdmissibilityReport admissibility_report(const BettiTable& t) {
  AdmissibilityReport rep;
  rep.dynkin = format_is_dynkin(t.format);

  long long min_s1 = t.s1.empty() ? 0 : *std::min_element(t.s1.begin(), t.s1.end());
  long long max_s3 = t.s3.empty() ? 0 : *std::max_element(t.s3.begin(), t.s3.end());
  rep.inequality_2min_lt_max = 2 * min_s1 < max_s3;

  bool s1_even = false, s3_odd = false;
  for (long long v : t.s1) s1_even = s1_even || (v % 2 == 0);
  for (long long v : t.s3) s3_odd = s3_odd || (v % 2 != 0);
  rep.parity_ok = s1_even || s3_odd;

  if (!rep.dynkin) {
    rep.notes.push_back("format is not Dynkin: no finite decomposition, generator scan skipped");
    return rep;
  }
  LeviDecomposition dec = z1_decomposition(t.format);
  int jmax = dec.components.empty() ? 0 : dec.components.back().j;
  for (int j = 0; j <= jmax && !rep.degree_zero_generator; ++j) {
    for (long long d : component_generator_degrees(t, j))
      if (d == 0) {
        rep.degree_zero_generator = true;
        break;
      }
  }
  if (!rep.degree_zero_generator)
    rep.notes.push_back("no generator of R (x) L(omega_{x1})^dual in degree zero");
  return rep;
}

}  // namespace dynres

#endif
