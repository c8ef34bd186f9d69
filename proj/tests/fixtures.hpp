#ifndef DYNRES_TESTS_FIXTURES_HPP
#define DYNRES_TESTS_FIXTURES_HPP

#include "dynres/complex.hpp"
#include "dynres/exterior.hpp"

namespace fixtures {

using namespace dynres;

// Koszul complex on x, y, z over Q[x,y,z].
inline GradedComplex koszul_xyz() {
  GradedComplex C;
  C.format = Format(1, 3, 3, 1);
  C.nvars = 3;
  C.s0 = {0};
  C.s1 = {1, 1, 1};
  C.s2 = {2, 2, 2};
  C.s3 = {3};
  auto var = [](int i) { return MultiPoly::variable(3, i); };
  C.d1 = PolyMatrix(1, 3, 3);
  C.d1.at(0, 0) = var(0);
  C.d1.at(0, 1) = var(1);
  C.d1.at(0, 2) = var(2);
  C.d2 = PolyMatrix(3, 3, 3);
  // columns e12, e13, e23
  C.d2.at(0, 0) = -var(1);
  C.d2.at(1, 0) = var(0);
  C.d2.at(0, 1) = -var(2);
  C.d2.at(2, 1) = var(0);
  C.d2.at(1, 2) = -var(2);
  C.d2.at(2, 2) = var(1);
  C.d3 = PolyMatrix(3, 1, 3);
  C.d3.at(0, 0) = var(2);
  C.d3.at(1, 0) = -var(1);
  C.d3.at(2, 0) = var(0);
  C.sync_twists();
  return C;
}

// Generic 5x5 skew matrix over Q[x_01..x_34] (10 variables).
inline PolyMatrix generic_skew5() {
  PolyMatrix X(5, 5, 10);
  int v = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      X.at(i, j) = MultiPoly::variable(10, v);
      X.at(j, i) = -MultiPoly::variable(10, v);
      ++v;
    }
  return X;
}

// Signed sub-maximal Pfaffians of a skew (2k+1)-matrix: v_i = (-1)^i Pf(X_i^)
inline std::vector<MultiPoly> pfaffian_kernel_vector(const PolyMatrix& X) {
  std::vector<MultiPoly> v;
  for (int i = 0; i < X.rows; ++i) {
    std::vector<int> keep;
    for (int j = 0; j < X.rows; ++j)
      if (j != i) keep.push_back(j);
    PolyMatrix sub(static_cast<int>(keep.size()), static_cast<int>(keep.size()), X.nvars);
    for (size_t a = 0; a < keep.size(); ++a)
      for (size_t b = 0; b < keep.size(); ++b) sub.at(a, b) = X.at(keep[a], keep[b]);
    MultiPoly p = pfaffian(sub);
    if (i % 2 != 0) p = -p;
    v.push_back(std::move(p));
  }
  return v;
}

// Buchsbaum-Eisenbud resolution of the generic 4x4-Pfaffian ideal:
// 0 -> R(-5) -> R^5(-3) -> R^5(-2) -> R, format (1,5,5,1).
inline GradedComplex pfaffian_complex_5() {
  GradedComplex C;
  C.format = Format(1, 5, 5, 1);
  C.nvars = 10;
  C.s0 = {0};
  C.s1.assign(5, 2);
  C.s2.assign(5, 3);
  C.s3 = {5};
  PolyMatrix X = generic_skew5();
  auto v = pfaffian_kernel_vector(X);
  C.d1 = PolyMatrix(1, 5, 10);
  C.d3 = PolyMatrix(5, 1, 10);
  for (int i = 0; i < 5; ++i) {
    C.d1.at(0, i) = v[i];
    C.d3.at(i, 0) = v[i];
  }
  C.d2 = X;
  C.sync_twists();
  return C;
}

// Minimal graded resolution of Q[t1..t4]/(t1 t2, t2 t3, t3 t4, t4 t1):
// 0 -> R(-4) -> R^4(-3) -> R^4(-2) -> R, format (1,4,4,1).  Perfect it is not:
// the ideal has grade 2.
inline GradedComplex nonperfect_complex() {
  GradedComplex C;
  C.format = Format(1, 4, 4, 1);
  C.nvars = 4;
  C.s0 = {0};
  C.s1.assign(4, 2);
  C.s2.assign(4, 3);
  C.s3 = {4};
  auto t = [](int i) { return MultiPoly::variable(4, i); };
  C.d1 = PolyMatrix(1, 4, 4);
  C.d1.at(0, 0) = t(0) * t(1);
  C.d1.at(0, 1) = t(1) * t(2);
  C.d1.at(0, 2) = t(2) * t(3);
  C.d1.at(0, 3) = t(3) * t(0);
  C.d2 = PolyMatrix(4, 4, 4);
  // columns: t3 g1 = t1 g2, t4 g2 = t2 g3, t1 g3 = t3 g4, t2 g4 = t4 g1
  C.d2.at(0, 0) = t(2);
  C.d2.at(1, 0) = -t(0);
  C.d2.at(1, 1) = t(3);
  C.d2.at(2, 1) = -t(1);
  C.d2.at(2, 2) = t(0);
  C.d2.at(3, 2) = -t(2);
  C.d2.at(3, 3) = t(1);
  C.d2.at(0, 3) = -t(3);
  C.d3 = PolyMatrix(4, 1, 4);
  C.d3.at(0, 0) = t(3);
  C.d3.at(1, 0) = t(0);
  C.d3.at(2, 0) = t(1);
  C.d3.at(3, 0) = t(2);
  C.sync_twists();
  return C;
}

}  // namespace fixtures

#endif
