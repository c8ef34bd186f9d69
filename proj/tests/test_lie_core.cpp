#include <catch2/catch_amalgamated.hpp>

#include "dynres/diagram.hpp"
#include "dynres/roots.hpp"

using namespace dynres;

TEST_CASE("Cartan matrix of a two-node chain") {
  TShape s(1, 2, 1);  // u - y1
  CartanMatrix A = cartan_matrix(s);
  REQUIRE(A == CartanMatrix{{2, -1}, {-1, 2}});
}

TEST_CASE("Cartan matrix of E6 has u adjacent to x1, y1, z1") {
  TShape s(2, 3, 3);
  CartanMatrix A = cartan_matrix(s);
  REQUIRE(A.size() == 6);
  int u = s.u_node();
  REQUIRE(A[u][s.x_node(1)] == -1);
  REQUIRE(A[u][s.y_node(1)] == -1);
  REQUIRE(A[u][s.z_node(1)] == -1);
  REQUIRE(A[u][s.y_node(2)] == 0);
  for (int i = 0; i < 6; ++i) {
    REQUIRE(A[i][i] == 2);
    for (int j = 0; j < 6; ++j) REQUIRE(A[i][j] == A[j][i]);
  }
}

TEST_CASE("Cartan matrices are symmetric with correct diagonal") {
  for (TShape s : {TShape(2, 3, 3), TShape(3, 4, 2), TShape(1, 5, 2), TShape(4, 4, 4)}) {
    CartanMatrix A = cartan_matrix(s);
    int n = s.num_nodes();
    for (int i = 0; i < n; ++i) {
      REQUIRE(A[i][i] == 2);
      for (int j = 0; j < n; ++j) {
        REQUIRE(A[i][j] == A[j][i]);
        if (i != j) REQUIRE((A[i][j] == 0 || A[i][j] == -1));
      }
    }
  }
}

TEST_CASE("Type classification") {
  REQUIRE(classify_type(TShape(2, 3, 3)).kind == LieKind::Finite);
  REQUIRE(classify_type(TShape(2, 3, 3)).name == "E6");
  REQUIRE(classify_type(TShape(2, 4, 4)).kind == LieKind::Affine);
  REQUIRE(classify_type(TShape(2, 4, 4)).name == "~E7");
  REQUIRE(classify_type(TShape(2, 2, 2)).name == "D4");
  REQUIRE(classify_type(TShape(1, 2, 1)).name == "A2");
  REQUIRE(classify_type(TShape(2, 2, 5)).name == "D7");
  REQUIRE(classify_type(TShape(2, 3, 4)).name == "E7");
  REQUIRE(classify_type(TShape(2, 3, 5)).name == "E8");
  REQUIRE(classify_type(TShape(3, 3, 3)).kind == LieKind::Affine);
  REQUIRE(classify_type(TShape(2, 3, 6)).kind == LieKind::Affine);
  REQUIRE(classify_type(TShape(3, 3, 4)).kind == LieKind::Indefinite);
}

TEST_CASE("Positive root counts") {
  REQUIRE(RootSystem(TShape(1, 2, 1)).num_positive() == 3);     // A2
  REQUIRE(RootSystem(TShape(2, 2, 2)).num_positive() == 12);    // D4
  REQUIRE(RootSystem(TShape(2, 3, 2)).num_positive() == 20);    // D5
  REQUIRE(RootSystem(TShape(2, 3, 3)).num_positive() == 36);    // E6
  REQUIRE(RootSystem(TShape(2, 3, 4)).num_positive() == 63);    // E7
  REQUIRE(RootSystem(TShape(2, 3, 5)).num_positive() == 120);   // E8
  REQUIRE_THROWS_AS(RootSystem(TShape(2, 4, 4)), non_finite_type);
}

TEST_CASE("Positive root count matches (dim g - n)/2 for named types") {
  struct Case {
    TShape s;
    int dim;
  };
  for (const Case& c : {Case{TShape(1, 4, 1), 24},    // A4: 5^2-1
                        Case{TShape(2, 2, 4), 66},    // D6: 6*11
                        Case{TShape(2, 3, 3), 78},
                        Case{TShape(2, 3, 4), 133},
                        Case{TShape(2, 3, 5), 248}}) {
    RootSystem rs(c.s);
    REQUIRE(2 * rs.num_positive() + rs.rank() == c.dim);
  }
}

TEST_CASE("Simple reflections permute the root set") {
  for (TShape s : {TShape(2, 2, 2), TShape(2, 3, 3)}) {
    RootSystem rs(s);
    for (int k = 0; k < rs.num_roots(); ++k)
      for (int i = 0; i < rs.rank(); ++i)
        REQUIRE(rs.root_index(rs.reflect_root(rs.root(k), i)) >= 0);
  }
}

TEST_CASE("Fundamental weights solve A x = e_i") {
  TShape a2(1, 2, 1);
  RootSystem rs(a2);
  auto fw = rs.fundamental_weights_root_coords();
  // omega_1 = (2 alpha_1 + alpha_2)/3
  REQUIRE(fw[0][0] == Rat(2, 3));
  REQUIRE(fw[1][0] == Rat(1, 3));

  for (TShape s : {TShape(2, 2, 2), TShape(2, 3, 3)}) {
    RootSystem r(s);
    auto w = r.fundamental_weights_root_coords();
    const CartanMatrix& A = r.cartan();
    int n = r.rank();
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        Rat sum(0);
        for (int k = 0; k < n; ++k) sum += Rat(A[i][k]) * w[k][j];
        REQUIRE(sum == (i == j ? Rat(1) : Rat(0)));
      }
  }
}

TEST_CASE("Central fundamental weight of D4 has all positive root coordinates") {
  TShape d4(2, 2, 2);
  RootSystem rs(d4);
  auto fw = rs.fundamental_weights_root_coords();
  int u = d4.u_node();
  for (int i = 0; i < 4; ++i) REQUIRE(fw[i][u] > 0);
}

TEST_CASE("Grading degrees") {
  TShape e6(2, 3, 3);
  RootSystem rs(e6);
  int x1 = e6.x_node(1);
  REQUIRE(grading_degree(rs.highest_root(), x1) == 2);
  for (int t = 0; t < rs.rank(); ++t) {
    RootVec a(rs.rank(), 0);
    a[t] = 1;
    REQUIRE(grading_degree(a, t) == 1);
    for (int s = 0; s < rs.rank(); ++s)
      if (s != t) REQUIRE(grading_degree(a, s) == 0);
  }
}

TEST_CASE("Format/shape bijection") {
  REQUIRE(format_shape(Format(1, 5, 6, 2)) == TShape(2, 3, 3));
  REQUIRE(format_is_dynkin(Format(1, 5, 6, 2)));
  for (int n : {3, 5, 7}) {
    REQUIRE(format_shape(Format(1, n, n, 1)) == TShape(2, n - 2, 2));
  }
  REQUIRE(format_shape(Format(1, 6, 8, 3)) == TShape(2, 4, 4));
  REQUIRE_FALSE(format_is_dynkin(Format(1, 6, 8, 3)));

  for (Format f : {Format(1, 5, 6, 2), Format(2, 6, 5, 1), Format(1, 7, 8, 2), Format(3, 7, 5, 1)}) {
    REQUIRE(shape_format(format_shape(f)) == f);
  }
  REQUIRE_THROWS_AS(Format(1, 5, 6, 3), malformed_format);
  REQUIRE_THROWS_AS(Format(1, 2, 2, 1), malformed_format);  // r2 = 1
  REQUIRE_THROWS_AS(Format(0, 4, 5, 1), malformed_format);
}

TEST_CASE("Dynkin formats of the format table map to finite shapes") {
  for (Format f : {Format(1, 5, 6, 2), Format(1, 6, 7, 2), Format(1, 5, 7, 3), Format(1, 7, 8, 2),
                   Format(1, 5, 8, 4), Format(1, 6, 6, 1), Format(1, 4, 7, 4)}) {
    REQUIRE(classify_type(format_shape(f)).kind == LieKind::Finite);
  }
  REQUIRE(classify_type(format_shape(Format(1, 6, 8, 3))).kind == LieKind::Affine);
}
