#ifndef DYNRES_DIAGRAM_HPP
#define DYNRES_DIAGRAM_HPP

#include <cassert>
#include <string>
#include <vector>

#include "dynres/errors.hpp"

namespace dynres {

// Three-armed diagram T_{p,q,r}: arms of length p-1, q-1, r-1 hang off the
// central node u.  Canonical node order (fixed for all serialized output):
//   x_{p-1}, ..., x_1, u, y_1, ..., y_{q-1}, z_1, ..., z_{r-1}
struct TShape {
  int p = 1, q = 1, r = 1;

  TShape() = default;
  TShape(int p_, int q_, int r_) : p(p_), q(q_), r(r_) {
    if (p < 1 || q < 1 || r < 1) throw math_error("TShape arms must be >= 1");
  }

  int num_nodes() const { return p + q + r - 2; }

  // Node indices in the canonical order.
  int x_node(int i) const {  // x_i, 1 <= i <= p-1
    assert(i >= 1 && i <= p - 1);
    return p - 1 - i;
  }
  int u_node() const { return p - 1; }
  int y_node(int j) const {  // y_j, 1 <= j <= q-1
    assert(j >= 1 && j <= q - 1);
    return p - 1 + j;
  }
  int z_node(int k) const {  // z_k, 1 <= k <= r-1
    assert(k >= 1 && k <= r - 1);
    return p + q - 2 + k;
  }

  std::string node_name(int idx) const {
    if (idx < p - 1) return "x" + std::to_string(p - 1 - idx);
    if (idx == p - 1) return "u";
    if (idx <= p + q - 2) return "y" + std::to_string(idx - (p - 1));
    return "z" + std::to_string(idx - (p + q - 2));
  }

  int node_by_name(const std::string& name) const {
    for (int i = 0; i < num_nodes(); ++i)
      if (node_name(i) == name) return i;
    throw math_error("no node named '" + name + "' in T_{" + std::to_string(p) + "," +
                     std::to_string(q) + "," + std::to_string(r) + "}");
  }

  bool adjacent(int a, int b) const {
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    int u = u_node();
    // consecutive within the x-chain ... u ... y-chain
    if (b < p + q - 1 && b == a + 1) return true;
    // z-chain: u - z_1 - z_2 - ...
    if (a == u && b == p + q - 2 + 1 && r >= 2) return true;
    if (a >= p + q - 1 && b == a + 1) return true;
    return false;
  }

  bool operator==(const TShape& o) const { return p == o.p && q == o.q && r == o.r; }
};

using CartanMatrix = std::vector<std::vector<int>>;

inline CartanMatrix cartan_matrix(const TShape& s) {
  int n = s.num_nodes();
  CartanMatrix A(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      A[i][j] = (i == j) ? 2 : (s.adjacent(i, j) ? -1 : 0);
  return A;
}

enum class LieKind { Finite, Affine, Indefinite };

struct Classification {
  LieKind kind;
  std::string name;  // "A3", "D5", "E6", ... ; affine: "~E7"; indefinite: ""
};

inline Classification classify_type(const TShape& s) {
  // Dynkin iff 1/p + 1/q + 1/r > 1; affine iff == 1.  Compare via q*r + p*r + p*q vs p*q*r.
  long long lhs = 1LL * s.q * s.r + 1LL * s.p * s.r + 1LL * s.p * s.q;
  long long rhs = 1LL * s.p * s.q * s.r;
  int n = s.num_nodes();
  if (lhs > rhs) {
    int a = s.p, b = s.q, c = s.r;
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    std::string name;
    if (a == 1)
      name = "A" + std::to_string(n);
    else if (a == 2 && b == 2)
      name = "D" + std::to_string(n);
    else
      name = "E" + std::to_string(n);  // (2,3,3),(2,3,4),(2,3,5)
    return {LieKind::Finite, name};
  }
  if (lhs == rhs) return {LieKind::Affine, "~E" + std::to_string(n - 1)};
  return {LieKind::Indefinite, ""};
}

// Resolution format (f0,f1,f2,f3) with f0 = r1, f1 = r1+r2, f2 = r2+r3, f3 = r3.
struct Format {
  int f0 = 0, f1 = 0, f2 = 0, f3 = 0;

  Format() = default;
  Format(int a, int b, int c, int d) : f0(a), f1(b), f2(c), f3(d) {
    if (f1 - f0 != f2 - f3)
      throw malformed_format("format violates f1 - f0 = f2 - f3");
    if (r1() < 1 || r2() < 2 || r3() < 1)
      throw malformed_format("format violates r1 >= 1, r2 >= 2, r3 >= 1");
  }

  int r1() const { return f0; }
  int r2() const { return f1 - f0; }
  int r3() const { return f3; }

  bool operator==(const Format& o) const {
    return f0 == o.f0 && f1 == o.f1 && f2 == o.f2 && f3 == o.f3;
  }

  std::string str() const {
    return "(" + std::to_string(f0) + "," + std::to_string(f1) + "," + std::to_string(f2) +
           "," + std::to_string(f3) + ")";
  }
};

// (f0,f1,f2,f3) <-> T_{r1+1, r2-1, r3+1}
inline TShape format_shape(const Format& f) { return TShape(f.r1() + 1, f.r2() - 1, f.r3() + 1); }

inline Format shape_format(const TShape& s) {
  return Format(s.p - 1, (s.p - 1) + (s.q + 1), (s.q + 1) + (s.r - 1), s.r - 1);
}

inline bool format_is_dynkin(const Format& f) {
  return classify_type(format_shape(f)).kind == LieKind::Finite;
}

}  // namespace dynres

#endif
