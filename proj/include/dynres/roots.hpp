#ifndef DYNRES_ROOTS_HPP
#define DYNRES_ROOTS_HPP

#include <algorithm>
#include <map>
#include <vector>

#include "dynres/diagram.hpp"
#include "dynres/rational.hpp"

namespace dynres {

// Integer coordinate vector in the simple-root basis {alpha_i}.
using RootVec = std::vector<int>;
// Integer coordinate vector in the fundamental-weight basis (pairings with coroots).
using WCoord = std::vector<long long>;

// Rational weight with both coordinate views.
struct WeightVec {
  std::vector<Rat> omega;  // fundamental-weight coordinates
  std::vector<Rat> root;   // simple-root coordinates (via A^{-1})
};

inline int root_height(const RootVec& v) {
  int h = 0;
  for (int c : v) h += c;
  return h;
}

// Root system of a finite-type diagram, generated by closing the simple roots
// under simple reflections (no type-specific tables).
class RootSystem {
 public:
  explicit RootSystem(const TShape& shape)
      : shape_(shape), n_(shape.num_nodes()), A_(cartan_matrix(shape)) {
    cls_ = classify_type(shape);
    if (cls_.kind != LieKind::Finite) throw non_finite_type();
    generate();
  }

  const TShape& shape() const { return shape_; }
  int rank() const { return n_; }
  const CartanMatrix& cartan() const { return A_; }
  const Classification& type() const { return cls_; }

  int num_positive() const { return static_cast<int>(positive_.size()); }
  const std::vector<RootVec>& positive_roots() const { return positive_; }

  // Roots indexed 0..2N-1: positives first (sorted by height then lex), then
  // their negatives in the same order.
  int num_roots() const { return 2 * num_positive(); }
  RootVec root(int idx) const {
    int N = num_positive();
    if (idx < N) return positive_[idx];
    RootVec v = positive_[idx - N];
    for (int& c : v) c = -c;
    return v;
  }
  int root_index(const RootVec& v) const {
    auto it = index_.find(v);
    return it == index_.end() ? -1 : it->second;
  }
  int negate_root(int idx) const {
    int N = num_positive();
    return idx < N ? idx + N : idx - N;
  }

  // <alpha_i^vee, v> for v in simple-root coordinates.
  int pairing_root(const RootVec& v, int i) const {
    int s = 0;
    for (int j = 0; j < n_; ++j) s += A_[i][j] * v[j];
    return s;
  }

  // s_i on simple-root coordinates.
  RootVec reflect_root(RootVec v, int i) const {
    v[i] -= pairing_root(v, i);
    return v;
  }

  // s_i on fundamental-weight coordinates.
  WCoord reflect_weight(WCoord w, int i) const {
    long long wi = w[i];
    for (int j = 0; j < n_; ++j) w[j] -= wi * A_[i][j];
    return w;
  }

  // s_i on rational simple-root coordinates.
  std::vector<Rat> reflect_root_coords(std::vector<Rat> v, int i) const {
    Rat pairing(0);
    for (int j = 0; j < n_; ++j) pairing += Rat(A_[i][j]) * v[j];
    v[i] -= pairing;
    return v;
  }

  // Image of root #idx under s_i, as an index.
  int reflect_root_index(int idx, int i) const {
    int r = root_index(reflect_root(root(idx), i));
    assert(r >= 0);
    return r;
  }

  // <alpha^vee, mu> for a root alpha (simple-root coords) and mu in weight coords.
  // Valid in the simply-laced normalization (alpha, alpha) = 2.
  long long pairing_coroot(const RootVec& alpha, const WCoord& mu) const {
    long long s = 0;
    for (int i = 0; i < n_; ++i) s += static_cast<long long>(alpha[i]) * mu[i];
    return s;
  }

  WCoord rho() const { return WCoord(n_, 1); }

  WCoord fundamental_weight_w(int i) const {
    WCoord w(n_, 0);
    w[i] = 1;
    return w;
  }

  // Columns of A^{-1}: fundamental weights in simple-root coordinates.
  std::vector<std::vector<Rat>> fundamental_weights_root_coords() const {
    return inverse_cartan();
  }

  std::vector<Rat> weight_to_root_coords(const WCoord& w) const {
    auto inv = inverse_cartan();
    std::vector<Rat> out(n_, Rat(0));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) out[i] += inv[i][j] * Rat(w[j]);
    return out;
  }

  // Greedy descent to the dominant chamber; returns the dominant representative.
  WCoord dominant_rep(WCoord w) const {
    bool again = true;
    while (again) {
      again = false;
      for (int i = 0; i < n_; ++i) {
        if (w[i] < 0) {
          w = reflect_weight(std::move(w), i);
          again = true;
          break;
        }
      }
    }
    return w;
  }

  bool is_dominant(const WCoord& w) const {
    for (long long c : w)
      if (c < 0) return false;
    return true;
  }

  // dim L(lambda) by the Weyl dimension formula (exact).
  Int weyl_dimension(const WCoord& lambda) const {
    WCoord lr(lambda);
    for (int i = 0; i < n_; ++i) lr[i] += 1;
    Int num = 1, den = 1;
    for (const RootVec& a : positive_) {
      num *= Int(pairing_coroot(a, lr));
      long long hp = 0;
      for (int i = 0; i < n_; ++i) hp += a[i];
      den *= Int(hp);
    }
    Int q = num / den;
    assert(q * den == num);
    return q;
  }

  // Order of the Weyl group generated by the nodes in J (parabolic subgroup).
  Int parabolic_order(const std::vector<int>& J) const {
    std::vector<bool> in(n_, false);
    for (int j : J) in[j] = true;
    std::vector<bool> seen(n_, false);
    Int order = 1;
    for (int s = 0; s < n_; ++s) {
      if (!in[s] || seen[s]) continue;
      // collect the connected component of s inside J
      std::vector<int> comp{s};
      seen[s] = true;
      for (size_t h = 0; h < comp.size(); ++h)
        for (int t = 0; t < n_; ++t)
          if (in[t] && !seen[t] && shape_.adjacent(comp[h], t)) {
            seen[t] = true;
            comp.push_back(t);
          }
      order *= component_group_order(comp);
    }
    return order;
  }

  Int weyl_order() const {
    std::vector<int> all(n_);
    for (int i = 0; i < n_; ++i) all[i] = i;
    return parabolic_order(all);
  }

  RootVec highest_root() const { return positive_.back(); }

 private:
  TShape shape_;
  int n_;
  CartanMatrix A_;
  Classification cls_;
  std::vector<RootVec> positive_;
  std::map<RootVec, int> index_;

  void generate() {
    std::map<RootVec, bool> seen;
    std::vector<RootVec> queue;
    for (int i = 0; i < n_; ++i) {
      RootVec e(n_, 0);
      e[i] = 1;
      seen[e] = true;
      queue.push_back(e);
    }
    for (size_t h = 0; h < queue.size(); ++h) {
      RootVec v = queue[h];
      for (int i = 0; i < n_; ++i) {
        RootVec w = reflect_root(v, i);
        bool pos = true;
        for (int c : w) pos = pos && c >= 0;
        if (!pos) continue;
        if (!seen.count(w)) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    positive_ = std::move(queue);
    std::sort(positive_.begin(), positive_.end(), [](const RootVec& a, const RootVec& b) {
      int ha = root_height(a), hb = root_height(b);
      if (ha != hb) return ha < hb;
      return a < b;
    });
    int N = static_cast<int>(positive_.size());
    for (int k = 0; k < N; ++k) index_[positive_[k]] = k;
    for (int k = 0; k < N; ++k) {
      RootVec v = positive_[k];
      for (int& c : v) c = -c;
      index_[v] = N + k;
    }
  }

  // Order of the Weyl group of one connected subdiagram, given as node list.
  Int component_group_order(const std::vector<int>& comp) const {
    int k = static_cast<int>(comp.size());
    // count neighbours within the component to detect a branch node
    int branch = -1;
    for (int a : comp) {
      int deg = 0;
      for (int b : comp)
        if (shape_.adjacent(a, b)) ++deg;
      if (deg >= 3) branch = a;
    }
    auto factorial = [](int m) {
      Int f = 1;
      for (int i = 2; i <= m; ++i) f *= i;
      return f;
    };
    if (branch < 0) return factorial(k + 1);  // path: type A_k
    // T-shape: arm lengths off the branch node
    std::vector<int> arms;
    for (int b : comp) {
      if (b == branch || !shape_.adjacent(branch, b)) continue;
      int len = 1, prev = branch, cur = b;
      for (;;) {
        int next = -1;
        for (int c : comp)
          if (c != prev && shape_.adjacent(cur, c)) next = c;
        if (next < 0) break;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    assert(arms.size() == 3);
    if (arms[0] == 1 && arms[1] == 1) {  // D_k
      Int f = factorial(k);
      Int p2 = 1;
      for (int i = 0; i < k - 1; ++i) p2 *= 2;
      return f * p2;
    }
    if (arms[0] == 1 && arms[1] == 2 && arms[2] == 2) return Int(51840);     // E6
    if (arms[0] == 1 && arms[1] == 2 && arms[2] == 3) return Int(2903040);   // E7
    if (arms[0] == 1 && arms[1] == 2 && arms[2] == 4) return Int(696729600); // E8
    throw non_finite_type("subdiagram is not of finite type");
  }

  std::vector<std::vector<Rat>> inverse_cartan() const {
    if (cls_.kind == LieKind::Affine) throw singular_cartan();
    int n = n_;
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m[i][j] = Rat(A_[i][j]);
      m[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int row = col; row < n; ++row)
        if (m[row][col] != 0) {
          piv = row;
          break;
        }
      if (piv < 0) throw singular_cartan();
      std::swap(m[col], m[piv]);
      Rat d = m[col][col];
      for (int j = col; j < 2 * n; ++j) m[col][j] /= d;
      for (int row = 0; row < n; ++row) {
        if (row == col || m[row][col] == 0) continue;
        Rat f = m[row][col];
        for (int j = col; j < 2 * n; ++j) m[row][j] -= f * m[col][j];
      }
    }
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
  }
};

// alpha_t-coefficient of a vector in simple-root coordinates.
inline int grading_degree(const RootVec& v, int t) { return v[t]; }
inline Rat grading_degree(const std::vector<Rat>& v, int t) { return v[t]; }

}  // namespace dynres

#endif
