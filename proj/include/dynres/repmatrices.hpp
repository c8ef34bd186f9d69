#ifndef DYNRES_REPMATRICES_HPP
#define DYNRES_REPMATRICES_HPP

#include <map>
#include <mutex>

#include "dynres/freudenthal.hpp"
#include "dynres/linalg.hpp"
#include "dynres/weyl.hpp"

namespace dynres {

// Small dense integer matrix.
struct IMat {
  int n = 0;
  std::vector<long long> a;

  IMat() = default;
  explicit IMat(int n_) : n(n_), a(static_cast<size_t>(n_) * n_, 0) {}
  long long& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  long long at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  bool is_zero() const {
    for (long long v : a)
      if (v != 0) return false;
    return true;
  }
  IMat operator*(const IMat& o) const {
    IMat r(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        long long v = at(i, k);
        if (v == 0) continue;
        for (int j = 0; j < n; ++j) r.at(i, j) += v * o.at(k, j);
      }
    return r;
  }
  IMat operator-(const IMat& o) const {
    IMat r(*this);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
    return r;
  }
  IMat operator+(const IMat& o) const {
    IMat r(*this);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
    return r;
  }
  IMat scaled(long long c) const {
    IMat r(*this);
    for (auto& v : r.a) v *= c;
    return r;
  }
  bool operator==(const IMat& o) const { return n == o.n && a == o.a; }
};

inline IMat commutator(const IMat& x, const IMat& y) { return x * y - y * x; }

// Explicit matrices for a representation: weight-basis vectors, actions of the
// Chevalley generators, and (built on demand) of all root vectors.
struct RepMatrices {
  TShape shape;
  int node = -1;  // fundamental node; -1 for the adjoint
  int dim = 0;
  std::vector<WCoord> weights;      // basis weights, fundamental-weight coordinates
  std::vector<IMat> e, f;           // generator actions per node
  std::map<RootVec, IMat> root_action;  // lazily built negative/positive root vectors

  // x1-degree of basis vector b relative to the top (0 = top level).
  std::vector<int> level_from_top(const RootSystem& rs, int t) const {
    // weight pairing with h_t equals the alpha_t-coefficient in root coords;
    // differences of basis weights are integral combinations of roots, so the
    // relative degree is integral.
    std::vector<Rat> degs(dim);
    auto inv = rs.fundamental_weights_root_coords();
    Rat top(-1);
    bool first = true;
    for (int b = 0; b < dim; ++b) {
      Rat d(0);
      for (int k = 0; k < rs.rank(); ++k) d += inv[t][k] * Rat(weights[b][k]);
      degs[b] = d;
      if (first || d > top) top = d;
      first = false;
    }
    std::vector<int> out(dim);
    for (int b = 0; b < dim; ++b) {
      Rat rel = top - degs[b];
      assert(denominator(rel) == 1);
      out[b] = static_cast<int>(numerator(rel));
    }
    return out;
  }
};

namespace detail {

// Action of the root vector built by the fixed recursion x_{-gamma} =
// [f_s, x_{-(gamma - alpha_s)}] with s minimal; same word in every
// representation, so the element is representation-independent.
inline const IMat& root_vector_action(const RootSystem& rs, RepMatrices& rep, const RootVec& gamma_signed) {
  auto it = rep.root_action.find(gamma_signed);
  if (it != rep.root_action.end()) return it->second;
  bool negative = false;
  RootVec gamma(gamma_signed);
  for (int c : gamma)
    if (c < 0) negative = true;
  if (negative)
    for (int& c : gamma) c = -c;
  int h = root_height(gamma);
  IMat result;
  if (h == 1) {
    int i = 0;
    while (gamma[i] == 0) ++i;
    result = negative ? rep.f[i] : rep.e[i];
  } else {
    int s = -1;
    for (int i = 0; i < rs.rank(); ++i) {
      RootVec rest(gamma);
      rest[i] -= 1;
      bool ok = rest[i] >= 0 && rs.root_index(rest) >= 0 && root_height(rest) == h - 1;
      if (ok) {
        s = i;
        break;
      }
    }
    assert(s >= 0);
    RootVec rest(gamma);
    rest[s] -= 1;
    if (negative) {
      RootVec nrest(rest);
      for (int& c : nrest) c = -c;
      result = commutator(rep.f[s], root_vector_action(rs, rep, nrest));
    } else {
      result = commutator(rep.e[s], root_vector_action(rs, rep, rest));
    }
  }
  return rep.root_action.emplace(gamma_signed, std::move(result)).first->second;
}

}  // namespace detail

// Minuscule fundamental representation with all matrix entries in {0,+-1}.
// Signs: edges of the weight graph are signed greedily (forced by any
// completed square, +1 otherwise) and the relations are verified afterwards.
inline RepMatrices minuscule_rep(const RootSystem& rs, int node) {
  WCoord omega = rs.fundamental_weight_w(node);
  WeightOrbit orbit = weight_orbit(rs, omega);
  if (rs.weyl_dimension(omega) != Int(orbit.size()))
    throw not_minuscule("node " + rs.shape().node_name(node) + " is not minuscule");

  RepMatrices rep;
  rep.shape = rs.shape();
  rep.node = node;
  rep.dim = orbit.size();
  rep.weights = orbit.points;

  int n = rs.rank();
  // raising edges: a --i--> b when weight_b = weight_a + alpha_i
  struct Edge {
    int a, b, i;
    int sign = 0;
  };
  std::vector<Edge> edges;
  std::map<std::pair<int, int>, int> edge_at;  // (a, i) -> edge index
  for (int a = 0; a < rep.dim; ++a)
    for (int i = 0; i < n; ++i)
      if (orbit.points[a][i] == -1) {
        WCoord up = rs.reflect_weight(orbit.points[a], i);
        auto it = orbit.index.find(up);
        assert(it != orbit.index.end());
        edge_at[{a, i}] = static_cast<int>(edges.size());
        edges.push_back({a, it->second, i, 0});
      }

  // squares through an edge: (a -i-> b, a -j-> c, b -j-> d, c -i-> d)
  auto try_force = [&](int idx) -> bool {
    const Edge& E = edges[idx];
    for (int j = 0; j < n; ++j) {
      if (j == E.i) continue;
      auto aj = edge_at.find({E.a, j});
      auto bj = edge_at.find({E.b, j});
      if (aj == edge_at.end() || bj == edge_at.end()) continue;
      int c = edges[aj->second].b;
      auto ci = edge_at.find({c, E.i});
      if (ci == edge_at.end()) continue;
      int s1 = edges[aj->second].sign, s2 = edges[bj->second].sign, s3 = edges[ci->second].sign;
      if (s1 && s2 && s3) {
        // commuting square: sign(a,i) sign(b,j) = sign(a,j) sign(c,i)
        edges[idx].sign = s1 * s3 * s2;
        return true;
      }
    }
    return false;
  };
  for (;;) {
    bool progress = false;
    int first_unsigned = -1;
    for (size_t k = 0; k < edges.size(); ++k) {
      if (edges[k].sign != 0) continue;
      if (try_force(static_cast<int>(k)))
        progress = true;
      else if (first_unsigned < 0)
        first_unsigned = static_cast<int>(k);
    }
    if (progress) continue;
    if (first_unsigned < 0) break;
    edges[first_unsigned].sign = 1;  // gauge choice on a so-far-unconstrained edge
  }

  rep.e.assign(n, IMat(rep.dim));
  rep.f.assign(n, IMat(rep.dim));
  for (const Edge& E : edges) {
    rep.e[E.i].at(E.b, E.a) = E.sign;
    rep.f[E.i].at(E.a, E.b) = E.sign;
  }

  // consistency: [e_i, f_j] = delta_ij h_i and commuting squares closed
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IMat c = commutator(rep.e[i], rep.f[j]);
      if (i != j) {
        if (!c.is_zero()) throw math_error("minuscule sign gauge inconsistent: [e_i,f_j] != 0");
      } else {
        for (int a = 0; a < rep.dim; ++a)
          for (int b = 0; b < rep.dim; ++b) {
            long long want = (a == b) ? orbit.points[a][i] : 0;
            if (c.at(a, b) != want)
              throw math_error("minuscule sign gauge inconsistent: [e_i,f_i] != h_i");
          }
      }
      if (i != j && rs.cartan()[i][j] == 0) {
        if (!commutator(rep.e[i], rep.e[j]).is_zero())
          throw math_error("minuscule sign gauge inconsistent: distant e's do not commute");
      }
      if (i != j && rs.cartan()[i][j] == -1) {
        IMat ad2 = commutator(rep.e[i], commutator(rep.e[i], rep.e[j]));
        if (!ad2.is_zero()) throw math_error("minuscule sign gauge inconsistent: Serre relation");
      }
    }
  return rep;
}

// Adjoint representation of E6 built inside gl(27): root vectors are nested
// commutators of the generators acting on the 27-dimensional minuscule
// representation, the bracket is the matrix commutator, and the adjoint
// action is re-expanded over the root basis.
struct AdjointData {
  RepMatrices rep;            // the adjoint as RepMatrices (dim 78)
  std::vector<RootVec> basis_root;  // root of each root-vector basis element (empty slot for Cartan)
  int num_pos = 0;
  // Chevalley vectors inside gl(27), for closure verification
  std::vector<IMat> xs, ys, hs;
};

inline AdjointData adjoint_rep_e6(const RootSystem& rs) {
  if (classify_type(rs.shape()).name != "E6")
    throw unsupported_shape("adjoint construction is provided for E6 only");
  int n = rs.rank();
  TShape shape = rs.shape();
  RepMatrices rep27 = minuscule_rep(rs, shape.y_node(2));

  int N = rs.num_positive();
  // Chevalley-like vectors inside gl(27)
  std::vector<IMat> xs(N), ys(N);
  std::vector<IMat> hs(n);
  for (int k = 0; k < N; ++k) {
    RootVec g = rs.root(k);
    xs[k] = detail::root_vector_action(rs, rep27, g);
    RootVec neg(g);
    for (int& c : neg) c = -c;
    ys[k] = detail::root_vector_action(rs, rep27, neg);
  }
  for (int i = 0; i < n; ++i) hs[i] = commutator(rep27.e[i], rep27.f[i]);
  // normalize y so that [x_g, y_g] = h_g = sum coords(g) h_i
  for (int k = 0; k < N; ++k) {
    RootVec g = rs.root(k);
    IMat hg(rep27.dim);
    for (int i = 0; i < n; ++i) hg = hg + hs[i].scaled(g[i]);
    IMat br = commutator(xs[k], ys[k]);
    if (br == hg) continue;
    ys[k] = ys[k].scaled(-1);
    br = commutator(xs[k], ys[k]);
    if (!(br == hg)) throw math_error("adjoint construction: coroot normalization failed");
  }

  // basis of the adjoint: x_gamma (0..N-1), h_i (N..N+n-1), y_gamma (N+n..)
  AdjointData out;
  out.num_pos = N;
  RepMatrices& ad = out.rep;
  ad.shape = shape;
  ad.node = -1;
  ad.dim = 2 * N + n;
  ad.weights.resize(ad.dim);
  out.basis_root.resize(ad.dim, RootVec());
  auto omega_of_root = [&](const RootVec& g) {
    WCoord w(n, 0);
    for (int i = 0; i < n; ++i) w[i] = rs.pairing_root(g, i);
    return w;
  };
  for (int k = 0; k < N; ++k) {
    RootVec g = rs.root(k);
    ad.weights[k] = omega_of_root(g);
    out.basis_root[k] = g;
    RootVec neg(g);
    for (int& c : neg) c = -c;
    ad.weights[N + n + k] = omega_of_root(neg);
    out.basis_root[N + n + k] = neg;
  }
  for (int i = 0; i < n; ++i) ad.weights[N + i] = WCoord(n, 0);

  // expand a gl(27) element of known weight in the basis
  auto basis_mat = [&](int b) -> const IMat& {
    if (b < N) return xs[b];
    if (b < N + n) return hs[b - N];
    return ys[b - N - n];
  };
  auto expand = [&](const IMat& m, const RootVec& weight, std::vector<std::pair<int, long long>>& out_terms) {
    out_terms.clear();
    if (m.is_zero()) return;
    bool zero_weight = true;
    for (int c : weight) zero_weight = zero_weight && c == 0;
    if (!zero_weight) {
      int idx = rs.root_index(weight);
      if (idx < 0) throw math_error("adjoint expansion: image outside the root system");
      int b = idx < N ? idx : N + n + (idx - N);
      const IMat& base = basis_mat(b);
      // exact multiple check
      long long num = 0, den = 0;
      for (size_t t = 0; t < m.a.size(); ++t)
        if (base.a[t] != 0) {
          num = m.a[t];
          den = base.a[t];
          break;
        }
      if (den == 0) throw math_error("adjoint expansion: zero base vector");
      if (num % den != 0) throw math_error("adjoint expansion: non-integral coefficient");
      long long c = num / den;
      if (!(base.scaled(c) == m)) throw math_error("adjoint expansion: not a multiple of the root vector");
      out_terms.push_back({b, c});
      return;
    }
    // Cartan part: h's are diagonal; solve integer combination
    // h_i acts on basis vector v of weight w by w[i]; use n independent weights
    std::vector<long long> coef(n, 0);
    // diagonal of m in gl(27): m must be diagonal
    for (int r = 0; r < m.n; ++r)
      for (int c = 0; c < m.n; ++c)
        if (r != c && m.at(r, c) != 0) throw math_error("adjoint expansion: zero-weight image not diagonal");
    // solve sum_i coef_i * w27_b[i] = m[b,b] over basis vectors b of the 27
    RatMatrix sys(m.n, std::vector<Rat>(n + 1));
    for (int b = 0; b < m.n; ++b) {
      for (int i = 0; i < n; ++i) sys[b][i] = Rat(rep27.weights[b][i]);
      sys[b][n] = Rat(m.at(b, b));
    }
    std::vector<int> piv = rref(sys);
    std::vector<Rat> sol(n, Rat(0));
    for (size_t r = 0; r < piv.size(); ++r) {
      if (piv[r] == n) throw math_error("adjoint expansion: inconsistent Cartan part");
      sol[piv[r]] = sys[r][n];
    }
    for (int i = 0; i < n; ++i) {
      if (denominator(sol[i]) != 1) throw math_error("adjoint expansion: non-integral Cartan part");
      long long c = static_cast<long long>(numerator(sol[i]));
      if (c != 0) out_terms.push_back({N + i, c});
    }
    // verify
    IMat check(m.n);
    for (const auto& [b, c] : out_terms) check = check + basis_mat(b).scaled(c);
    if (!(check == m)) throw math_error("adjoint expansion: Cartan verification failed");
  };

  ad.e.assign(n, IMat(ad.dim));
  ad.f.assign(n, IMat(ad.dim));
  std::vector<std::pair<int, long long>> terms;
  for (int i = 0; i < n; ++i) {
    RootVec alpha(n, 0);
    alpha[i] = 1;
    for (int b = 0; b < ad.dim; ++b) {
      RootVec wb = out.basis_root[b];  // empty treated as zero via weights
      RootVec wplus, wminus;
      if (b >= N && b < N + n) {
        wplus = alpha;
        wminus = alpha;
        for (int& c : wminus) c = -c;
      } else {
        wplus = wb;
        wminus = wb;
        for (int t = 0; t < n; ++t) {
          wplus[t] += alpha[t];
          wminus[t] -= alpha[t];
        }
      }
      expand(commutator(rep27.e[i], basis_mat(b)), wplus, terms);
      for (const auto& [row, c] : terms) ad.e[i].at(row, b) = c;
      expand(commutator(rep27.f[i], basis_mat(b)), wminus, terms);
      for (const auto& [row, c] : terms) ad.f[i].at(row, b) = c;
    }
  }
  out.xs = std::move(xs);
  out.ys = std::move(ys);
  out.hs = std::move(hs);
  return out;
}

// exp of a nilpotent rational matrix.
inline RatMatrix rat_exp_nilpotent(const RatMatrix& m, int max_pow = 64) {
  int n = static_cast<int>(m.size());
  RatMatrix acc(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) acc[i][i] = 1;
  RatMatrix power = acc;
  Rat fact(1);
  for (int k = 1; k <= max_pow; ++k) {
    // power = power * m
    RatMatrix next(n, std::vector<Rat>(n, Rat(0)));
    bool nonzero = false;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        if (power[i][l] == 0) continue;
        for (int j = 0; j < n; ++j) {
          if (m[l][j] == 0) continue;
          next[i][j] += power[i][l] * m[l][j];
          nonzero = true;
        }
      }
    if (!nonzero) return acc;
    power = std::move(next);
    fact *= k;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (power[i][j] != 0) acc[i][j] += power[i][j] / fact;
  }
  throw math_error("rat_exp_nilpotent: matrix is not nilpotent within the cap");
}

// Lift of a Weyl group element to the representation: product over the word
// of exp(f_t) exp(-e_t) exp(f_t).
inline RatMatrix weyl_lift(const RepMatrices& rep, const std::vector<int>& word) {
  int d = rep.dim;
  auto to_rat = [&](const IMat& m, long long scale) {
    RatMatrix r(d, std::vector<Rat>(d, Rat(0)));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (m.at(i, j) != 0) r[i][j] = Rat(scale * m.at(i, j));
    return r;
  };
  RatMatrix out(d, std::vector<Rat>(d, Rat(0)));
  for (int i = 0; i < d; ++i) out[i][i] = 1;
  auto mul = [&](const RatMatrix& a, const RatMatrix& b) {
    RatMatrix r(d, std::vector<Rat>(d, Rat(0)));
    for (int i = 0; i < d; ++i)
      for (int l = 0; l < d; ++l) {
        if (a[i][l] == 0) continue;
        for (int j = 0; j < d; ++j) {
          if (b[l][j] == 0) continue;
          r[i][j] += a[i][l] * b[l][j];
        }
      }
    return r;
  };
  for (int t : word) {
    RatMatrix sf = rat_exp_nilpotent(to_rat(rep.f[t], 1));
    RatMatrix se = rat_exp_nilpotent(to_rat(rep.e[t], -1));
    RatMatrix lift = mul(mul(sf, se), sf);
    out = mul(out, lift);
  }
  return out;
}

}  // namespace dynres

#endif
