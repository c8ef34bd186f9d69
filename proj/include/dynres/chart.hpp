#ifndef DYNRES_CHART_HPP
#define DYNRES_CHART_HPP

#include <climits>

#include "dynres/repmatrices.hpp"
#include "dynres/structmaps.hpp"

namespace dynres {

namespace detail {

// F2-side fundamental node: far end of the y-arm, or u when the arm is empty.
inline int y_end_node(const TShape& s) { return s.q >= 2 ? s.y_node(s.q - 1) : s.u_node(); }
inline int z_end_node(const TShape& s) { return s.r >= 2 ? s.z_node(s.r - 1) : s.u_node(); }

}  // namespace detail

// exp of the generic element Z = sum_gamma x_{-gamma} (x) xi_gamma over the
// given positive roots, acting on the representation.  Exact; truncates at
// the nilpotency index.
inline PolyMatrix generic_exp(const RootSystem& rs, RepMatrices& rep,
                              const std::vector<RootVec>& vars) {
  int nv = static_cast<int>(vars.size());
  int d = rep.dim;
  PolyMatrix Z(d, d, nv);
  for (int v = 0; v < nv; ++v) {
    RootVec neg(vars[v]);
    for (int& c : neg) c = -c;
    const IMat& m = detail::root_vector_action(rs, rep, neg);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (m.at(i, j) != 0) Z.at(i, j) += MultiPoly::variable(nv, v, Rat(m.at(i, j)));
  }
  PolyMatrix acc = PolyMatrix::identity(d, nv);
  PolyMatrix power = acc;
  Rat fact(1);
  for (int k = 1;; ++k) {
    power = power * Z;
    if (power.is_zero()) break;
    fact *= k;
    PolyMatrix scaled = power;
    for (auto& p : scaled.entries) p.scale(Rat(1) / fact);
    acc = acc + scaled;
    if (k > 64) throw math_error("generic_exp: action is not nilpotent within the cap");
  }
  return acc;
}

// Multiply a rational matrix (Weyl lift) with a polynomial matrix.
inline PolyMatrix rat_poly_mul(const RatMatrix& a, const PolyMatrix& b) {
  int rows = static_cast<int>(a.size());
  PolyMatrix r(rows, b.cols, b.nvars);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < b.rows; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < b.cols; ++j) {
        if (b.at(k, j).is_zero()) continue;
        MultiPoly t = b.at(k, j);
        t.scale(a[i][k]);
        r.at(i, j) += t;
      }
    }
  return r;
}

// Affine patch sigma C^e of G/P_{x1} with its Plucker coordinate polynomials
// and the Schubert ideal I_sigma (the coordinates of the bottom z1-graded
// component of L(omega_{x1})^dual).
struct SchubertChart {
  Format format;
  TShape shape;
  std::vector<int> sigma_word;
  int nvars = 0;
  std::vector<RootVec> var_roots;       // chart variable <-> x1-positive root
  std::vector<long long> var_degrees;   // x1-height grading
  std::vector<std::string> var_names;
  std::vector<MultiPoly> plucker;       // full coordinate vector over the V_x basis
  std::vector<int> bottom;              // V_x basis indices of the z1-top level
  IdealHandle ideal;
};

namespace detail {

struct ChartReps {
  RootSystem rs;
  RepMatrices vx;
  bool adjoint = false;

  explicit ChartReps(const Format& f) : rs(format_shape(f)) {
    const TShape& s = rs.shape();
    if (f.f0 != 1) throw unsupported_format("charts require f0 = 1");
    if (f == Format(1, 5, 6, 2)) {
      vx = adjoint_rep_e6(rs).rep;
      adjoint = true;
    } else if (s.r == 2 || s.q <= 2) {
      // D-family (and the complete intersection A3 case): x1 is minuscule
      vx = minuscule_rep(rs, s.x_node(1));
    } else {
      throw unsupported_format("explicit charts cover the D_n families and (1,5,6,2) only");
    }
  }
};

inline std::vector<RootVec> grading_positive_roots(const RootSystem& rs, int t) {
  std::vector<RootVec> out;
  for (const RootVec& g : rs.positive_roots())
    if (g[t] > 0) out.push_back(g);
  return out;
}

// index of the unique basis vector in the top t-level; throws if not 1-dim
inline int top_level_index(const RootSystem& rs, const RepMatrices& rep, int t) {
  std::vector<int> lv = rep.level_from_top(rs, t);
  int found = -1;
  for (int b = 0; b < rep.dim; ++b)
    if (lv[b] == 0) {
      if (found >= 0) throw math_error("top graded component is not one-dimensional");
      found = b;
    }
  return found;
}

}  // namespace detail

inline SchubertChart patch_parametrization(const Format& format, const std::vector<int>& sigma_word,
                                           const Budget& budget = Budget()) {
  detail::ChartReps reps(format);
  const RootSystem& rs = reps.rs;
  const TShape& shape = rs.shape();
  int x1 = shape.x_node(1), z1 = shape.z_node(1);

  SchubertChart chart;
  chart.format = format;
  chart.shape = shape;
  chart.sigma_word = sigma_word;
  chart.var_roots = detail::grading_positive_roots(rs, x1);
  chart.nvars = static_cast<int>(chart.var_roots.size());
  for (int v = 0; v < chart.nvars; ++v) {
    chart.var_degrees.push_back(chart.var_roots[v][x1]);
    chart.var_names.push_back("t" + std::to_string(v));
  }

  PolyMatrix expZ = generic_exp(rs, reps.vx, chart.var_roots);
  RatMatrix sig = weyl_lift(reps.vx, sigma_word);
  int top = detail::top_level_index(rs, reps.vx, x1);
  // u = sigma exp(Z) v_top
  PolyMatrix col(reps.vx.dim, 1, chart.nvars);
  for (int i = 0; i < reps.vx.dim; ++i) col.at(i, 0) = expZ.at(i, top);
  PolyMatrix u = rat_poly_mul(sig, col);

  // normalize so the p_sigma coordinate is 1
  WCoord sw = reps.vx.weights[top];
  WeylElement sigma = weyl_from_word(rs, sigma_word);
  WCoord target = weyl_apply(rs, sigma, sw);
  int anchor = -1;
  for (int b = 0; b < reps.vx.dim; ++b)
    if (reps.vx.weights[b] == target) {
      if (anchor >= 0) throw math_error("extremal weight space is not one-dimensional");
      anchor = b;
    }
  MultiPoly pa = u.at(anchor, 0);
  if (pa.degree() != 0 || pa.is_zero())
    throw math_error("patch normalization: p_sigma coordinate is not a unit");
  Rat unit = pa.leading().c;
  for (int b = 0; b < reps.vx.dim; ++b) {
    MultiPoly p = u.at(b, 0);
    p.scale(Rat(1) / unit);
    chart.plucker.push_back(std::move(p));
  }

  // bottom z1-component of the dual: coordinates at the top z1-level of V_x
  std::vector<int> zl = reps.vx.level_from_top(rs, z1);
  for (int b = 0; b < reps.vx.dim; ++b)
    if (zl[b] == 0) chart.bottom.push_back(b);
  if (static_cast<int>(chart.bottom.size()) != format.f1)
    throw math_error("top z1-level does not have dimension f1");

  std::vector<MultiPoly> gens;
  for (int b : chart.bottom) gens.push_back(chart.plucker[b]);
  chart.ideal = IdealHandle(chart.nvars, std::move(gens));
  (void)budget;
  return chart;
}

inline const IdealHandle& schubert_ideal(const SchubertChart& chart) { return chart.ideal; }

namespace detail {

struct ChainVector {
  int index;  // basis index in the representation
  int sign;   // +-1 relative to the stored weight basis
};

// Walk a minuscule level of a representation down from its Levi-highest
// vector along the chain lowering operators; produces a deterministically
// signed ordered basis of the level.
inline std::vector<ChainVector> chain_basis(const RepMatrices& rep, const std::vector<int>& level,
                                            const std::vector<int>& chain) {
  // Levi-highest: maximize a strictly concave functional of the chain
  // pairings (concavity makes it strictly positive on the chain's positive
  // roots in pairing coordinates), then lexicographic tie-break.
  int best = -1;
  std::vector<long long> best_key;
  long long len = static_cast<long long>(chain.size());
  for (int b : level) {
    std::vector<long long> key;
    for (int t : chain) key.push_back(rep.weights[b][t]);
    long long height = 0;
    for (size_t k = 0; k < key.size(); ++k)
      height += static_cast<long long>(k + 1) * (len - static_cast<long long>(k)) * key[k];
    key.insert(key.begin(), height);
    if (best < 0 || key > best_key) {
      best = b;
      best_key = key;
    }
  }
  std::vector<char> in_level(rep.dim, 0);
  for (int b : level) in_level[b] = 1;
  std::vector<ChainVector> out{{best, 1}};
  std::vector<char> used(rep.dim, 0);
  used[best] = 1;
  while (out.size() < level.size()) {
    const ChainVector& cur = out.back();
    int next = -1, coef = 0;
    for (int t : chain) {
      // f_t maps basis cur.index to a single target row in a minuscule level
      for (int row = 0; row < rep.dim; ++row) {
        long long v = rep.f[t].at(row, cur.index);
        if (v == 0) continue;
        if (!in_level[row] || used[row]) continue;
        if (next >= 0 && next != row) throw math_error("chain walk is not unique");
        next = row;
        coef = static_cast<int>(v);
      }
      if (next >= 0) break;
    }
    if (next < 0) throw math_error("chain walk stalled before exhausting the level");
    used[next] = 1;
    out.push_back({next, cur.sign * coef});
  }
  return out;
}

// sl(F1) and sl(F2) chains (Example-of-subalgebras node lists).
inline std::vector<int> f1_chain_nodes(const TShape& s) { return f1_chain(s); }
inline std::vector<int> f2_chain_nodes(const TShape& s) {
  std::vector<int> chain;
  for (int k = s.q - 1; k >= 1; --k) chain.push_back(s.y_node(k));
  chain.push_back(s.u_node());
  for (int k = 1; k <= s.r - 1; ++k) chain.push_back(s.z_node(k));
  return chain;
}

// Invariant pairing between a level carrying a Levi representation and a
// level carrying its dual, in chain bases.  pair_of[m] is the partner index,
// coef[m] the pairing value; propagated from the first pair and verified.
struct LevelPairing {
  std::vector<int> pair_of;
  std::vector<Rat> coef;
};

inline LevelPairing equivariant_pairing(const RepMatrices& repA, const std::vector<ChainVector>& A,
                                        const RepMatrices& repB, const std::vector<ChainVector>& B,
                                        const std::vector<int>& chain) {
  size_t m = A.size();
  if (B.size() != m) throw math_error("pairing levels have different dimensions");
  // match by opposite chain pairings
  auto key_of = [&](const RepMatrices& rep, int idx, int s) {
    std::vector<long long> k;
    for (int t : chain) k.push_back(s * rep.weights[idx][t]);
    return k;
  };
  LevelPairing P;
  P.pair_of.assign(m, -1);
  P.coef.assign(m, Rat(0));
  for (size_t a = 0; a < m; ++a) {
    auto ka = key_of(repA, A[a].index, 1);
    int found = -1;
    for (size_t b = 0; b < m; ++b) {
      auto kb = key_of(repB, B[b].index, -1);
      if (ka == kb) {
        if (found >= 0) throw math_error("pairing match is ambiguous");
        found = static_cast<int>(b);
      }
    }
    if (found < 0) throw math_error("pairing match failed");
    P.pair_of[a] = found;
  }

  // action of a chain generator on a chain vector, inside the level
  auto act = [&](const RepMatrices& rep, const std::vector<ChainVector>& V, bool lower, int t,
                 int vi) -> std::pair<int, long long> {
    const IMat& g = lower ? rep.f[t] : rep.e[t];
    for (size_t w = 0; w < V.size(); ++w) {
      long long c = g.at(V[w].index, V[vi].index);
      if (c != 0) return {static_cast<int>(w), c * V[vi].sign * V[w].sign};
    }
    return {-1, 0};
  };

  P.coef[0] = 1;
  std::vector<char> known(m, 0);
  known[0] = 1;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int t : chain) {
      for (size_t a = 0; a < m; ++a) {
        // <f_t A_a, B_b> + <A_a, f_t B_b> = 0 with b chosen to hit matched pairs
        auto [a2, ca] = act(repA, A, true, t, static_cast<int>(a));
        if (a2 >= 0) {
          // term1 pairs A_{a2} with B_{pair_of[a2]}; term2 needs f_t B_b = B_{pair_of[a]}
          for (size_t b0 = 0; b0 < m; ++b0) {
            auto [b2, cb] = act(repB, B, true, t, static_cast<int>(b0));
            if (b2 == P.pair_of[a] && static_cast<int>(b0) == P.pair_of[a2]) {
              // <f A_a, B_{b0}> + <A_a, f B_{b0}> = 0
              // ca * coef[a2] + cb * coef[a] = 0
              if (known[a2] && !known[a]) {
                P.coef[a] = -Rat(ca) * P.coef[a2] / Rat(cb);
                known[a] = 1;
                progress = true;
              } else if (known[a] && !known[a2]) {
                P.coef[a2] = -Rat(cb) * P.coef[a] / Rat(ca);
                known[a2] = 1;
                progress = true;
              } else if (known[a] && known[a2]) {
                if (Rat(ca) * P.coef[a2] + Rat(cb) * P.coef[a] != 0)
                  throw math_error("equivariant pairing inconsistent");
              }
            }
          }
        }
      }
    }
  }
  for (size_t a = 0; a < m; ++a)
    if (!known[a]) throw math_error("equivariant pairing did not propagate to all vectors");
  return P;
}

}  // namespace detail

// Length-3 resolution of the chart's coordinate ring from the three
// representations, with derived twists.
struct SchubertResolution {
  GradedComplex complex;
  // representation-theoretic structure map in degree one (columns matched to
  // wedge pairs of F1 up to per-column units; normalize before use)
  PolyMatrix w31_hint;
  bool has_hint = false;
};

inline SchubertResolution schubert_resolution(const SchubertChart& chart,
                                              const Budget& budget = Budget()) {
  detail::ChartReps reps(chart.format);
  const RootSystem& rs = reps.rs;
  const TShape& shape = rs.shape();
  int x1 = shape.x_node(1), z1 = shape.z_node(1);
  int f1 = chart.format.f1, f2 = chart.format.f2, f3 = chart.format.f3;

  RepMatrices vy = minuscule_rep(rs, detail::y_end_node(shape));
  RepMatrices vz = minuscule_rep(rs, detail::z_end_node(shape));

  PolyMatrix My = rat_poly_mul(weyl_lift(vy, chart.sigma_word), generic_exp(rs, vy, chart.var_roots));
  PolyMatrix Mz = rat_poly_mul(weyl_lift(vz, chart.sigma_word), generic_exp(rs, vz, chart.var_roots));

  auto level_set = [&](const RepMatrices& rep, int t, int lv) {
    std::vector<int> idx;
    std::vector<int> levels = rep.level_from_top(rs, t);
    for (int b = 0; b < rep.dim; ++b)
      if (levels[b] == lv) idx.push_back(b);
    return idx;
  };

  std::vector<int> chain1 = detail::f1_chain_nodes(shape);
  std::vector<int> chain2 = detail::f2_chain_nodes(shape);
  std::vector<int> chain3 = detail::f3_chain(shape);

  // chain bases for the copies of F1, F2, F2*, F3*
  auto f1x = detail::chain_basis(reps.vx, level_set(reps.vx, z1, 0), chain1);
  auto f1y = detail::chain_basis(vy, level_set(vy, z1, 0), chain1);
  auto f2y = detail::chain_basis(vy, level_set(vy, x1, 0), chain2);
  auto f2z = detail::chain_basis(vz, level_set(vz, x1, 0), chain2);
  auto f3z = detail::chain_basis(vz, level_set(vz, z1, 0), chain3);
  if (static_cast<int>(f1x.size()) != f1 || static_cast<int>(f1y.size()) != f1 ||
      static_cast<int>(f2y.size()) != f2 || static_cast<int>(f2z.size()) != f2 ||
      static_cast<int>(f3z.size()) != f3)
    throw math_error("graded level dimensions do not match the format");

  GradedComplex C;
  C.format = chart.format;
  C.nvars = chart.nvars;

  // d1: the z1-top of V_x carries F1*, so its coordinates are paired with the
  // F1 copy sitting in V_y through the invariant pairing
  detail::LevelPairing pi1 = detail::equivariant_pairing(reps.vx, f1x, vy, f1y, chain1);
  C.d1 = PolyMatrix(1, f1, chart.nvars);
  for (int m = 0; m < f1; ++m) {
    MultiPoly p = chart.plucker[f1x[m].index];
    if (f1x[m].sign < 0) p = -p;
    p.scale(Rat(1) / pi1.coef[m]);
    C.d1.at(0, pi1.pair_of[m]) = std::move(p);
  }

  // d2 from V_y
  C.d2 = PolyMatrix(f1, f2, chart.nvars);
  for (int k = 0; k < f1; ++k)
    for (int c = 0; c < f2; ++c) {
      MultiPoly p = My.at(f1y[k].index, f2y[c].index);
      if (f1y[k].sign * f2y[c].sign < 0) p = -p;
      C.d2.at(k, c) = std::move(p);
    }

  // d3* from V_z, then dualize through the F2 pairing
  PolyMatrix d3s(f3, f2, chart.nvars);
  for (int m = 0; m < f3; ++m)
    for (int b = 0; b < f2; ++b) {
      MultiPoly p = Mz.at(f3z[m].index, f2z[b].index);
      if (f3z[m].sign * f2z[b].sign < 0) p = -p;
      d3s.at(m, b) = std::move(p);
    }
  detail::LevelPairing pi2 = detail::equivariant_pairing(vz, f2z, vy, f2y, chain2);
  C.d3 = PolyMatrix(f2, f3, chart.nvars);
  for (int b = 0; b < f2; ++b)
    for (int j = 0; j < f3; ++j) {
      MultiPoly p = d3s.at(j, b);
      p.scale(Rat(1) / pi2.coef[b]);
      C.d3.at(pi2.pair_of[b], j) = std::move(p);
    }

  // Twists in the x1-height grading of the variables.  Entry degrees are
  // forced by weight rigidity: entry (b,c) of sigma exp Z lives in degree
  // level(sigma^{-1} wt_b) - level(c), which also covers zero entries.
  C.s0 = {0};
  C.s1.assign(f1, 0);
  C.s2.assign(f2, 0);
  C.s3.assign(f3, 0);
  auto graded_degree = [&](const MultiPoly& p) -> long long {
    if (p.is_zero()) return -1;
    long long d = -1;
    for (const auto& t : p.terms()) {
      long long dt = 0;
      for (int v = 0; v < chart.nvars; ++v) dt += static_cast<long long>(t.e[v]) * chart.var_degrees[v];
      if (d < 0)
        d = dt;
      else if (d != dt)
        throw math_error("chart differential entry is not weight-homogeneous");
    }
    return d;
  };
  WeylElement sigma_inv;
  {
    std::vector<int> rev(chart.sigma_word.rbegin(), chart.sigma_word.rend());
    sigma_inv = weyl_from_word(rs, rev);
  }
  auto predicted = [&](const RepMatrices& rep, const std::vector<int>& levels, int row_idx,
                       int col_idx) -> long long {
    WCoord w = weyl_apply(rs, sigma_inv, rep.weights[row_idx]);
    for (int b = 0; b < rep.dim; ++b)
      if (rep.weights[b] == w) return levels[b] - levels[col_idx];
    throw math_error("weight left the representation under sigma inverse");
  };
  std::vector<int> lvx = reps.vx.level_from_top(rs, x1);
  std::vector<int> lvy = vy.level_from_top(rs, x1);
  std::vector<int> lvz = vz.level_from_top(rs, x1);
  int topx = detail::top_level_index(rs, reps.vx, x1);
  for (int m = 0; m < f1; ++m)
    C.s1[pi1.pair_of[m]] = predicted(reps.vx, lvx, f1x[m].index, topx);
  for (int c = 0; c < f2; ++c)
    C.s2[c] = C.s1[0] + predicted(vy, lvy, f1y[0].index, f2y[c].index);
  for (int j = 0; j < f3; ++j)
    C.s3[j] = C.s2[pi2.pair_of[0]] + predicted(vz, lvz, f3z[j].index, f2z[0].index);
  // consistency of every nonzero entry with the derived twists
  for (int k = 0; k < f1; ++k) {
    long long d = graded_degree(C.d1.at(0, k));
    if (d >= 0 && d != C.s1[k]) throw math_error("chart d1 twists are inconsistent");
  }
  for (int k = 0; k < f1; ++k)
    for (int c = 0; c < f2; ++c) {
      long long d = graded_degree(C.d2.at(k, c));
      if (d >= 0 && C.s1[k] + d != C.s2[c]) throw math_error("chart d2 twists are inconsistent");
    }
  for (int c = 0; c < f2; ++c)
    for (int j = 0; j < f3; ++j) {
      long long d = graded_degree(C.d3.at(c, j));
      if (d >= 0 && C.s2[c] + d != C.s3[j]) throw math_error("chart d3 twists are inconsistent");
    }
  C.sync_twists();

  SchubertResolution out;
  out.complex = std::move(C);

  // structure-map block: columns of the dualized V_z map at z1-level 1,
  // matched by weight to the wedge pairs of the F1 chain basis of V_y
  std::vector<int> level1 = level_set(vz, z1, 1);
  if (static_cast<int>(level1.size()) == f1 * (f1 - 1) / 2) {
    auto pairs = k_subsets(f1, 2);
    // the level-1 basis is dual to M* (x) Lambda^2 F1, so its weights are the
    // negated pair sums of the abstract F1 weights up to a uniform shift
    int n = rs.rank();
    WCoord shift(n, 0);
    {
      WCoord pair_sum(n, 0), level_sum(n, 0);
      for (const auto& P : pairs)
        for (int i : P)
          for (int t = 0; t < n; ++t) pair_sum[t] -= vy.weights[f1y[i].index][t];
      for (int b : level1)
        for (int t = 0; t < n; ++t) level_sum[t] += vz.weights[b][t];
      bool ok = true;
      for (int t = 0; t < n; ++t) {
        long long diff = level_sum[t] - pair_sum[t];
        if (diff % static_cast<long long>(pairs.size()) != 0) ok = false;
        shift[t] = ok ? diff / static_cast<long long>(pairs.size()) : 0;
      }
      if (!ok) {
        out.has_hint = false;
        return out;
      }
    }
    PolyMatrix hint(f2, static_cast<int>(pairs.size()), chart.nvars);
    bool good = true;
    for (size_t p = 0; p < pairs.size() && good; ++p) {
      WCoord want(n, 0);
      for (int t = 0; t < n; ++t)
        want[t] = -vy.weights[f1y[pairs[p][0]].index][t] - vy.weights[f1y[pairs[p][1]].index][t] + shift[t];
      int col = -1;
      for (int b : level1)
        if (vz.weights[b] == want) {
          if (col >= 0) good = false;
          col = b;
        }
      if (col < 0) {
        good = false;
        break;
      }
      for (int b = 0; b < f2; ++b) {
        MultiPoly v = Mz.at(col, f2z[b].index);
        if (f2z[b].sign < 0) v = -v;
        v.scale(Rat(1) / pi2.coef[b]);
        hint.at(pi2.pair_of[b], static_cast<int>(p)) = std::move(v);
      }
    }
    if (good) {
      out.w31_hint = std::move(hint);
      out.has_hint = true;
    }
  }
  (void)budget;
  return out;
}

// Normalize a representation-supplied structure map against the lifting
// identity: each column must solve d2 . w = B up to a rational unit, which is
// divided out.  The result satisfies the identity exactly.
inline PolyMatrix verified_structure_w31(const GradedComplex& C, const Multipliers& M,
                                         const PolyMatrix& hint) {
  std::vector<MultiPoly> beta = detail::beta_from_a2(C, M);
  PolyMatrix B = detail::w31_rhs(C, beta);
  if (hint.rows != C.format.f2 || hint.cols != B.cols)
    throw math_error("structure hint has the wrong shape");
  PolyMatrix out = hint;
  out.rowtwist.assign(C.s2.begin(), C.s2.end());
  out.coltwist = B.coltwist;
  for (int col = 0; col < B.cols; ++col) {
    PolyMatrix h(C.format.f2, 1, C.nvars);
    for (int i = 0; i < C.format.f2; ++i) h.at(i, 0) = hint.at(i, col);
    PolyMatrix g = C.d2 * h;
    // find the unit lambda with g = lambda * B-column
    Rat lambda(0);
    for (int i = 0; i < C.format.f1 && lambda == 0; ++i) {
      if (B.at(i, col).is_zero()) continue;
      if (g.at(i, 0).is_zero()) break;
      lambda = g.at(i, 0).leading().c / B.at(i, col).leading().c;
    }
    if (lambda == 0) {
      // zero target column: the hint must lie in the kernel; replace by zero
      for (int i = 0; i < C.format.f1; ++i)
        if (!g.at(i, 0).is_zero()) throw math_error("structure hint fails the lifting identity");
      for (int i = 0; i < C.format.f2; ++i) out.at(i, col) = MultiPoly(C.nvars);
      continue;
    }
    for (int i = 0; i < C.format.f1; ++i) {
      MultiPoly want = B.at(i, col);
      want.scale(lambda);
      if (g.at(i, 0) != want) throw math_error("structure hint fails the lifting identity");
    }
    for (int i = 0; i < C.format.f2; ++i) out.at(i, col).scale(Rat(1) / lambda);
  }
  return out;
}

}  // namespace dynres

#endif
