#ifndef DYNRES_LEVI_HPP
#define DYNRES_LEVI_HPP

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <vector>

#include "dynres/freudenthal.hpp"
#include "dynres/schur.hpp"
#include "dynres/weyl.hpp"

namespace dynres {

// One z1-graded piece S_lambda F3* (x) S_mu F1 of L(omega_{x1})^dual, indexed
// from the bottom component.  Twist normalization: |lambda| = j, |mu| = 2j+1.
struct LeviComponent {
  int j = 0;
  Partition lambda, mu;
  long long multiplicity = 1;
  bool extremal = false;
  // offsets (from the lowest weight -omega_{x1}) of the component's extreme weights
  std::vector<int> c_high, c_low;

  std::string display(const std::string& a = "F3*", const std::string& b = "F1") const;
};

struct LeviDecomposition {
  Format format;
  std::vector<LeviComponent> components;
};

namespace detail {

inline std::string schur_name(const Partition& p, const std::string& mod) {
  if (p.empty()) return "triv";
  if (p.size() == 1 && p[0] == 1) return mod;
  bool all_ones = true;
  for (int x : p) all_ones = all_ones && x == 1;
  if (all_ones) return "Lambda^" + std::to_string(p.size()) + " " + mod;
  if (p.size() == 1) return "S_" + std::to_string(p[0]) + " " + mod;
  return "S_" + partition_str(p) + " " + mod;
}

}  // namespace detail

inline std::string LeviComponent::display(const std::string& a, const std::string& b) const {
  std::string s;
  if (lambda.empty())
    s = detail::schur_name(mu, b);
  else
    s = detail::schur_name(lambda, a) + " (x) " + detail::schur_name(mu, b);
  if (multiplicity != 1) s += " [x" + std::to_string(multiplicity) + "]";
  return s;
}

namespace detail {

// Chain node lists identifying sl(F1) and sl(F3) inside g (f0 = 1 case):
// sl(F1) ~ y_{q-1},...,y_1,u,x_1 and sl(F3) ~ z_2,...,z_{r-1}.
inline std::vector<int> f1_chain(const TShape& s) {
  std::vector<int> chain;
  for (int k = s.q - 1; k >= 1; --k) chain.push_back(s.y_node(k));
  chain.push_back(s.u_node());
  chain.push_back(s.x_node(1));
  return chain;
}

// Chain for the F3* side runs from the far arm end toward z_2.
inline std::vector<int> f3_chain(const TShape& s) {
  std::vector<int> chain;
  for (int k = s.r - 1; k >= 2; --k) chain.push_back(s.z_node(k));
  return chain;
}

// Solve eps_k - eps_{k+1} = diff_k with sum(eps) = total.
inline std::vector<int> eps_from_diffs(const std::vector<long long>& diff, long long total) {
  int m = static_cast<int>(diff.size()) + 1;
  std::vector<long long> eps(m, 0);
  for (int k = m - 2; k >= 0; --k) eps[k] = eps[k + 1] + diff[k];
  long long sum = 0;
  for (long long e : eps) sum += e;
  long long shift_num = total - sum;
  if (shift_num % m != 0) throw math_error("Levi weight fails the twist normalization");
  long long t = shift_num / m;
  std::vector<int> out(m);
  for (int k = 0; k < m; ++k) out[k] = static_cast<int>(eps[k] + t);
  return out;
}

}  // namespace detail

// z1-graded decomposition of L(omega_{x1})^dual into gl(F3) x gl(F1) pieces,
// by iterated extraction of dominance-maximal Levi weights and subtraction of
// the product Schur character.
inline LeviDecomposition z1_decomposition(const Format& f) {
  if (f.f0 != 1) throw unsupported_f0("z1_decomposition requires f0 = 1");
  if (!format_is_dynkin(f)) throw non_dynkin_format();
  TShape shape = format_shape(f);
  RootSystem rs(shape);
  int n = rs.rank();
  int x1 = shape.x_node(1), z1 = shape.z_node(1);
  const WeightSystem& ws = weight_system_cached(rs, rs.fundamental_weight_w(x1));

  std::vector<int> chain1 = detail::f1_chain(shape);
  std::vector<int> chain3 = detail::f3_chain(shape);

  // bucket per z1 level: Levi weight (eta | eps) -> (multiplicity, offset c)
  using Key = std::vector<int>;  // eta followed by eps
  struct Entry {
    long long mult;
    std::vector<int> c;
  };
  std::map<int, std::map<Key, Entry>> layers;

  const CartanMatrix& A = rs.cartan();
  for (const auto& [c, mult] : ws.weights) {
    // V-weight mu = omega - sum c_k alpha_k; dual weight nu = -mu has pairings
    // <alpha_i^vee, nu> = sum_k A[i][k] c_k - delta_{i,x1}
    std::vector<long long> pr(n);
    for (int i = 0; i < n; ++i) {
      long long v = (i == x1) ? -1 : 0;
      for (int k = 0; k < n; ++k) v += static_cast<long long>(A[i][k]) * c[k];
      pr[i] = v;
    }
    int j = c[z1];
    std::vector<long long> d3, d1;
    for (int t : chain3) d3.push_back(pr[t]);
    for (int t : chain1) d1.push_back(pr[t]);
    std::vector<int> eta = detail::eps_from_diffs(d3, j);
    std::vector<int> eps = detail::eps_from_diffs(d1, 2LL * j + 1);
    Key key(eta);
    key.insert(key.end(), eps.begin(), eps.end());
    auto& layer = layers[j];
    auto it = layer.find(key);
    if (it != layer.end()) throw math_error("Levi torus weight collision");
    layer[key] = Entry{mult, c};
  }

  LeviDecomposition dec;
  dec.format = f;
  int f1 = f.f1, f3 = f.f3;
  auto keyrank = [&](const Key& k) {
    long long v = 0;
    for (int i = 0; i < f3; ++i) v += static_cast<long long>(f3 - i) * k[i];
    for (int i = 0; i < f1; ++i) v += static_cast<long long>(f1 - i) * k[f3 + i];
    return v;
  };

  for (auto& [j, layer] : layers) {
    while (!layer.empty()) {
      // dominance-maximal entry
      auto best = layer.begin();
      long long bestrank = keyrank(best->first);
      for (auto it = std::next(layer.begin()); it != layer.end(); ++it) {
        long long r = keyrank(it->first);
        if (r > bestrank || (r == bestrank && it->first > best->first)) {
          best = it;
          bestrank = r;
        }
      }
      Key top = best->first;
      long long mult = best->second.mult;
      std::vector<int> c_high = best->second.c;
      Partition lambda(top.begin(), top.begin() + f3);
      Partition eps(top.begin() + f3, top.end());
      while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
      while (!eps.empty() && eps.back() == 0) eps.pop_back();
      if (!is_partition(lambda) || !is_partition(eps) ||
          (!lambda.empty() && lambda.back() < 0) || (!eps.empty() && eps.back() < 0))
        throw math_error("maximal Levi weight is not dominant; decomposition failed");
      if (partition_size(lambda) != j || partition_size(eps) != 2 * j + 1)
        throw math_error("component sizes violate the twist normalization");

      // extreme low weight of the component: both contents reversed-sorted
      Key low;
      {
        Partition lr(lambda);
        lr.resize(f3, 0);
        std::reverse(lr.begin(), lr.end());
        Partition mr(eps);
        mr.resize(f1, 0);
        std::reverse(mr.begin(), mr.end());
        low = lr;
        low.insert(low.end(), mr.begin(), mr.end());
      }
      std::vector<int> c_low = layer.at(low).c;

      // subtract the product character S_lambda (x) S_mu
      std::vector<std::vector<int>> contents3;
      for_each_ssyt_content(lambda, f3, [&](const std::vector<int>& ct) { contents3.push_back(ct); });
      for_each_ssyt_content(eps, f1, [&](const std::vector<int>& ct1) {
        for (const auto& ct3 : contents3) {
          Key k(ct3);
          k.insert(k.end(), ct1.begin(), ct1.end());
          auto it = layer.find(k);
          if (it == layer.end() || it->second.mult < mult)
            throw math_error("character subtraction underflow; decomposition failed");
          it->second.mult -= mult;
          if (it->second.mult == 0) layer.erase(it);
        }
      });

      LeviComponent comp;
      comp.j = j;
      comp.lambda = lambda;
      comp.mu = eps;
      comp.multiplicity = mult;
      comp.c_high = c_high;
      comp.c_low = c_low;
      dec.components.push_back(std::move(comp));
    }
  }
  std::stable_sort(dec.components.begin(), dec.components.end(),
                   [](const LeviComponent& a, const LeviComponent& b) { return a.j < b.j; });
  return dec;
}

// Flag the components whose extreme weight lies in the Weyl orbit of the
// lowest weight -omega_{x1} (the extremal Plucker coordinates).
inline LeviDecomposition mark_extremal(LeviDecomposition dec) {
  TShape shape = format_shape(dec.format);
  RootSystem rs(shape);
  int n = rs.rank();
  int x1 = shape.x_node(1);
  const CartanMatrix& A = rs.cartan();
  WCoord omega = rs.fundamental_weight_w(x1);
  WCoord lowest(n);
  for (int i = 0; i < n; ++i) lowest[i] = -omega[i];
  WCoord orbit_dom = rs.dominant_rep(lowest);
  for (auto& comp : dec.components) {
    WCoord nu(n, 0);
    for (int i = 0; i < n; ++i) {
      nu[i] = -omega[i];
      for (int k = 0; k < n; ++k) nu[i] += static_cast<long long>(A[k][i]) * comp.c_high[k];
    }
    comp.extremal = (rs.dominant_rep(nu) == orbit_dom);
  }
  return dec;
}

struct CosetComponentMatch {
  DoubleCosetTable cosets;
  LeviDecomposition decomposition;
  std::vector<int> coset_to_component;  // index into decomposition.components
};

// The P_{z1}^- orbit classification: double cosets correspond bijectively to
// extremal components via sigma . (lowest weight).
inline CosetComponentMatch coset_component_match(const Format& f) {
  CosetComponentMatch out;
  TShape shape = format_shape(f);
  RootSystem rs(shape);
  int n = rs.rank();
  int x1 = shape.x_node(1), z1 = shape.z_node(1);
  out.cosets = double_cosets(rs, z1, x1);
  out.decomposition = mark_extremal(z1_decomposition(f));
  WCoord omega = rs.fundamental_weight_w(x1);
  WCoord lowest(n);
  for (int i = 0; i < n; ++i) lowest[i] = -omega[i];

  for (const auto& coset : out.cosets.cosets) {
    const std::vector<int>& word = out.cosets.quotient.orbit.words[coset.min_index];
    WCoord nu = lowest;
    for (auto it = word.rbegin(); it != word.rend(); ++it) nu = rs.reflect_weight(std::move(nu), *it);
    // offset c with nu = -omega + A^T c  <=>  nu_i + omega_i = sum_k A[k][i] c_k
    // (A symmetric) -- solve exactly
    std::vector<Rat> rhs(n);
    for (int i = 0; i < n; ++i) rhs[i] = Rat(nu[i] + omega[i]);
    auto inv = rs.fundamental_weights_root_coords();
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) {
      Rat v(0);
      for (int k = 0; k < n; ++k) v += inv[i][k] * rhs[k];
      if (denominator(v) != 1) throw math_error("coset weight not in the root-lattice translate");
      c[i] = static_cast<int>(numerator(v));
    }
    int found = -1;
    for (size_t ci = 0; ci < out.decomposition.components.size(); ++ci)
      if (out.decomposition.components[ci].c_low == c) found = static_cast<int>(ci);
    if (found < 0 || !out.decomposition.components[found].extremal)
      throw math_error("double coset does not match an extremal component");
    out.coset_to_component.push_back(found);
  }
  return out;
}

// Minimal Betti numbers of the family labelled by each extremal component
// with j >= 1: b1 and b3 are the part counts of mu and lambda.  This is the
// pattern of the worked D_n and E6 families; it is a labelling rule, not a
// theorem of the classification.
inline std::vector<std::array<int, 4>> betti_options(const Format& f) {
  LeviDecomposition dec = mark_extremal(z1_decomposition(f));
  std::vector<std::array<int, 4>> out;
  for (const auto& comp : dec.components) {
    if (!comp.extremal || comp.j == 0) continue;
    int b1 = static_cast<int>(comp.mu.size());
    int b3 = static_cast<int>(comp.lambda.size());
    out.push_back({1, b1, b1 + b3 - 1, b3});
  }
  return out;
}

}  // namespace dynres

#endif
