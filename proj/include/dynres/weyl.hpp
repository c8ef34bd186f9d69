#ifndef DYNRES_WEYL_HPP
#define DYNRES_WEYL_HPP

#include <algorithm>
#include <map>
#include <mutex>
#include <vector>

#include "dynres/roots.hpp"

namespace dynres {

// Group element as a reduced word plus the permutation it induces on the root
// set.  word = [i1,...,iL] means s_{i1} s_{i2} ... s_{iL}; acting on a weight
// applies s_{iL} first.
struct WeylElement {
  std::vector<int> word;
  std::vector<int> perm;  // root index -> root index

  int length() const { return static_cast<int>(word.size()); }
};

inline WeylElement weyl_identity(const RootSystem& rs) {
  WeylElement e;
  e.perm.resize(rs.num_roots());
  for (int k = 0; k < rs.num_roots(); ++k) e.perm[k] = k;
  return e;
}

inline WeylElement weyl_generator(const RootSystem& rs, int i) {
  WeylElement s;
  s.word = {i};
  s.perm.resize(rs.num_roots());
  for (int k = 0; k < rs.num_roots(); ++k) s.perm[k] = rs.reflect_root_index(k, i);
  return s;
}

// Number of positive roots sent negative; equals word length iff word reduced.
inline int weyl_true_length(const RootSystem& rs, const WeylElement& w) {
  int N = rs.num_positive(), len = 0;
  for (int k = 0; k < N; ++k)
    if (w.perm[k] >= N) ++len;
  return len;
}

inline WeylElement weyl_mul(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
  WeylElement c;
  c.word = a.word;
  c.word.insert(c.word.end(), b.word.begin(), b.word.end());
  c.perm.resize(rs.num_roots());
  for (int k = 0; k < rs.num_roots(); ++k) c.perm[k] = a.perm[b.perm[k]];
  return c;
}

inline WeylElement weyl_from_word(const RootSystem& rs, const std::vector<int>& word) {
  WeylElement w = weyl_identity(rs);
  for (int i : word) w = weyl_mul(rs, w, weyl_generator(rs, i));
  return w;
}

inline WCoord weyl_apply(const RootSystem& rs, const WeylElement& w, WCoord v) {
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
    v = rs.reflect_weight(std::move(v), *it);
  return v;
}

inline bool weyl_equal(const WeylElement& a, const WeylElement& b) { return a.perm == b.perm; }

// Orbit of a dominant weight, BFS by length with lexicographically minimal
// words.  Point #k is word[k] applied to the start weight; the stabilizer of
// the start is the standard parabolic of its zero coordinates, so the points
// enumerate minimal coset representatives.
struct WeightOrbit {
  WCoord start;
  std::vector<WCoord> points;
  std::vector<std::vector<int>> words;
  std::map<WCoord, int> index;

  int size() const { return static_cast<int>(points.size()); }
};

inline WeightOrbit weight_orbit(const RootSystem& rs, const WCoord& start) {
  if (!rs.is_dominant(start)) throw non_dominant_weight();
  WeightOrbit orb;
  orb.start = start;
  orb.points.push_back(start);
  orb.words.push_back({});
  orb.index[start] = 0;
  int n = rs.rank();
  size_t level_begin = 0, level_end = 1;
  while (level_begin < level_end) {
    // candidates: weight -> lex-min word among [i] + parent word
    std::map<WCoord, std::vector<int>> cand;
    for (size_t p = level_begin; p < level_end; ++p) {
      for (int i = 0; i < n; ++i) {
        WCoord w = rs.reflect_weight(orb.points[p], i);
        if (orb.index.count(w)) continue;
        std::vector<int> word;
        word.reserve(orb.words[p].size() + 1);
        word.push_back(i);
        word.insert(word.end(), orb.words[p].begin(), orb.words[p].end());
        auto it = cand.find(w);
        if (it == cand.end() || word < it->second) cand[w] = std::move(word);
      }
    }
    // append the new level sorted by word
    std::vector<std::pair<std::vector<int>, WCoord>> level;
    level.reserve(cand.size());
    for (auto& kv : cand) level.emplace_back(kv.second, kv.first);
    std::sort(level.begin(), level.end());
    for (auto& e : level) {
      orb.index[e.second] = orb.size();
      orb.points.push_back(e.second);
      orb.words.push_back(e.first);
    }
    level_begin = level_end;
    level_end = orb.points.size();
  }
  return orb;
}

// W-orbit of omega_t with minimal coset representatives for W / W_{P_t}.
struct ParabolicQuotient {
  int t = -1;
  WeightOrbit orbit;
};

inline ParabolicQuotient parabolic_quotient(const RootSystem& rs, int t) {
  ParabolicQuotient q;
  q.t = t;
  q.orbit = weight_orbit(rs, rs.fundamental_weight_w(t));
  return q;
}

// Double cosets W_{P_j} \ W / W_{P_t}, as orbits of the subgroup generated by
// {s_i : i != j} on the parabolic quotient of t.  The minimal representative
// of each class is its first point in the quotient's length-then-lex order.
struct DoubleCosetTable {
  int j = -1, t = -1;
  ParabolicQuotient quotient;
  struct Coset {
    int min_index;
    std::vector<int> members;  // indices into quotient.orbit
  };
  std::vector<Coset> cosets;
};

inline DoubleCosetTable double_cosets(const RootSystem& rs, int j, int t) {
  DoubleCosetTable table;
  table.j = j;
  table.t = t;
  table.quotient = parabolic_quotient(rs, t);
  const WeightOrbit& orb = table.quotient.orbit;
  std::vector<char> visited(orb.size(), 0);
  int n = rs.rank();
  for (int start = 0; start < orb.size(); ++start) {
    if (visited[start]) continue;
    DoubleCosetTable::Coset c;
    c.min_index = start;
    std::vector<int> work{start};
    visited[start] = 1;
    while (!work.empty()) {
      int cur = work.back();
      work.pop_back();
      c.members.push_back(cur);
      for (int i = 0; i < n; ++i) {
        if (i == j) continue;
        WCoord w = rs.reflect_weight(orb.points[cur], i);
        int idx = orb.index.at(w);
        if (!visited[idx]) {
          visited[idx] = 1;
          work.push_back(idx);
        }
      }
    }
    std::sort(c.members.begin(), c.members.end());
    table.cosets.push_back(std::move(c));
  }
  return table;
}

// Cardinality #(d,t) of W_{P_{z1}} \ W / W_{P_{x1}} for T_{2,d+1,t+1}.
inline long long count_table(int d, int t) {
  if (d < 0 || t < 1) throw non_finite_type("count_table requires d >= 0, t >= 1");
  static std::map<std::pair<int, int>, long long> cache;
  static std::mutex mtx;
  {
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find({d, t});
    if (it != cache.end()) return it->second;
  }
  TShape shape(2, d + 1, t + 1);
  if (classify_type(shape).kind != LieKind::Finite) throw non_finite_type();
  RootSystem rs(shape);
  DoubleCosetTable tab = double_cosets(rs, shape.z_node(1), shape.x_node(1));
  long long count = static_cast<long long>(tab.cosets.size());
  std::lock_guard<std::mutex> lk(mtx);
  cache[{d, t}] = count;
  return count;
}

// Number of specialization-closed families with Betti numbers exactly
// (1, 3+d, 2+d+t, t).  Inclusion-exclusion over #(d,t) - 1, the number of
// families with Betti numbers at most the given format; the -1 terms cancel
// in range and the count vanishes off the quadrant d >= 0, t >= 1.
inline long long family_count(const Format& f) {
  if (f.f0 != 1) throw unsupported_f0("family_count requires f0 = 1");
  if (!format_is_dynkin(f)) throw non_dynkin_format();
  int d = f.f1 - 3, t = f.f3;
  auto N = [](int dd, int tt) -> long long {
    if (dd < 0 || tt < 1) return 0;
    return count_table(dd, tt) - 1;
  };
  return N(d, t) - N(d - 1, t) - N(d, t - 1) + N(d - 1, t - 1);
}

inline WeylElement longest_element(const RootSystem& rs) {
  WCoord v = rs.rho();
  std::vector<int> applied;
  for (;;) {
    int pick = -1;
    for (int i = 0; i < rs.rank(); ++i)
      if (v[i] > 0) {
        pick = i;
        break;
      }
    if (pick < 0) break;
    v = rs.reflect_weight(std::move(v), pick);
    applied.push_back(pick);
  }
  std::vector<int> word(applied.rbegin(), applied.rend());
  WeylElement w0 = weyl_from_word(rs, word);
  assert(weyl_true_length(rs, w0) == rs.num_positive());
  return w0;
}

namespace detail {
inline bool weyl_right_descent(const RootSystem& rs, const WeylElement& w, int i) {
  // w(alpha_i) < 0
  RootVec e(rs.rank(), 0);
  e[i] = 1;
  return w.perm[rs.root_index(e)] >= rs.num_positive();
}

inline WeylElement weyl_mul_gen(const RootSystem& rs, const WeylElement& w, int i) {
  return weyl_mul(rs, w, weyl_generator(rs, i));
}
}  // namespace detail

// Strong Bruhat order via the descent recursion; agrees with the subword
// characterization (tested against brute-force subword search).
inline bool bruhat_leq(const RootSystem& rs, WeylElement u, WeylElement w) {
  for (;;) {
    int lu = weyl_true_length(rs, u), lw = weyl_true_length(rs, w);
    if (lu > lw) return false;
    if (lu == 0) return true;
    int i = -1;
    for (int k = 0; k < rs.rank(); ++k)
      if (detail::weyl_right_descent(rs, w, k)) {
        i = k;
        break;
      }
    assert(i >= 0);
    w = detail::weyl_mul_gen(rs, w, i);
    if (detail::weyl_right_descent(rs, u, i)) u = detail::weyl_mul_gen(rs, u, i);
  }
}

// |W| as the orbit size of rho (the orbit of a strictly dominant weight is a
// torsor for W).
inline Int weyl_order_enumerated(const RootSystem& rs) {
  return Int(weight_orbit(rs, rs.rho()).size());
}

}  // namespace dynres

#endif
