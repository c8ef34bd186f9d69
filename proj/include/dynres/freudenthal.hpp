#ifndef DYNRES_FREUDENTHAL_HPP
#define DYNRES_FREUDENTHAL_HPP

#include <algorithm>
#include <map>
#include <mutex>
#include <vector>

#include "dynres/roots.hpp"

namespace dynres {

// All weights of the irreducible L(lambda) with multiplicities.  Weights are
// stored as their offset from the highest weight in simple-root coordinates:
// nu = lambda - sum_i c_i alpha_i with c_i >= 0.
struct WeightSystem {
  WCoord lambda;  // highest weight, fundamental-weight coordinates
  std::vector<std::pair<std::vector<int>, long long>> weights;  // sorted by offset
  Int dimension = 0;

  long long multiplicity(const std::vector<int>& offset) const {
    auto it = std::lower_bound(
        weights.begin(), weights.end(), offset,
        [](const std::pair<std::vector<int>, long long>& a, const std::vector<int>& b) {
          return a.first < b;
        });
    if (it == weights.end() || it->first != offset) return 0;
    return it->second;
  }
};

namespace detail {

// All dominant weights mu <= lambda: both are dominant, so the offset
// c = A^{-1}(lambda - mu) lies in the box 0 <= c <= (root coordinates of
// lambda).  Scan the box.
inline std::vector<std::vector<int>> dominant_weights_below(const RootSystem& rs,
                                                            const WCoord& lambda) {
  int n = rs.rank();
  std::vector<Rat> lam_root = rs.weight_to_root_coords(lambda);
  std::vector<int> bound(n);
  for (int i = 0; i < n; ++i) {
    Int b = numerator(lam_root[i]) / denominator(lam_root[i]);
    bound[i] = static_cast<int>(b);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> c(n, 0);
  // mu_w = lambda - A*c maintained incrementally
  WCoord mu(lambda);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      for (int i = 0; i < n; ++i)
        if (mu[i] < 0) return;
      out.push_back(c);
      return;
    }
    for (c[pos] = 0; c[pos] <= bound[pos]; ++c[pos]) {
      rec(pos + 1);
      for (int i = 0; i < n; ++i) mu[i] -= rs.cartan()[pos][i];
    }
    for (int i = 0; i < n; ++i) mu[i] += (bound[pos] + 1) * rs.cartan()[pos][i];
    c[pos] = 0;
  };
  rec(0);
  return out;
}

inline uint64_t pack_offset(const std::vector<int>& c) {
  uint64_t key = 1469598103934665603ull;
  for (int v : c) {
    key ^= static_cast<uint64_t>(v + 1);
    key *= 1099511628211ull;
  }
  return key;
}

}  // namespace detail

// Freudenthal recursion evaluated on dominant weights, then expanded over
// Weyl orbits.  Exact integer arithmetic throughout.
inline WeightSystem weight_multiplicities(const RootSystem& rs, const WCoord& lambda) {
  if (!rs.is_dominant(lambda)) throw non_dominant_weight();
  int n = rs.rank();

  std::vector<std::vector<int>> dom = detail::dominant_weights_below(rs, lambda);
  std::sort(dom.begin(), dom.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    int ha = 0, hb = 0;
    for (int x : a) ha += x;
    for (int x : b) hb += x;
    if (ha != hb) return ha < hb;
    return a < b;
  });
  std::map<std::vector<int>, long long> dom_mult;

  auto omega_of = [&](const std::vector<int>& c) {
    WCoord w(lambda);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) w[j] -= static_cast<long long>(c[i]) * rs.cartan()[i][j];
    return w;
  };
  // dominant representative of an offset vector
  auto dominant_offset = [&](std::vector<int> c, WCoord w) {
    for (;;) {
      int i = -1;
      for (int k = 0; k < n; ++k)
        if (w[k] < 0) {
          i = k;
          break;
        }
      if (i < 0) return c;
      long long p = w[i];
      for (int j = 0; j < n; ++j) w[j] -= p * rs.cartan()[i][j];
      c[i] += static_cast<int>(p);
    }
  };

  const auto& pos = rs.positive_roots();
  for (const auto& c : dom) {
    bool is_top = true;
    for (int x : c) is_top = is_top && x == 0;
    if (is_top) {
      dom_mult[c] = 1;
      continue;
    }
    WCoord mu = omega_of(c);
    // denominator (lambda - mu, lambda + mu + 2 rho)
    long long den = 0;
    for (int i = 0; i < n; ++i) den += static_cast<long long>(c[i]) * (lambda[i] + mu[i] + 2);
    assert(den > 0);
    long long num = 0;
    for (const RootVec& a : pos) {
      // walk mu + k*a while it stays a weight (offset stays >= 0 and dominant rep known)
      std::vector<int> ck(c);
      WCoord wk(mu);
      long long pair_mu_a = rs.pairing_coroot(a, mu);
      for (int k = 1;; ++k) {
        bool ok = true;
        for (int i = 0; i < n; ++i) {
          ck[i] -= a[i];
          if (ck[i] < 0) ok = false;
        }
        if (!ok) break;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) wk[j] += static_cast<long long>(a[i]) * rs.cartan()[i][j];
        auto it = dom_mult.find(dominant_offset(ck, wk));
        if (it == dom_mult.end()) break;
        num += it->second * (pair_mu_a + 2 * k);
      }
    }
    long long m = 2 * num / den;
    assert(m * den == 2 * num);
    if (m > 0) dom_mult[c] = m;
  }

  // expand orbits
  std::map<std::vector<int>, long long> all;
  for (const auto& [c0, m] : dom_mult) {
    std::vector<std::vector<int>> work{c0};
    all[c0] = m;
    while (!work.empty()) {
      std::vector<int> c = work.back();
      work.pop_back();
      WCoord w = omega_of(c);
      for (int i = 0; i < n; ++i) {
        if (w[i] == 0) continue;
        std::vector<int> c2(c);
        c2[i] += static_cast<int>(w[i]);
        if (!all.count(c2)) {
          all[c2] = m;
          work.push_back(c2);
        }
      }
    }
  }

  WeightSystem ws;
  ws.lambda = lambda;
  ws.weights.assign(all.begin(), all.end());
  for (const auto& [c, m] : ws.weights) ws.dimension += m;
  return ws;
}

// Memoized front end; representations are reused heavily across modules.
inline const WeightSystem& weight_system_cached(const RootSystem& rs, const WCoord& lambda) {
  static std::map<std::pair<std::vector<int>, WCoord>, WeightSystem> cache;
  static std::mutex mtx;
  std::vector<int> shape_key{rs.shape().p, rs.shape().q, rs.shape().r};
  std::lock_guard<std::mutex> lk(mtx);
  auto key = std::make_pair(shape_key, lambda);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, weight_multiplicities(rs, lambda)).first;
  return it->second;
}

}  // namespace dynres

#endif
