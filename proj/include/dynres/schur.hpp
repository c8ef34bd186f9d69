#ifndef DYNRES_SCHUR_HPP
#define DYNRES_SCHUR_HPP

#include <algorithm>
#include <functional>
#include <vector>

#include "dynres/rational.hpp"

namespace dynres {

// Partition: weakly decreasing positive parts.
using Partition = std::vector<int>;

inline int partition_size(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

inline bool is_partition(const Partition& p) {
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] < p[i + 1]) return false;
  return p.empty() || p.back() > 0;
}

// dim S_lambda(C^n) by the hook content formula.
inline Int schur_dimension(const Partition& lambda, int n) {
  if (static_cast<int>(lambda.size()) > n) throw too_many_rows();
  std::vector<int> conj;  // column lengths
  if (!lambda.empty()) {
    conj.assign(lambda[0], 0);
    for (size_t r = 0; r < lambda.size(); ++r)
      for (int c = 0; c < lambda[r]; ++c) conj[c]++;
  }
  Int num = 1, den = 1;
  for (size_t r = 0; r < lambda.size(); ++r)
    for (int c = 0; c < lambda[r]; ++c) {
      num *= Int(n + static_cast<int>(c) - static_cast<int>(r));
      int hook = (lambda[r] - c) + (conj[c] - static_cast<int>(r)) - 1;
      den *= Int(hook);
    }
  Int q = num / den;
  assert(q * den == num);
  return q;
}

// Enumerate semistandard tableaux of shape lambda with entries 1..n, invoking
// fn with the content vector (letter counts, size n) of each tableau.
// Deterministic enumeration order.
inline void for_each_ssyt_content(const Partition& lambda, int n,
                                  const std::function<void(const std::vector<int>&)>& fn) {
  if (static_cast<int>(lambda.size()) > n) throw too_many_rows();
  if (lambda.empty()) {
    std::vector<int> content(n, 0);
    fn(content);
    return;
  }
  int rows = static_cast<int>(lambda.size());
  std::vector<std::vector<int>> T(rows);
  for (int r = 0; r < rows; ++r) T[r].assign(lambda[r], 0);
  std::vector<int> content(n, 0);
  std::function<void(int, int)> rec = [&](int r, int c) {
    if (r == rows) {
      fn(content);
      return;
    }
    int nr = r, nc = c + 1;
    if (nc == lambda[r]) {
      nr = r + 1;
      nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, T[r][c - 1]);
    if (r > 0) lo = std::max(lo, T[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
      T[r][c] = v;
      content[v - 1]++;
      rec(nr, nc);
      content[v - 1]--;
    }
  };
  rec(0, 0);
  return;
}

// Multiset of degrees of a basis of S_lambda applied to a free module whose
// generators have the given degrees.  Sorted ascending.
inline std::vector<long long> schur_degrees(const Partition& lambda,
                                            const std::vector<long long>& gen_degrees) {
  int n = static_cast<int>(gen_degrees.size());
  std::vector<long long> out;
  for_each_ssyt_content(lambda, n, [&](const std::vector<int>& content) {
    long long d = 0;
    for (int i = 0; i < n; ++i) d += content[i] * gen_degrees[i];
    out.push_back(d);
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string partition_str(const Partition& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

}  // namespace dynres

#endif
