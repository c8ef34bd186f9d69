#ifndef DYNRES_POLY_HPP
#define DYNRES_POLY_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "dynres/rational.hpp"

namespace dynres {

using Expo = std::vector<int>;

inline int expo_degree(const Expo& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Graded lexicographic order, x0 > x1 > ...; returns true if a > b.
inline bool grlex_greater(const Expo& a, const Expo& b) {
  int da = expo_degree(a), db = expo_degree(b);
  if (da != db) return da > db;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

inline bool expo_divides(const Expo& a, const Expo& b) {  // a | b
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Expo expo_mul(const Expo& a, const Expo& b) {
  Expo c(a);
  for (size_t i = 0; i < a.size(); ++i) c[i] += b[i];
  return c;
}

inline Expo expo_div(const Expo& a, const Expo& b) {  // a / b, caller ensures b | a
  Expo c(a);
  for (size_t i = 0; i < a.size(); ++i) c[i] -= b[i];
  return c;
}

inline Expo expo_lcm(const Expo& a, const Expo& b) {
  Expo c(a);
  for (size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
  return c;
}

// Sparse multivariate polynomial over Q; terms kept in descending graded-lex
// order with no zero coefficients.
class MultiPoly {
 public:
  struct Term {
    Expo e;
    Rat c;
  };

  MultiPoly() : nvars_(0) {}
  explicit MultiPoly(int nvars) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const Rat& c) {
    MultiPoly p(nvars);
    if (c != 0) p.terms_.push_back({Expo(nvars, 0), c});
    return p;
  }
  static MultiPoly variable(int nvars, int i, const Rat& coeff = Rat(1)) {
    MultiPoly p(nvars);
    Expo e(nvars, 0);
    e[i] = 1;
    if (coeff != 0) p.terms_.push_back({e, coeff});
    return p;
  }
  static MultiPoly monomial(int nvars, const Expo& e, const Rat& coeff) {
    MultiPoly p(nvars);
    if (coeff != 0) p.terms_.push_back({e, coeff});
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t num_terms() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Term& leading() const {
    assert(!terms_.empty());
    return terms_.front();
  }

  int degree() const {  // max total degree, -1 for zero
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, expo_degree(t.e));
    return d;
  }

  bool is_homogeneous(int* deg_out = nullptr) const {
    if (terms_.empty()) {
      if (deg_out) *deg_out = -1;
      return true;
    }
    int d = expo_degree(terms_[0].e);
    for (const Term& t : terms_)
      if (expo_degree(t.e) != d) return false;
    if (deg_out) *deg_out = d;
    return true;
  }

  Rat coeff(const Expo& e) const {
    for (const Term& t : terms_)
      if (t.e == e) return t.c;
    return Rat(0);
  }

  Rat constant_term() const { return coeff(Expo(nvars_, 0)); }

  MultiPoly operator-() const {
    MultiPoly r(*this);
    for (Term& t : r.terms_) t.c = -t.c;
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_vars(o);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
      if (terms_[i].e == o.terms_[j].e) {
        Rat c = terms_[i].c + o.terms_[j].c;
        if (c != 0) out.push_back({terms_[i].e, c});
        ++i;
        ++j;
      } else if (grlex_greater(terms_[i].e, o.terms_[j].e)) {
        out.push_back(terms_[i++]);
      } else {
        out.push_back(o.terms_[j++]);
      }
    }
    while (i < terms_.size()) out.push_back(terms_[i++]);
    while (j < o.terms_.size()) out.push_back(o.terms_[j++]);
    terms_ = std::move(out);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) { return *this += -o; }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  MultiPoly& scale(const Rat& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (Term& t : terms_) t.c *= c;
    return *this;
  }
  friend MultiPoly operator*(const Rat& c, MultiPoly p) { return p.scale(c); }

  // multiply by a single term
  MultiPoly term_mul(const Expo& e, const Rat& c) const {
    MultiPoly r(nvars_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({expo_mul(t.e, e), t.c * c});
    return r;
  }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_vars(b);
    std::map<Expo, Rat, decltype(&grlex_greater)> acc(&grlex_greater);
    for (const Term& ta : a.terms_)
      for (const Term& tb : b.terms_) {
        Expo e = expo_mul(ta.e, tb.e);
        auto [it, fresh] = acc.try_emplace(std::move(e), Rat(0));
        it->second += ta.c * tb.c;
      }
    MultiPoly r(a.nvars_);
    r.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
      if (c != 0) r.terms_.push_back({e, c});
    return r;
  }

  bool operator==(const MultiPoly& o) const {
    if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].e != o.terms_[i].e || terms_[i].c != o.terms_[i].c) return false;
    return true;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // ring homomorphism determined by variable images
  MultiPoly substitute(const std::vector<MultiPoly>& images) const {
    if (static_cast<int>(images.size()) != nvars_)
      throw variable_mismatch("substitute: wrong number of variable images");
    int target_vars = images.empty() ? 0 : images[0].nvars();
    MultiPoly out(target_vars);
    for (const Term& t : terms_) {
      MultiPoly m = MultiPoly::constant(target_vars, t.c);
      for (int v = 0; v < nvars_; ++v)
        for (int k = 0; k < t.e[v]; ++k) m = m * images[v];
      out += m;
    }
    return out;
  }

  MultiPoly& make_monic() {
    if (!terms_.empty()) {
      Rat lc = terms_.front().c;
      for (Term& t : terms_) t.c /= lc;
    }
    return *this;
  }

  std::string str(const std::vector<std::string>& names = {}) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < terms_.size(); ++i) {
      const Term& t = terms_[i];
      if (i)
        s += (t.c < 0) ? " - " : " + ";
      else if (t.c < 0)
        s += "-";
      Rat a = t.c < 0 ? Rat(-t.c) : t.c;
      std::string vars;
      for (int v = 0; v < nvars_; ++v) {
        if (t.e[v] == 0) continue;
        if (!vars.empty()) vars += "*";
        vars += names.empty() ? ("x" + std::to_string(v)) : names[v];
        if (t.e[v] > 1) vars += "^" + std::to_string(t.e[v]);
      }
      if (vars.empty()) {
        s += rat_to_string(a);
      } else {
        if (a != 1) s += rat_to_string(a) + "*";
        s += vars;
      }
    }
    return s;
  }

 private:
  int nvars_;
  std::vector<Term> terms_;

  void check_vars(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw variable_mismatch();
  }
};

// Exact division f / g; throws if the division is not exact.
inline MultiPoly exact_div(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero()) throw math_error("division by zero polynomial");
  MultiPoly r(f), q(f.nvars());
  while (!r.is_zero()) {
    const auto& lr = r.leading();
    const auto& lg = g.leading();
    if (!expo_divides(lg.e, lr.e)) throw math_error("inexact polynomial division");
    Expo e = expo_div(lr.e, lg.e);
    Rat c = lr.c / lg.c;
    q += MultiPoly::monomial(f.nvars(), e, c);
    r -= g.term_mul(e, c);
  }
  return q;
}

}  // namespace dynres

#endif
