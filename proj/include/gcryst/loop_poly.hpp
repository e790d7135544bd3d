#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gcryst/grid.hpp"
#include "gcryst/rational.hpp"

namespace gcryst {

// Variable x_a^b encoded as (a << 16) | b, so that increasing id order is
// exactly the Appendix-B variable order
//   x_1^1 > x_1^2 > ... > x_1^n > x_2^1 > ... > x_m^n
// (rows first; within a row, x_a^b = x_a^{(a+b-1)} runs through the
// superscripts (a), (a+1), ..., (a+n-1) in sequence).
using VarId = std::uint32_t;

inline VarId var_id(int a, int b) {
  return (static_cast<VarId>(a) << 16) | static_cast<VarId>(b);
}
inline int var_row(VarId v) { return static_cast<int>(v >> 16); }
inline int var_col(VarId v) { return static_cast<int>(v & 0xffff); }

// Sparse monomial: (variable, exponent) pairs sorted by variable id,
// exponents > 0.  Dimension-free; the ambient (m, n) only matters to the
// operations that need it.
class Mono {
 public:
  using Term = std::pair<VarId, std::uint32_t>;

  Mono() = default;

  static Mono unit() { return Mono(); }
  static Mono var(int a, int b, std::uint32_t exp = 1) {
    Mono m;
    if (exp > 0) m.v_.push_back({var_id(a, b), exp});
    return m;
  }

  const std::vector<Term>& terms() const { return v_; }
  bool is_unit() const { return v_.empty(); }
  int degree() const {
    int d = 0;
    for (const auto& [var, e] : v_) d += static_cast<int>(e);
    return d;
  }

  friend Mono operator*(const Mono& a, const Mono& b) {
    Mono out;
    std::size_t i = 0, j = 0;
    while (i < a.v_.size() || j < b.v_.size()) {
      if (j == b.v_.size() || (i < a.v_.size() && a.v_[i].first < b.v_[j].first)) {
        out.v_.push_back(a.v_[i++]);
      } else if (i == a.v_.size() || b.v_[j].first < a.v_[i].first) {
        out.v_.push_back(b.v_[j++]);
      } else {
        out.v_.push_back({a.v_[i].first, a.v_[i].second + b.v_[j].second});
        ++i, ++j;
      }
    }
    return out;
  }

  friend bool operator==(const Mono& a, const Mono& b) { return a.v_ == b.v_; }

  // Lexicographic comparison in the fixed variable order: at the first
  // (most significant) variable where the exponents differ, the monomial
  // with the larger exponent is larger.  Returns <0, 0, >0.
  static int cmp_lex(const Mono& a, const Mono& b) {
    std::size_t i = 0, j = 0;
    while (i < a.v_.size() && j < b.v_.size()) {
      if (a.v_[i].first < b.v_[j].first) return 1;   // a owns a bigger variable
      if (b.v_[j].first < a.v_[i].first) return -1;
      if (a.v_[i].second != b.v_[j].second)
        return a.v_[i].second > b.v_[j].second ? 1 : -1;
      ++i, ++j;
    }
    if (i < a.v_.size()) return 1;
    if (j < b.v_.size()) return -1;
    return 0;
  }

 private:
  std::vector<Term> v_;
};

struct MonoLexGreater {
  bool operator()(const Mono& a, const Mono& b) const { return Mono::cmp_lex(a, b) > 0; }
};

// Sparse multivariate polynomial over the rationals in the x_a^b, terms
// kept sorted with the leading (lex-largest) monomial first.  No zero
// coefficients are stored.
class LoopPoly {
 public:
  static constexpr bool has_subtraction = true;
  using TermMap = std::map<Mono, Rat, MonoLexGreater>;

  LoopPoly() = default;

  static LoopPoly zero() { return LoopPoly(); }
  static LoopPoly one() { return constant(Rat::one()); }
  static LoopPoly constant(const Rat& c) {
    LoopPoly p;
    if (!c.is_zero()) p.terms_[Mono::unit()] = c;
    return p;
  }
  static LoopPoly variable(int a, int b) { return monomial(Mono::var(a, b), Rat::one()); }
  static LoopPoly monomial(const Mono& m, const Rat& c) {
    LoopPoly p;
    if (!c.is_zero()) p.terms_[m] = c;
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }

  const Mono& leading_monomial() const { return terms_.begin()->first; }
  const Rat& leading_coeff() const { return terms_.begin()->second; }

  void add_term(const Mono& m, const Rat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_[m] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend LoopPoly operator+(const LoopPoly& a, const LoopPoly& b) {
    LoopPoly out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
  }
  friend LoopPoly operator-(const LoopPoly& a, const LoopPoly& b) {
    LoopPoly out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
    return out;
  }
  friend LoopPoly operator*(const LoopPoly& a, const LoopPoly& b) {
    LoopPoly out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }
  friend LoopPoly operator*(const Rat& c, const LoopPoly& p) {
    LoopPoly out;
    for (const auto& [m, coef] : p.terms_) out.add_term(m, c * coef);
    return out;
  }
  friend LoopPoly operator-(const LoopPoly& p) { return Rat(-1) * p; }

  friend bool operator==(const LoopPoly& a, const LoopPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LoopPoly& a, const LoopPoly& b) { return !(a == b); }

  // Evaluation at a grid of rationals.
  Rat eval(const Grid<Rat>& x) const {
    Rat total = 0;
    for (const auto& [m, c] : terms_) {
      Rat term = c;
      for (const auto& [var, e] : m.terms()) {
        const Rat& v = x.at(var_row(var), var_col(var));
        for (std::uint32_t k = 0; k < e; ++k) term = term * v;
      }
      total += term;
    }
    return total;
  }

 private:
  TermMap terms_;
};

// The symbolic m x n grid whose (a,b) entry is the variable x_a^b; feeds
// the generic matrix machinery to produce polynomial identities.
inline Grid<LoopPoly> symbolic_grid(int m, int n) {
  Grid<LoopPoly> g(m, n);
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= n; ++b) g.at(a, b) = LoopPoly::variable(a, b);
  return g;
}

}  // namespace gcryst
