#pragma once

#include <algorithm>
#include <vector>

#include "gcryst/loop_poly.hpp"
#include "gcryst/matrix.hpp"

namespace gcryst {

// Column of x_i^{(r)} in the (a,b) layout: x_i^{(r)} = x_i^{r-i+1 mod n},
// superscripts normalized into [1, n].
inline int color_col(int i, int r, int n) { return ((r - i) % n + n) % n + 1; }

using Partition = std::vector<int>;  // weakly decreasing, trailing zeros allowed

inline Partition conjugate(const Partition& lambda) {
  Partition out;
  for (int k = 1; !lambda.empty() && k <= lambda[0]; ++k) {
    int count = 0;
    for (int part : lambda)
      if (part >= k) ++count;
    out.push_back(count);
  }
  return out;
}

inline int part_at(const Partition& p, int i) {  // 1-based, 0 beyond the end
  return (i >= 1 && i <= static_cast<int>(p.size())) ? p[i - 1] : 0;
}

inline bool partition_contains(const Partition& lambda, const Partition& mu) {
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (mu[i] > part_at(lambda, static_cast<int>(i) + 1)) return false;
  return true;
}

// Loop elementary symmetric function
//   E_k^{(r)} = sum_{i_1 < ... < i_k} x_{i_1}^{(r)} x_{i_2}^{(r+1)} ... x_{i_k}^{(r+k-1)},
// with E_0^{(r)} = 1 and E_k^{(r)} = 0 for k < 0 or k > m.
inline LoopPoly loop_e(int m, int n, int k, int r) {
  if (k == 0) return LoopPoly::one();
  if (k < 0 || k > m) return LoopPoly::zero();
  LoopPoly out;
  std::vector<int> pick(k);
  auto rec = [&](auto&& self, int slot, int min_row) -> void {
    if (slot == k) {
      Mono mono;
      for (int t = 0; t < k; ++t)
        mono = mono * Mono::var(pick[t], color_col(pick[t], r + t, n));
      out.add_term(mono, Rat::one());
      return;
    }
    for (int i = min_row; i <= m - (k - 1 - slot); ++i) {
      pick[slot] = i;
      self(self, slot + 1, i + 1);
    }
  };
  rec(rec, 0, 1);
  return out;
}

// Loop homogeneous symmetric function
//   H_k^{(r)} = sum_{i_1 <= ... <= i_k} x_{i_1}^{(r)} x_{i_2}^{(r-1)} ... x_{i_k}^{(r-k+1)},
// with H_0^{(r)} = 1 and H_k^{(r)} = 0 for k < 0.
inline LoopPoly loop_h(int m, int n, int k, int r) {
  if (k == 0) return LoopPoly::one();
  if (k < 0) return LoopPoly::zero();
  LoopPoly out;
  std::vector<int> pick(k);
  auto rec = [&](auto&& self, int slot, int min_row) -> void {
    if (slot == k) {
      Mono mono;
      for (int t = 0; t < k; ++t)
        mono = mono * Mono::var(pick[t], color_col(pick[t], r - t, n));
      out.add_term(mono, Rat::one());
      return;
    }
    for (int i = min_row; i <= m; ++i) {
      pick[slot] = i;
      self(self, slot + 1, i);
    }
  };
  rec(rec, 0, 1);
  return out;
}

// Loop (skew) Schur function as a sum over semistandard tableaux of
// shape lambda/mu with entries at most m; the cell s in row i, column j
// has content c(s) = i - j and contributes x_{T(s)}^{(c(s)+r)}.
inline LoopPoly loop_schur_tableaux(int m, int n, const Partition& lambda,
                                    const Partition& mu, int r) {
  const int nrows = static_cast<int>(lambda.size());
  std::vector<std::vector<int>> fill(nrows);
  for (int i = 0; i < nrows; ++i) fill[i].assign(lambda[i], 0);
  LoopPoly out;
  // Cells of the skew shape in row-major order.
  std::vector<std::pair<int, int>> cells;  // 0-based (row, col)
  for (int i = 0; i < nrows; ++i)
    for (int j = part_at(mu, i + 1); j < lambda[i]; ++j) cells.push_back({i, j});
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      Mono mono;
      for (auto [i, j] : cells) {
        int color = ((i - j + r - 1) % n + n) % n + 1;  // (c(s)+r) mod n in [1,n]
        mono = mono * Mono::var(fill[i][j], color_col(fill[i][j], color, n));
      }
      out.add_term(mono, Rat::one());
      return;
    }
    auto [i, j] = cells[idx];
    int lo = 1;
    if (j > part_at(mu, i + 1)) lo = std::max(lo, fill[i][j - 1]);          // weak rows
    if (i > 0 && j < lambda[i - 1] && j >= part_at(mu, i))                  // strict cols
      lo = std::max(lo, fill[i - 1][j] + 1);
    for (int v = lo; v <= m; ++v) {
      fill[i][j] = v;
      self(self, idx + 1);
    }
  };
  rec(rec, 0);
  return out;
}

// Jacobi-Trudi form: s_{lambda/mu}^{(r)} = det(E_{lambda'_i - mu'_j + j - i}^{(r + mu'_j - j + 1)}).
inline LoopPoly loop_schur_jt(int m, int n, const Partition& lambda, const Partition& mu,
                              int r) {
  Partition lc = conjugate(lambda), mc = conjugate(mu);
  const int ell = static_cast<int>(lc.size());
  if (ell == 0) return LoopPoly::one();
  Mat<LoopPoly> jt(ell, ell);
  for (int i = 1; i <= ell; ++i)
    for (int j = 1; j <= ell; ++j)
      jt.at(i, j) = loop_e(m, n, part_at(lc, i) - part_at(mc, j) + j - i,
                           r + part_at(mc, j) - j + 1);
  return det(jt);
}

// Shape invariant S_k = Delta_{[k,n],[1,n-k+1]}(M(x)) over the polynomial
// ring; equals the rectangular loop Schur function box(k, n).
inline LoopPoly shape_invariant(int m, int n, int k) {
  Mat<LoopPoly> M = m_of(symbolic_grid(m, n));
  return minor(M, interval(k, n), interval(1, n - k + 1));
}

// The same determinant written directly in the E's.
inline LoopPoly shape_invariant_jt(int m, int n, int k) {
  const int size = n - k + 1;
  Mat<LoopPoly> d(size, size);
  for (int i = 1; i <= size; ++i)
    for (int j = 1; j <= size; ++j) d.at(i, j) = loop_e(m, n, m - k + 1 + j - i, k + i - 1);
  return det(d);
}

// box(i, j): loop Schur function of the (m-i+1) x (j-i+1) rectangle whose
// northwest corner has color j; box(i+1, j) = 1 when i = j or i = m.
inline LoopPoly box_poly(int m, int n, int i, int j) {
  if (i == j + 1 || i == m + 1) return LoopPoly::one();
  Partition rect(m - i + 1, j - i + 1);
  return loop_schur_jt(m, n, rect, {}, j);
}

// ---- Appendix B: dominant monomials and the reduction algorithm ----

using ExpMatrix = std::vector<std::vector<int>>;  // m x n, entry (a,b) = exponent of x_a^b

inline ExpMatrix exponent_matrix(const Mono& mono, int m, int n) {
  ExpMatrix p(m, std::vector<int>(n, 0));
  for (const auto& [var, e] : mono.terms())
    p[var_row(var) - 1][var_col(var) - 1] = static_cast<int>(e);
  return p;
}

// Dominant iff every column of the exponent matrix is weakly decreasing.
inline bool dominant(const ExpMatrix& p) {
  for (std::size_t a = 0; a + 1 < p.size(); ++a)
    for (std::size_t b = 0; b < p[a].size(); ++b)
      if (p[a][b] < p[a + 1][b]) return false;
  return true;
}

inline bool dominant(const Mono& mono, int m, int n) {
  return dominant(exponent_matrix(mono, m, n));
}

// Monomial in the E's: factors (k, r) with multiplicity, sorted.
struct EMonomial {
  std::vector<std::pair<int, int>> factors;

  friend bool operator==(const EMonomial& a, const EMonomial& b) {
    return a.factors == b.factors;
  }
};

// E_p = prod_j prod_k E_{lambda_k^{(j)}}^{(j)}, where lambda^{(j)} is the
// conjugate of the j-th column of the exponent matrix.
inline EMonomial e_p(const ExpMatrix& p) {
  if (!dominant(p)) throw NotDominant();
  EMonomial out;
  const int n = p.empty() ? 0 : static_cast<int>(p[0].size());
  for (int j = 0; j < n; ++j) {
    Partition column;
    for (const auto& row : p) column.push_back(row[j]);
    for (int k : conjugate(column)) out.factors.push_back({k, j + 1});
  }
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

inline LoopPoly expand_e_monomial(int m, int n, const EMonomial& em) {
  LoopPoly out = LoopPoly::one();
  for (auto [k, r] : em.factors) out = out * loop_e(m, n, k, r);
  return out;
}

struct ReduceResult {
  std::vector<std::pair<Rat, EMonomial>> representation;
  LoopPoly remainder;  // zero iff the input lies in LSym's E-span

  bool succeeded() const { return remainder.is_zero(); }
};

// Repeatedly subtract c . E_p for the lex-largest dominant monomial
// c . x^p of the running polynomial.  E_p has leading term exactly x^p,
// so the largest dominant monomial strictly decreases and the loop
// terminates; a nonzero polynomial with no dominant monomial is returned
// as the remainder certificate.
inline ReduceResult lsym_reduce(int m, int n, LoopPoly f) {
  ReduceResult res;
  while (!f.is_zero()) {
    const Mono* best = nullptr;
    const Rat* coeff = nullptr;
    for (const auto& [mono, c] : f.terms()) {
      if (dominant(mono, m, n)) {  // terms are sorted, first dominant is largest
        best = &mono;
        coeff = &c;
        break;
      }
    }
    if (best == nullptr) {
      res.remainder = f;
      return res;
    }
    EMonomial em = e_p(exponent_matrix(*best, m, n));
    Rat c = *coeff;
    f = f - (c * expand_e_monomial(m, n, em));
    res.representation.push_back({c, em});
  }
  return res;
}

}  // namespace gcryst
