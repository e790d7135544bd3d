#pragma once

#include <utility>
#include <vector>

#include "gcryst/crystal_basic.hpp"
#include "gcryst/crystal_gt.hpp"
#include "gcryst/grid.hpp"
#include "gcryst/gt_pattern.hpp"
#include "gcryst/matrix.hpp"

namespace gcryst {

// Insertion pattern P in GT_n^{<=m} and recording pattern Q in GT_m^{<=n}
// with sh(P) = sh(Q).
template <class T>
struct PQPair {
  Pattern<T> P;
  Pattern<T> Q;
};

// Row insertion formulation: P = Psi(M(x_1,...,x_m)) and the k-th
// diagonal of Q is the shape of Psi(M(x_1,...,x_k)).  Prefix products
// are reused, so this is O(m) matrix products.
template <Semifield T>
PQPair<T> grsk_insert(const Grid<T>& x) {
  static_assert(has_subtraction_v<T>, "row insertion route requires determinants");
  const int m = x.rows(), n = x.cols();
  PQPair<T> pq;
  pq.Q = Pattern<T>(n, m);
  Mat<T> prefix = Mat<T>::identity(n);
  for (int k = 1; k <= m; ++k) {
    prefix = prefix * whirl(x.row(k));
    for (int j = 1; j <= std::min(k, n); ++j) {
      T num = flag_minor(prefix, interval(j, n));
      T den = flag_minor(prefix, interval(j + 1, n));
      if (num.is_zero() || den.is_zero()) throw VanishingMinor();
      pq.Q.at(j, k) = num / den;
    }
  }
  pq.P = psi_param(prefix, m);
  return pq;
}

// gMax_a^b and gMin_a^b of the local moves, with their boundary cases.
// gMax tropicalizes to max(x_a^{b-1}, x_{a-1}^b); gMin to
// min(x_{a+1}^b, x_a^{b+1}).
template <Semifield T>
T local_gmax(const Grid<T>& x, int a, int b) {
  if (a > 1 && b > 1) return gmax(x.at(a, b - 1), x.at(a - 1, b));
  if (a == 1 && b > 1) return x.at(1, b - 1);
  if (a > 1 && b == 1) return x.at(a - 1, 1);
  return T::one();
}

template <Semifield T>
T local_gmin(const Grid<T>& x, int a, int b) {
  const int m = x.rows(), n = x.cols();
  if (a < m && b < n) return x.at(a + 1, b) + x.at(a, b + 1);
  if (a == m && b < n) return x.at(m, b + 1);
  if (a < m && b == n) return x.at(a + 1, n);
  throw ForbiddenToggle();
}

enum class LocalMoveKind { eta, eta_inverse, toggle };

template <Semifield T>
void apply_local_move(Grid<T>& x, LocalMoveKind kind, int a, int b) {
  switch (kind) {
    case LocalMoveKind::eta:
      x.at(a, b) = x.at(a, b) * local_gmax(x, a, b);
      break;
    case LocalMoveKind::eta_inverse:
      x.at(a, b) = x.at(a, b) / local_gmax(x, a, b);
      break;
    case LocalMoveKind::toggle:
      if (a == x.rows() && b == x.cols()) throw ForbiddenToggle();
      x.at(a, b) = local_gmax(x, a, b) * local_gmin(x, a, b) / x.at(a, b);
      break;
  }
}

template <Semifield T>
Grid<T> local_move(const Grid<T>& x, LocalMoveKind kind, int a, int b) {
  Grid<T> out = x;
  apply_local_move(out, kind, a, b);
  return out;
}

namespace detail {

struct MoveStep {
  LocalMoveKind kind;
  int a, b;
};

// rho = tau . eta, each pass along a linear extension of the coordinate-
// wise partial order on [m] x [n] (row-major by default; commuting moves
// make the choice of extension irrelevant).  tau_a^b applies toggles up
// the diagonal strictly northwest of (a,b), nearest first.
inline std::vector<MoveStep> rho_steps(int m, int n, bool column_major) {
  std::vector<std::pair<int, int>> order;
  if (column_major) {
    for (int b = 1; b <= n; ++b)
      for (int a = 1; a <= m; ++a) order.push_back({a, b});
  } else {
    for (int a = 1; a <= m; ++a)
      for (int b = 1; b <= n; ++b) order.push_back({a, b});
  }
  std::vector<MoveStep> steps;
  for (auto [a, b] : order) steps.push_back({LocalMoveKind::eta, a, b});
  for (auto [a, b] : order)
    for (int t = 1; a - t >= 1 && b - t >= 1; ++t)
      steps.push_back({LocalMoveKind::toggle, a - t, b - t});
  return steps;
}

}  // namespace detail

// Local move formulation of gRSK (the map rho).  Equals
// glue(grsk_insert(x)) exactly on the positive domain, and is the
// tropical-mode implementation.
template <Semifield T>
Grid<T> grsk_local(const Grid<T>& x, bool column_major = false) {
  Grid<T> out = x;
  for (const auto& s : detail::rho_steps(x.rows(), x.cols(), column_major))
    apply_local_move(out, s.kind, s.a, s.b);
  return out;
}

// Inverse of rho: replay the elementary moves backwards (toggles are
// involutions, eta inverts to division by gMax).
template <Semifield T>
Grid<T> grsk_inverse(const Grid<T>& y) {
  auto steps = detail::rho_steps(y.rows(), y.cols(), false);
  Grid<T> out = y;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    LocalMoveKind kind =
        it->kind == LocalMoveKind::eta ? LocalMoveKind::eta_inverse : it->kind;
    apply_local_move(out, kind, it->a, it->b);
  }
  return out;
}

// Gluing: P occupies the bottom-left corner (entry z_{i,j} at cell
// (m-i+1, j-i+1)) and the transpose of Q the top-right corner (entry
// z'_{j,i} at cell (i-j+1, n-j+1)); the shared diagonal carries the
// common shape.
template <class T>
Grid<T> glue(const PQPair<T>& pq) {
  const int m = pq.Q.height(), n = pq.P.height();
  Grid<T> y(m, n);
  pq.P.for_each([&](int i, int j, const T& v) { y.at(m - i + 1, j - i + 1) = v; });
  pq.Q.for_each([&](int j, int i, const T& v) { y.at(i - j + 1, n - j + 1) = v; });
  return y;
}

template <class T>
PQPair<T> split(const Grid<T>& y) {
  const int m = y.rows(), n = y.cols();
  PQPair<T> pq;
  pq.P = Pattern<T>(m, n);
  pq.Q = Pattern<T>(n, m);
  for (int i = 1; i <= pq.P.p(); ++i)
    for (int j = i; j <= n; ++j) pq.P.at(i, j) = y.at(m - i + 1, j - i + 1);
  for (int j = 1; j <= pq.Q.p(); ++j)
    for (int i = j; i <= m; ++i) pq.Q.at(j, i) = y.at(i - j + 1, n - j + 1);
  return pq;
}

// Central charge Delta(x) = F(x) - F(P); equals F(Q) + delta_{m,n} z_{n,n}.
template <Semifield T>
T central_charge(const Grid<T>& x) {
  static_assert(has_subtraction_v<T>, "central charge subtracts decorations");
  PQPair<T> pq = split(grsk_local(x));
  return decoration_sum(x) - gt_decoration_sum(pq.P);
}

template <Semifield T>
Grid<T> invert_entries(const Grid<T>& x) {
  Grid<T> out = x;
  for (int i = 1; i <= x.rows(); ++i)
    for (int j = 1; j <= x.cols(); ++j) out.at(i, j) = x.at(i, j).inv();
  return out;
}

// The max-plus variant rho' = dagger-conjugate of rho: entrywise invert,
// apply rho, invert again.  Its P-entries are ratios of corner minors of
// the H-matrix product.
template <Semifield T>
Grid<T> noumi_yamada_grsk(const Grid<T>& x) {
  return invert_entries(grsk_local(invert_entries(x)));
}

}  // namespace gcryst
