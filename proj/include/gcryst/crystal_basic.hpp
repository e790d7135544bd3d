#pragma once

#include <utility>
#include <vector>

#include "gcryst/grid.hpp"
#include "gcryst/matrix.hpp"
#include "gcryst/semifield.hpp"

namespace gcryst {

// sigma^j(x, y; c) = sum_{r=1}^n c^{[r<=j]} y^1...y^{r-1} x^{r+1}...x^n.
template <Semifield T>
T sigma_j(const std::vector<T>& x, const std::vector<T>& y, const T& c, int j) {
  const int n = static_cast<int>(x.size());
  T total = T::zero();
  for (int r = 1; r <= n; ++r) {
    T term = (r <= j) ? c : T::one();
    for (int s = 1; s < r; ++s) term = term * y[s - 1];
    for (int s = r + 1; s <= n; ++s) term = term * x[s - 1];
    total = total + term;
  }
  return total;
}

// sigma(x, y) = sigma^j(x, y; 1), independent of j.
template <Semifield T>
T sigma(const std::vector<T>& x, const std::vector<T>& y) {
  return sigma_j(x, y, T::one(), 0);
}

template <Semifield T>
struct CrystalData {
  std::vector<T> gamma;
  T eps;
  T phi;
};

template <class T>
std::vector<T> row_products(const Grid<T>& x) {
  std::vector<T> pi(x.rows(), T::one());
  for (int i = 1; i <= x.rows(); ++i)
    for (int j = 1; j <= x.cols(); ++j) pi[i - 1] = pi[i - 1] * x.at(i, j);
  return pi;
}

// Structure maps of the GL_m-crystal whose operators act on rows i, i+1:
// gamma = (pi_1, ..., pi_m), eps_i = pi_{i+1}/sigma(x_i, x_{i+1}),
// phi_i = pi_i/sigma(x_i, x_{i+1}).
template <Semifield T>
CrystalData<T> structure_maps_row(const Grid<T>& x, int i) {
  CrystalData<T> d;
  d.gamma = row_products(x);
  T s = sigma(x.row(i), x.row(i + 1));
  d.eps = d.gamma[i] / s;
  d.phi = d.gamma[i - 1] / s;
  return d;
}

template <Semifield T>
CrystalData<T> structure_maps_col(const Grid<T>& x, int j) {
  return structure_maps_row(x.transposed(), j);
}

// Matrix route for the same maps: diagonal and subdiagonal entry ratios
// of the whirl product over the factors the operators do not mix (the
// columns, for row operators).
template <Semifield T>
CrystalData<T> structure_maps_row_via_matrix(const Grid<T>& x, int i) {
  Mat<T> M = m_of(x.transposed());  // m x m product over the columns of x
  CrystalData<T> d;
  d.gamma.resize(x.rows());
  for (int k = 1; k <= x.rows(); ++k) d.gamma[k - 1] = M.at(k, k);
  d.eps = M.at(i + 1, i + 1) / M.at(i + 1, i);
  d.phi = M.at(i, i) / M.at(i + 1, i);
  return d;
}

// e_i^c: rescales rows i, i+1 by the sigma^j / sigma^{j-1} ratios.
template <Semifield T>
Grid<T> e_row(const Grid<T>& x, int i, const T& c) {
  const int n = x.cols();
  std::vector<T> xi = x.row(i), xi1 = x.row(i + 1);
  std::vector<T> sig(n + 1);
  for (int j = 0; j <= n; ++j) sig[j] = sigma_j(xi, xi1, c, j);
  Grid<T> out = x;
  for (int j = 1; j <= n; ++j) {
    out.at(i, j) = sig[j] / sig[j - 1] * xi[j - 1];
    out.at(i + 1, j) = sig[j - 1] / sig[j] * xi1[j - 1];
  }
  return out;
}

// ebar_j^c acting on adjacent columns: transpose, act on rows, transpose.
template <Semifield T>
Grid<T> e_col(const Grid<T>& x, int j, const T& c) {
  return e_row(x.transposed(), j, c).transposed();
}

// Decoration F(x) = sum over all entries x_i^j.
template <Semifield T>
T decoration_sum(const Grid<T>& x) {
  T total = T::zero();
  for (int i = 1; i <= x.rows(); ++i)
    for (int j = 1; j <= x.cols(); ++j) total = total + x.at(i, j);
  return total;
}

// Weyl action s_i = e_i at c = eps_i/phi_i; involutive.
template <Semifield T>
Grid<T> weyl_row(const Grid<T>& x, int i) {
  auto d = structure_maps_row(x, i);
  return e_row(x, i, d.eps / d.phi);
}

template <Semifield T>
Grid<T> weyl_col(const Grid<T>& x, int j) {
  return weyl_row(x.transposed(), j).transposed();
}

// kappa_r = sum_{k=0}^{n-1} y_r ... y_{r+k-1} x_{r+k+1} ... x_{r+n-1},
// subscripts mod n; equals the loop homogeneous function H_{n-1}^{(r-1)}
// evaluated at the two rows.
template <Semifield T>
T kappa_r(const std::vector<T>& x, const std::vector<T>& y, int r) {
  const int n = static_cast<int>(x.size());
  auto wrap = [n](int s) { return ((s - 1) % n + n) % n; };  // 1-based -> 0-based
  T total = T::zero();
  for (int k = 0; k <= n - 1; ++k) {
    T term = T::one();
    for (int s = r; s <= r + k - 1; ++s) term = term * y[wrap(s)];
    for (int s = r + k + 1; s <= r + n - 1; ++s) term = term * x[wrap(s)];
    total = total + term;
  }
  return total;
}

// Geometric R-matrix on a pair of length-n vectors:
//   (x, y) -> (y', x'),  y'_j = y_j kappa_{j+1}/kappa_j,
//                        x'_j = x_j kappa_j/kappa_{j+1}.
template <Semifield T>
std::pair<std::vector<T>, std::vector<T>> geometric_R(const std::vector<T>& x,
                                                      const std::vector<T>& y) {
  const int n = static_cast<int>(x.size());
  std::vector<T> kappa(n + 1);
  for (int r = 1; r <= n; ++r) kappa[r - 1] = kappa_r(x, y, r);
  kappa[n] = kappa[0];  // kappa_{n+1} = kappa_1
  std::vector<T> yp(n), xp(n);
  for (int j = 1; j <= n; ++j) {
    yp[j - 1] = y[j - 1] * kappa[j] / kappa[j - 1];
    xp[j - 1] = x[j - 1] * kappa[j - 1] / kappa[j];
  }
  return {yp, xp};
}

// R_i swaps rows i, i+1 through the geometric R-matrix.
template <Semifield T>
Grid<T> r_matrix_rows(const Grid<T>& x, int i) {
  auto [yp, xp] = geometric_R(x.row(i), x.row(i + 1));
  Grid<T> out = x;
  out.set_row(i, yp);
  out.set_row(i + 1, xp);
  return out;
}

}  // namespace gcryst
