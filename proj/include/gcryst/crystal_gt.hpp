#pragma once

#include <vector>

#include "gcryst/crystal_basic.hpp"
#include "gcryst/gt_pattern.hpp"
#include "gcryst/matrix.hpp"
#include "gcryst/semifield.hpp"

namespace gcryst {

// Phi_n^{<=m}(z) = W^p(z_{p,p}, z_{p,p+1}/z_{p,p}, ...) ... W^1(z_{1,1}, ...).
template <Semifield T>
Mat<T> phi_param(const Pattern<T>& z) {
  const int n = z.height();
  const int p = z.p();
  Mat<T> acc = Mat<T>::identity(n);
  for (int i = p; i >= 1; --i) {
    std::vector<T> args;
    args.reserve(n - i + 1);
    args.push_back(z.at(i, i));
    for (int j = i + 1; j <= n; ++j) args.push_back(z.at(i, j) / z.at(i, j - 1));
    acc = acc * wi_matrix(i, args, n);
  }
  return acc;
}

// Psi: z_{i,j} = Delta_{[i,j]}(A) / Delta_{[i+1,j]}(A).  Rational field
// only; throws VanishingMinor if a needed flag minor is zero.
template <Semifield T>
Pattern<T> psi_param(const Mat<T>& a, int width) {
  static_assert(has_subtraction_v<T>, "psi requires determinants");
  const int n = a.rows();
  Pattern<T> z(width, n);
  for (int i = 1; i <= z.p(); ++i)
    for (int j = i; j <= n; ++j) {
      T num = flag_minor(a, interval(i, j));
      T den = flag_minor(a, interval(i + 1, j));
      if (den.is_zero() || num.is_zero()) throw VanishingMinor();
      z.at(i, j) = num / den;
    }
  return z;
}

// Structure maps of the GT geometric crystal, through the matrix
// Phi(z): only entries of the matrix are needed, so this route is
// subtraction-free and works in both semifields.
template <Semifield T>
CrystalData<T> gt_maps(const Pattern<T>& z, int j) {
  Mat<T> M = phi_param(z);
  CrystalData<T> d;
  d.gamma.resize(z.height());
  for (int k = 1; k <= z.height(); ++k) d.gamma[k - 1] = M.at(k, k);
  d.eps = M.at(j + 1, j + 1) / M.at(j + 1, j);
  d.phi = M.at(j, j) / M.at(j + 1, j);
  return d;
}

// Diamond ratio phi_{i,j} = z_{i-1,j} z_{i,j} / (z_{i-1,j-1} z_{i,j+1}).
template <Semifield T>
T diamond_ratio(const Pattern<T>& z, int i, int j) {
  return z.at(i - 1, j) * z.at(i, j) / (z.at(i - 1, j - 1) * z.at(i, j + 1));
}

// Explicit closed forms (full-triangle case m >= n), kept as an
// independent cross-check of the matrix route.
template <Semifield T>
CrystalData<T> gt_maps_explicit(const Pattern<T>& z, int j) {
  const int n = z.height();
  CrystalData<T> d;
  d.gamma.resize(n);
  for (int k = 1; k <= n; ++k) {
    T num = T::one(), den = T::one();
    for (int i = 1; i <= k; ++i) num = num * z.at(i, k);
    for (int i = 1; i <= k - 1; ++i) den = den * z.at(i, k - 1);
    d.gamma[k - 1] = num / den;
  }
  std::vector<T> eps_args, phi_args;
  for (int k = 1; k <= j; ++k) {
    T pe = T::one();
    for (int i = 2; i <= k; ++i) pe = pe * diamond_ratio(z, i, j).inv();
    eps_args.push_back(pe);
    T pp = T::one();
    for (int i = k + 1; i <= j; ++i) pp = pp * diamond_ratio(z, i, j);
    phi_args.push_back(pp);
  }
  d.eps = z.at(1, j + 1) / z.at(1, j) * gmax(std::span<const T>(eps_args));
  d.phi = z.at(j, j) / z.at(j + 1, j + 1) * gmax(std::span<const T>(phi_args));
  return d;
}

namespace detail {

// Left-multiplies by x_j(a) = I + a E_{j,j+1} (adds a * row j+1 to row j)
// and right-multiplies by x_j(b) (adds b * column j to column j+1).
template <class T>
void chevalley_sandwich(Mat<T>& M, int j, const T& left, const T& right) {
  for (int col = 1; col <= M.cols(); ++col)
    M.at(j, col) = M.at(j, col) + left * M.at(j + 1, col);
  for (int row = 1; row <= M.rows(); ++row)
    M.at(row, j + 1) = M.at(row, j + 1) + right * M.at(row, j);
}

}  // namespace detail

// ebar_j^c via the matrix sandwich (normative for all (m,n); rational
// field only since it passes through Psi).
template <Semifield T>
Pattern<T> gt_e(const Pattern<T>& z, int j, const T& c) {
  static_assert(has_subtraction_v<T>, "matrix route requires determinants");
  auto d = gt_maps(z, j);
  Mat<T> M = phi_param(z);
  T left = (c - T::one()) * d.phi;
  T right = (c.inv() - T::one()) * d.eps;
  detail::chevalley_sandwich(M, j, left, right);
  return psi_param(M, z.width());
}

// Explicit route (m >= n): z'_{i,j} = z_{i,j} C_{i,j} / C_{i+1,j} with
// C_{i,j} = sum_{k=1}^j c^{[k>=i]} prod_{l=2}^k phi_{l,j}.  Subtraction-
// free, so it is also the tropical-mode implementation.
template <Semifield T>
Pattern<T> gt_e_explicit(const Pattern<T>& z, int j, const T& c) {
  std::vector<T> prefix(j + 1);  // prefix[k-1] = prod_{l=2}^k phi_{l,j}
  prefix[0] = T::one();
  for (int k = 2; k <= j; ++k) prefix[k - 1] = prefix[k - 2] * diamond_ratio(z, k, j);
  auto C = [&](int i) {
    T total = T::zero();
    for (int k = 1; k <= j; ++k) {
      T term = prefix[k - 1];
      if (k >= i) term = term * c;
      total = total + term;
    }
    return total;
  };
  Pattern<T> out = z;
  for (int i = 1; i <= j; ++i) out.at(i, j) = z.at(i, j) * C(i) / C(i + 1);
  return out;
}

// Decoration, sum form:
//   F(z) = sum z_{i,j+1}/z_{i,j} + sum z_{i,j}/z_{i+1,j+1} + [m<n] z_{m,m}.
// Subtraction-free.  (The corner term is z_{m,m}: z_{n,n} is not an entry
// when m < n, and the minor form pins this choice.)
template <Semifield T>
T gt_decoration_sum(const Pattern<T>& z) {
  const int m = z.width(), n = z.height();
  T total = T::zero();
  for (int i = 1; i <= z.p(); ++i)
    for (int j = i; j <= n - 1; ++j) total = total + z.at(i, j + 1) / z.at(i, j);
  for (int i = 1; i <= std::min(m - 1, z.p() - 1); ++i)
    for (int j = i; j <= n - 1; ++j) total = total + z.at(i, j) / z.at(i + 1, j + 1);
  if (m < n) total = total + z.at(m, m);
  return total;
}

// Decoration, flag-minor form (independent cross-check; rational only).
template <Semifield T>
T gt_decoration_minor(const Pattern<T>& z) {
  static_assert(has_subtraction_v<T>, "minor route requires determinants");
  const int m = z.width(), n = z.height();
  Mat<T> M = phi_param(z);
  auto ratio = [&](std::vector<int> In, std::vector<int> Jn, std::vector<int> Id,
                   std::vector<int> Jd) {
    T den = minor(M, Id, Jd);
    if (den.is_zero()) throw VanishingMinor();
    return minor(M, In, Jn) / den;
  };
  T total = T::zero();
  for (int k = 1; k <= std::min(m - 1, n - 1); ++k) {
    std::vector<int> rows_a = {k};
    for (int r = k + 2; r <= n; ++r) rows_a.push_back(r);
    std::vector<int> cols_b = interval(1, n - k - 1);
    cols_b.push_back(n - k + 1);
    total = total + ratio(rows_a, interval(1, n - k), interval(k + 1, n), interval(1, n - k));
    total = total + ratio(interval(k + 1, n), cols_b, interval(k + 1, n), interval(1, n - k));
  }
  if (m < n) {
    std::vector<int> rows_m = {m};
    for (int r = m + 2; r <= n; ++r) rows_m.push_back(r);
    total = total + ratio(rows_m, interval(1, n - m), interval(m + 1, n), interval(1, n - m));
    for (int j = 1; j <= n - m; ++j) {
      std::vector<int> cols_j = interval(1, j - 1);
      cols_j.push_back(j + 1);
      total = total +
              ratio(interval(m + 1, m + j), cols_j, interval(m + 1, m + j), interval(1, j));
    }
  }
  return total;
}

// Row rescaling action (omega . z)_{i,j} = omega_i z_{i,j}; the crystal
// operators commute with it.
template <Semifield T>
Pattern<T> scale_rows(const Pattern<T>& z, const std::vector<T>& omega) {
  Pattern<T> out = z;
  for (int i = 1; i <= z.p(); ++i)
    for (int j = i; j <= z.height(); ++j) out.at(i, j) = omega[i - 1] * z.at(i, j);
  return out;
}

}  // namespace gcryst
