#pragma once

#include <algorithm>
#include <vector>

#include "gcryst/grid.hpp"
#include "gcryst/semifield.hpp"

namespace gcryst {

// Square/rectangular matrix over a semiring, 1-indexed.  In tropical mode
// the additive zero is the "absent" marker, which appears exactly where
// whirl products have structural zeros.
template <class T>
class Mat {
 public:
  Mat() : r_(0), c_(0) {}
  Mat(int rows, int cols, const T& fill = T::zero())
      : r_(rows), c_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 1; i <= n; ++i) m.at(i, i) = T::one();
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  T& at(int i, int j) { return data_[static_cast<std::size_t>(i - 1) * c_ + (j - 1)]; }
  const T& at(int i, int j) const {
    return data_[static_cast<std::size_t>(i - 1) * c_ + (j - 1)];
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    Mat out(a.r_, b.c_);
    for (int i = 1; i <= a.r_; ++i)
      for (int k = 1; k <= a.c_; ++k) {
        const T& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 1; j <= b.c_; ++j) {
          if (b.at(k, j).is_zero()) continue;
          out.at(i, j) = out.at(i, j) + aik * b.at(k, j);
        }
      }
    return out;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

 private:
  int r_, c_;
  std::vector<T> data_;
};

// W(x_1, ..., x_n): entries x_i along the main diagonal, 1's directly
// beneath, 0's elsewhere.
template <Semiring T>
Mat<T> whirl(const std::vector<T>& x) {
  const int n = static_cast<int>(x.size());
  Mat<T> w(n, n);
  for (int i = 1; i <= n; ++i) w.at(i, i) = x[i - 1];
  for (int i = 1; i < n; ++i) w.at(i + 1, i) = T::one();
  return w;
}

// M(x) = W(x_1) ... W(x_m), the n x n whirl product over the rows of the
// grid.  Lies in (B^-)^{<= m}; entry (i,j) is the loop elementary
// symmetric function E^{(i)}_{m+j-i}.
template <Semiring T>
Mat<T> m_of(const Grid<T>& x) {
  Mat<T> acc = Mat<T>::identity(x.cols());
  for (int i = 1; i <= x.rows(); ++i) acc = acc * whirl(x.row(i));
  return acc;
}

// W^i(z_i, ..., z_n) = sum_{k<i} E_kk + sum_{k>=i} z_k E_kk + sum_{k=i}^{n-1} E_{k+1,k}.
template <Semiring T>
Mat<T> wi_matrix(int i, const std::vector<T>& z, int n) {
  Mat<T> w(n, n);
  for (int k = 1; k < i; ++k) w.at(k, k) = T::one();
  for (int k = i; k <= n; ++k) w.at(k, k) = z[k - i];
  for (int k = i; k <= n - 1; ++k) w.at(k + 1, k) = T::one();
  return w;
}

// H(a^1, ..., a^n) = sum_{i<=j} a^i a^{i+1} ... a^j E_{ij}.
template <Semiring T>
Mat<T> h_matrix(const std::vector<T>& a) {
  const int n = static_cast<int>(a.size());
  Mat<T> h(n, n);
  for (int i = 1; i <= n; ++i) {
    T prod = T::one();
    for (int j = i; j <= n; ++j) {
      prod = prod * a[j - 1];
      h.at(i, j) = prod;
    }
  }
  return h;
}

namespace detail {

// Cofactor (Laplace) expansion along the first column; works over any
// ring with subtraction.
template <class T>
T laplace_det_impl(const Mat<T>& a, std::vector<int>& rows, std::vector<int>& cols) {
  const std::size_t k = rows.size();
  if (k == 0) return T::one();
  if (k == 1) return a.at(rows[0], cols[0]);
  T det = T::zero();
  const int col0 = cols[0];
  std::vector<int> subcols(cols.begin() + 1, cols.end());
  for (std::size_t r = 0; r < k; ++r) {
    const T& pivot = a.at(rows[r], col0);
    if (pivot.is_zero()) continue;
    std::vector<int> subrows;
    subrows.reserve(k - 1);
    for (std::size_t s = 0; s < k; ++s)
      if (s != r) subrows.push_back(rows[s]);
    T minor_det = laplace_det_impl(a, subrows, subcols);
    T term = pivot * minor_det;
    det = (r % 2 == 0) ? det + term : det - term;
  }
  return det;
}

}  // namespace detail

// Determinant of the submatrix on rows I and columns J, by Laplace
// expansion.  Delta_emptyset = 1.
template <class T>
T laplace_minor(const Mat<T>& a, std::vector<int> I, std::vector<int> J) {
  if constexpr (!has_subtraction_v<T>) {
    throw CapabilityError("determinant requires subtraction (rational field only)");
  } else {
    std::sort(I.begin(), I.end());
    std::sort(J.begin(), J.end());
    return detail::laplace_det_impl(a, I, J);
  }
}

// Same minor by fraction-aware Gaussian elimination; needs division.
template <class T>
T elimination_minor(const Mat<T>& a, std::vector<int> I, std::vector<int> J) {
  if constexpr (!has_subtraction_v<T>) {
    throw CapabilityError("determinant requires subtraction (rational field only)");
  } else {
    std::sort(I.begin(), I.end());
    std::sort(J.begin(), J.end());
    const int k = static_cast<int>(I.size());
    if (k == 0) return T::one();
    std::vector<std::vector<T>> w(k, std::vector<T>(k, T::zero()));
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) w[r][c] = a.at(I[r], J[c]);
    T det = T::one();
    bool negate = false;
    for (int col = 0; col < k; ++col) {
      int pivot = -1;
      for (int r = col; r < k; ++r)
        if (!w[r][col].is_zero()) { pivot = r; break; }
      if (pivot < 0) return T::zero();
      if (pivot != col) { std::swap(w[pivot], w[col]); negate = !negate; }
      det = det * w[col][col];
      for (int r = col + 1; r < k; ++r) {
        if (w[r][col].is_zero()) continue;
        T factor = w[r][col] / w[col][col];
        for (int c = col; c < k; ++c) w[r][c] = w[r][c] - factor * w[col][c];
      }
    }
    return negate ? T::zero() - det : det;
  }
}

// Delta_{I,J}(A).  Laplace for size <= 4 (tiny sizes dominate),
// elimination above that when division is available.
template <class T>
T minor(const Mat<T>& a, const std::vector<int>& I, const std::vector<int>& J) {
  if constexpr (!has_subtraction_v<T>) {
    throw CapabilityError("determinant requires subtraction (rational field only)");
  } else {
    if constexpr (Semifield<T>) {
      if (I.size() > 4) return elimination_minor(a, I, J);
    }
    return laplace_minor(a, I, J);
  }
}

inline std::vector<int> interval(int lo, int hi) {
  std::vector<int> v;
  for (int k = lo; k <= hi; ++k) v.push_back(k);
  return v;
}

// Flag minor Delta_I(A) = Delta_{I, [1,|I|]}(A).
template <class T>
T flag_minor(const Mat<T>& a, const std::vector<int>& I) {
  return minor(a, I, interval(1, static_cast<int>(I.size())));
}

template <class T>
T det(const Mat<T>& a) {
  return minor(a, interval(1, a.rows()), interval(1, a.cols()));
}

// Delta_{[n]\I, [n]\J}(A), as in the Jacobi minor identity.
template <class T>
T complement_minor(const Mat<T>& a, const std::vector<int>& I, const std::vector<int>& J) {
  std::vector<int> ci, cj;
  for (int k = 1; k <= a.rows(); ++k)
    if (std::find(I.begin(), I.end(), k) == I.end()) ci.push_back(k);
  for (int k = 1; k <= a.cols(); ++k)
    if (std::find(J.begin(), J.end(), k) == J.end()) cj.push_back(k);
  return minor(a, ci, cj);
}

// A-dagger: transposed inverse with row and column i scaled by (-1)^{i-1},
// so that Delta_{I,J}(A-dagger) = Delta_{[n]\I, [n]\J}(A) / det(A).
template <Semifield T>
Mat<T> dagger(const Mat<T>& a) {
  static_assert(has_subtraction_v<T>, "dagger requires the rational field");
  const int n = a.rows();
  const T d = det(a);
  if (d.is_zero()) throw SingularMatrix();
  // Augmented Gauss-Jordan inverse.
  std::vector<std::vector<T>> w(n, std::vector<T>(2 * n, T::zero()));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w[i][j] = a.at(i + 1, j + 1);
    w[i][n + i] = T::one();
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!w[r][col].is_zero()) { pivot = r; break; }
    if (pivot < 0) throw SingularMatrix();
    std::swap(w[pivot], w[col]);
    T inv_p = w[col][col].inv();
    for (int c = 0; c < 2 * n; ++c) w[col][c] = w[col][c] * inv_p;
    for (int r = 0; r < n; ++r) {
      if (r == col || w[r][col].is_zero()) continue;
      T factor = w[r][col];
      for (int c = 0; c < 2 * n; ++c) w[r][c] = w[r][c] - factor * w[col][c];
    }
  }
  Mat<T> out(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      T sign = ((i + j) % 2 == 0) ? T::one() : T::zero() - T::one();
      out.at(i, j) = sign * w[j - 1][n + i - 1];  // (A^{-1})^t with signs
    }
  return out;
}

// Evaluates the loop elementary symmetric function E^{(r)}_k at the rows
// of the grid: sum over 1 <= i_1 < ... < i_k <= m of
// x_{i_1}^{(r)} x_{i_2}^{(r+1)} ... x_{i_k}^{(r+k-1)}, where
// x_i^{(s)} = x_i^{s-i+1 mod n}.  Subtraction-free, so it works in both
// semifields.
template <Semiring T>
T eval_loop_e(const Grid<T>& x, int k, int r) {
  const int m = x.rows(), n = x.cols();
  if (k == 0) return T::one();
  if (k < 0 || k > m) return T::zero();
  // dp[d] = sum over d-subsets of the rows processed so far.
  std::vector<T> dp(static_cast<std::size_t>(k) + 1, T::zero());
  dp[0] = T::one();
  for (int row = 1; row <= m; ++row) {
    for (int d = std::min(k, row); d >= 1; --d) {
      // row used in slot d carries color r+d-1, hence column (r+d-1)-row+1 mod n.
      int col = ((r + d - 1 - row) % n + n) % n + 1;
      dp[d] = dp[d] + dp[d - 1] * x.at(row, col);
    }
  }
  return dp[k];
}

// Window of the n-periodic matrix M~ = W~(x_1) ... W~(x_m): entry (i,j)
// is E^{(i)}_{m+j-i} with superscripts mod n.  The periodic matrix is
// never materialized; entries are computed on demand.
template <Semiring T>
Mat<T> periodic_window(const Grid<T>& x, int row_lo, int row_hi, int col_lo, int col_hi) {
  Mat<T> out(row_hi - row_lo + 1, col_hi - col_lo + 1);
  for (int i = row_lo; i <= row_hi; ++i)
    for (int j = col_lo; j <= col_hi; ++j)
      out.at(i - row_lo + 1, j - col_lo + 1) = eval_loop_e(x, x.rows() + j - i, i);
  return out;
}

}  // namespace gcryst
