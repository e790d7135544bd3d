#pragma once

#include <vector>

#include "gcryst/semifield.hpp"

namespace gcryst {

// m x n grid of semifield values (or plain integers for the combinatorial
// shadow): a point of Mat_{m x n}.  Rows and columns are 1-indexed
// throughout, matching the x_i^j notation.
template <class T>
class Grid {
 public:
  Grid() : m_(0), n_(0) {}
  Grid(int m, int n, const T& fill = T{})
      : m_(m), n_(n), data_(static_cast<std::size_t>(m) * n, fill) {}

  static Grid from_rows(const std::vector<std::vector<T>>& rows) {
    Grid g(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 1; i <= g.m_; ++i)
      for (int j = 1; j <= g.n_; ++j) g.at(i, j) = rows[i - 1][j - 1];
    return g;
  }

  int rows() const { return m_; }
  int cols() const { return n_; }

  T& at(int i, int j) { return data_[idx(i, j)]; }
  const T& at(int i, int j) const { return data_[idx(i, j)]; }

  std::vector<T> row(int i) const {
    std::vector<T> r(n_);
    for (int j = 1; j <= n_; ++j) r[j - 1] = at(i, j);
    return r;
  }
  std::vector<T> col(int j) const {
    std::vector<T> c(m_);
    for (int i = 1; i <= m_; ++i) c[i - 1] = at(i, j);
    return c;
  }
  void set_row(int i, const std::vector<T>& r) {
    for (int j = 1; j <= n_; ++j) at(i, j) = r[j - 1];
  }

  Grid transposed() const {
    Grid t(n_, m_);
    for (int i = 1; i <= m_; ++i)
      for (int j = 1; j <= n_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Grid& a, const Grid& b) { return !(a == b); }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
  }

  int m_, n_;
  std::vector<T> data_;
};

}  // namespace gcryst
