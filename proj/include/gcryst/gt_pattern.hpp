#pragma once

#include <algorithm>
#include <vector>

#include "gcryst/semifield.hpp"

namespace gcryst {

// Trapezoidal Gelfand-Tsetlin array z_{i,j} over a semifield (or over the
// integers for the combinatorial shadow): index set
// {(i,j) : 1 <= i <= width, i <= j <= height}, so rows i run up to
// p = min(width, height).  The shape is the bottom diagonal
// (z_{1,height}, ..., z_{p,height}).
template <class T>
class Pattern {
 public:
  Pattern() : width_(0), height_(0) {}
  Pattern(int width, int height) : width_(width), height_(height) {
    rows_.resize(p());
    for (int i = 1; i <= p(); ++i) rows_[i - 1].assign(height_ - i + 1, T{});
  }

  int width() const { return width_; }    // the "<= m" bound
  int height() const { return height_; }  // number of diagonals n
  int p() const { return std::min(width_, height_); }

  bool valid_index(int i, int j) const {
    return i >= 1 && i <= p() && j >= i && j <= height_;
  }

  T& at(int i, int j) { return rows_[i - 1][j - i]; }
  const T& at(int i, int j) const { return rows_[i - 1][j - i]; }

  std::vector<T> shape() const {
    std::vector<T> s(p());
    for (int i = 1; i <= p(); ++i) s[i - 1] = at(i, height_);
    return s;
  }

  template <class F>
  void for_each(F&& f) const {
    for (int i = 1; i <= p(); ++i)
      for (int j = i; j <= height_; ++j) f(i, j, at(i, j));
  }

  friend bool operator==(const Pattern& a, const Pattern& b) {
    return a.width_ == b.width_ && a.height_ == b.height_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const Pattern& a, const Pattern& b) { return !(a == b); }

 private:
  int width_, height_;
  std::vector<std::vector<T>> rows_;
};

template <class T>
std::vector<T> gt_shape(const Pattern<T>& z) {
  return z.shape();
}

}  // namespace gcryst
