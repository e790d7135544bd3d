#pragma once

// Shared helpers for the test suites: samplers and small independent
// oracles that deliberately avoid the library's own code paths.

#include <vector>

#include "gcryst/grid.hpp"
#include "gcryst/gt_pattern.hpp"
#include "gcryst/matrix.hpp"
#include "gcryst/rng.hpp"

namespace gcryst::testutil {

inline Grid<Rat> random_grid(Rng& rng, int m, int n) {
  Grid<Rat> g(m, n);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) g.at(i, j) = rng.positive_rational();
  return g;
}

inline Pattern<Rat> random_pattern(Rng& rng, int width, int height) {
  Pattern<Rat> z(width, height);
  for (int i = 1; i <= z.p(); ++i)
    for (int j = i; j <= height; ++j) z.at(i, j) = rng.positive_rational();
  return z;
}

inline Mat<Rat> random_square(Rng& rng, int n) {
  Mat<Rat> a(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) a.at(i, j) = Rat(rng.uniform(-9, 9), rng.uniform(1, 5));
  return a;
}

inline Grid<long long> random_int_matrix(Rng& rng, int m, int n, long long max_entry) {
  Grid<long long> a(m, n);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) a.at(i, j) = rng.uniform(0, max_entry);
  return a;
}

// Plain cofactor-expansion determinant, kept independent of the library's
// minor() implementations.
inline Rat naive_det(const std::vector<std::vector<Rat>>& a) {
  const std::size_t k = a.size();
  if (k == 0) return Rat(1);
  if (k == 1) return a[0][0];
  Rat total = 0;
  for (std::size_t r = 0; r < k; ++r) {
    std::vector<std::vector<Rat>> sub;
    for (std::size_t s = 0; s < k; ++s) {
      if (s == r) continue;
      sub.push_back(std::vector<Rat>(a[s].begin() + 1, a[s].end()));
    }
    Rat term = a[r][0] * naive_det(sub);
    total = (r % 2 == 0) ? total + term : total - term;
  }
  return total;
}

inline Rat naive_minor(const Mat<Rat>& a, const std::vector<int>& I,
                       const std::vector<int>& J) {
  std::vector<std::vector<Rat>> sub;
  for (int i : I) {
    std::vector<Rat> row;
    for (int j : J) row.push_back(a.at(i, j));
    sub.push_back(row);
  }
  return naive_det(sub);
}

}  // namespace gcryst::testutil
