#pragma once

#include <vector>

#include "gcryst/gt_pattern.hpp"
#include "gcryst/semifield.hpp"

namespace gcryst {

namespace detail {

// The planar network Gamma_n^{<=m} attached to a pattern z: vertices
// (x, y) with x in [0,n], y in [0,p], x+y <= n (minus the origin); steps
// go south (weight 1, needs x >= 1) or southeast (weight
// z_{y,x+y} / z_{y,x+y-1}, with z_{y,y-1} = 1).  Source s <= p sits at
// (0, s); source s > p sits at (s - p, p).  Sink j' is (j, 0).
template <Semifield T>
class LgvSearch {
 public:
  LgvSearch(const Pattern<T>& z, const std::vector<int>& sources)
      : z_(z), sources_(sources), total_(T::zero()) {
    occupied_.assign(static_cast<std::size_t>(z.height() + 1) * (z.p() + 1), false);
  }

  // Sum over vertex-disjoint path families from the sources to sinks
  // 1', ..., k' (in order; planarity forces this pairing).
  T run() {
    descend(0, T::one());
    return total_;
  }

 private:
  char& occ(int x, int y) {
    return occupied_[static_cast<std::size_t>(x) * (z_.p() + 1) + y];
  }

  T diag_weight(int x, int y) const {
    // z_{y, x+y} / z_{y, x+y-1}, with z_{y, y-1} = 1.
    const T& num = z_.at(y, x + y);
    if (x == 0) return num;
    return num / z_.at(y, x + y - 1);
  }

  void descend(int path_index, const T& weight_so_far) {
    if (path_index == static_cast<int>(sources_.size())) {
      total_ = total_ + weight_so_far;
      return;
    }
    const int s = sources_[path_index];
    const int p = z_.p();
    int x0 = (s <= p) ? 0 : s - p;
    int y0 = (s <= p) ? s : p;
    walk(path_index, x0, y0, weight_so_far);
  }

  // Extends the current path from (x, y) toward sink (path_index+1)'.
  void walk(int path_index, int x, int y, const T& w) {
    if (occ(x, y)) return;
    const int target = path_index + 1;
    if (target - x < 0 || target - x > y) return;  // not enough steps left
    if (y == 0) {
      occ(x, y) = true;
      descend(path_index + 1, w);
      occ(x, y) = false;
      return;
    }
    occ(x, y) = true;
    if (x >= 1) walk(path_index, x, y - 1, w);                    // south
    if (x + y <= z_.height()) walk(path_index, x + 1, y - 1, w * diag_weight(x, y));
    occ(x, y) = false;
  }

  const Pattern<T>& z_;
  std::vector<int> sources_;
  std::vector<char> occupied_;
  T total_;
};

}  // namespace detail

// Subtraction-free sum over non-intersecting path families from sources I
// to sinks [1,|I|]' of the network Gamma_n^{<=m}; equals the flag minor
// Delta_I(Phi(z)) in the rational field, and works in both semifields.
template <Semifield T>
T lgv_flag_minor(const Pattern<T>& z, const std::vector<int>& sources) {
  if (sources.empty()) return T::one();
  detail::LgvSearch<T> search(z, sources);
  return search.run();
}

}  // namespace gcryst
