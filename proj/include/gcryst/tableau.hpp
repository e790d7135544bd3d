#pragma once

#include <algorithm>
#include <vector>

#include "gcryst/errors.hpp"
#include "gcryst/grid.hpp"
#include "gcryst/gt_pattern.hpp"

namespace gcryst {

// Semistandard Young tableau: rows weakly increase, columns strictly
// increase.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    validate();
  }

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }

  std::vector<int> shape() const {
    std::vector<int> s;
    for (const auto& r : rows_) s.push_back(static_cast<int>(r.size()));
    return s;
  }

  int max_entry() const {
    int m = 0;
    for (const auto& r : rows_)
      for (int v : r) m = std::max(m, v);
    return m;
  }

  // Schensted row insertion of a single letter.
  void insert(int letter) {
    int v = letter;
    for (auto& row : rows_) {
      auto it = std::upper_bound(row.begin(), row.end(), v);
      if (it == row.end()) {
        row.push_back(v);
        return;
      }
      std::swap(*it, v);
    }
    rows_.push_back({v});
  }

  friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows_ == b.rows_; }

 private:
  void validate() const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i + 1 < rows_.size() && rows_[i + 1].size() > rows_[i].size())
        throw NotSemistandard();
      for (std::size_t j = 0; j < rows_[i].size(); ++j) {
        if (rows_[i][j] < 1) throw NotSemistandard();
        if (j + 1 < rows_[i].size() && rows_[i][j] > rows_[i][j + 1])
          throw NotSemistandard();
        if (i + 1 < rows_.size() && j < rows_[i + 1].size() &&
            rows_[i + 1][j] <= rows_[i][j])
          throw NotSemistandard();
      }
    }
  }

  std::vector<std::vector<int>> rows_;
};

using IntMatrix = Grid<long long>;
using IntPattern = Pattern<long long>;

// Classical RSK: row i of the matrix is read as the weakly increasing
// word with a_i^j copies of the letter j; rows are inserted top to
// bottom, and cells created while inserting row i are recorded with an i.
inline std::pair<Tableau, Tableau> schensted_rsk(const IntMatrix& a) {
  Tableau p;
  std::vector<std::vector<int>> q_rows;
  for (int i = 1; i <= a.rows(); ++i) {
    for (int j = 1; j <= a.cols(); ++j)
      for (long long rep = 0; rep < a.at(i, j); ++rep) {
        p.insert(j);
        // Record the one new cell: shapes of p and q differ in one row.
        auto ps = p.shape();
        for (std::size_t r = 0; r < ps.size(); ++r) {
          std::size_t have = r < q_rows.size() ? q_rows[r].size() : 0;
          if (have < static_cast<std::size_t>(ps[r])) {
            if (r == q_rows.size()) q_rows.push_back({});
            q_rows[r].push_back(i);
            break;
          }
        }
      }
  }
  return {p, Tableau(q_rows)};
}

// Tableau -> integer GT pattern of the given height and width:
// a_{i,j} = number of entries <= j in row i; the bottom row is the shape.
inline IntPattern tableau_to_gt(const Tableau& t, int height, int width) {
  if (t.max_entry() > height) throw NotSemistandard();
  IntPattern z(width, height);
  for (int i = 1; i <= z.p(); ++i)
    for (int j = i; j <= height; ++j) {
      long long count = 0;
      if (i <= static_cast<int>(t.rows().size()))
        for (int v : t.rows()[i - 1])
          if (v <= j) ++count;
      z.at(i, j) = count;
    }
  return z;
}

// Inverse: row i of the tableau has a_{i,j} - a_{i,j-1} copies of j.
inline Tableau gt_to_tableau(const IntPattern& z) {
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= z.p(); ++i) {
    std::vector<int> row;
    long long prev = 0;
    for (int j = i; j <= z.height(); ++j) {
      for (long long rep = 0; rep < z.at(i, j) - prev; ++rep) row.push_back(j);
      prev = z.at(i, j);
    }
    rows.push_back(row);
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  return Tableau(rows);
}

// Interlacing check a_{i,j+1} >= a_{i,j} >= a_{i+1,j+1} plus
// nonnegativity: the integer points of the combinatorial GT cone.
inline bool is_valid_gt(const IntPattern& z) {
  for (int i = 1; i <= z.p(); ++i)
    for (int j = i; j <= z.height(); ++j) {
      if (z.at(i, j) < 0) return false;
      if (j + 1 <= z.height()) {
        if (z.at(i, j + 1) < z.at(i, j)) return false;
        if (z.valid_index(i + 1, j + 1) && z.at(i, j) < z.at(i + 1, j + 1)) return false;
      }
    }
  return true;
}

}  // namespace gcryst
