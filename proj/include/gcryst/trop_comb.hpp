#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "gcryst/crystal_basic.hpp"
#include "gcryst/grsk.hpp"
#include "gcryst/tableau.hpp"
#include "gcryst/tropical.hpp"

namespace gcryst {

inline Grid<Trop> to_tropical(const IntMatrix& a) {
  Grid<Trop> t(a.rows(), a.cols());
  for (int i = 1; i <= a.rows(); ++i)
    for (int j = 1; j <= a.cols(); ++j) t.at(i, j) = Trop(a.at(i, j));
  return t;
}

inline IntMatrix from_tropical(const Grid<Trop>& t) {
  IntMatrix a(t.rows(), t.cols());
  for (int i = 1; i <= t.rows(); ++i)
    for (int j = 1; j <= t.cols(); ++j) a.at(i, j) = t.at(i, j).value().get_si();
  return a;
}

// Tropical gRSK: the generic local-move code re-run over the tropical
// semifield (gMax becomes max, sums become min).
inline IntMatrix trop_grsk(const IntMatrix& a) {
  return from_tropical(grsk_local(to_tropical(a)));
}

inline IntMatrix trop_grsk_inverse(const IntMatrix& a) {
  return from_tropical(grsk_inverse(to_tropical(a)));
}

enum class CrystalAxis { row, col };
enum class CrystalDirection { raise, lower };

// Free tropical crystal operator followed by the decoration cut:
// apply Trop(e_i^c) at c = 1 (raise) or c = -1 (lower), and return the
// result only if it stays entrywise nonnegative (Trop(F) >= 0 for
// F = sum x_i^j); otherwise the operator is undefined.
inline std::optional<IntMatrix> trop_crystal_e(const IntMatrix& a, int i,
                                               CrystalDirection dir,
                                               CrystalAxis axis = CrystalAxis::row) {
  if (axis == CrystalAxis::col) {
    auto r = trop_crystal_e(a.transposed(), i, dir);
    if (!r) return std::nullopt;
    return r->transposed();
  }
  Trop c(dir == CrystalDirection::raise ? 1 : -1);
  Grid<Trop> out = e_row(to_tropical(a), i, c);
  for (int r = 1; r <= out.rows(); ++r)
    for (int s = 1; s <= out.cols(); ++s)
      if (out.at(r, s).value() < 0) return std::nullopt;
  return from_tropical(out);
}

namespace detail {

// One-row GL_m crystal on (Z_{>=0})^m: eps_i = a_{i+1}, phi_i = a_i,
// e_i moves a unit from slot i+1 to slot i.
struct OneRow {
  std::vector<long long> a;

  long long eps(int i) const { return a[i]; }
  long long phi(int i) const { return a[i - 1]; }
  bool raise(int i) {
    if (a[i] == 0) return false;
    ++a[i - 1], --a[i];
    return true;
  }
  bool lower(int i) {
    if (a[i - 1] == 0) return false;
    --a[i - 1], ++a[i];
    return true;
  }
};

}  // namespace detail

// Independent oracle: the tensor product B_1 x ... x B_n of one-row
// crystals (factors are the columns), with the standard tensor rule
//   e(b, b') = (e b, b') if eps(b) > phi(b'), else (b, e b'),
//   f(b, b') = (f b, b') if eps(b) >= phi(b'), else (b, f b'),
// folded left to right.  No sigma formulas anywhere.
inline std::optional<IntMatrix> comb_crystal_oracle(const IntMatrix& a, int i,
                                                    CrystalDirection dir,
                                                    CrystalAxis axis = CrystalAxis::row) {
  if (axis == CrystalAxis::col) {
    auto r = comb_crystal_oracle(a.transposed(), i, dir);
    if (!r) return std::nullopt;
    return r->transposed();
  }
  const int n = a.cols();
  std::vector<detail::OneRow> factors(n);
  for (int j = 1; j <= n; ++j) {
    factors[j - 1].a.resize(a.rows());
    for (int r = 1; r <= a.rows(); ++r) factors[j - 1].a[r - 1] = a.at(r, j);
  }
  // eps/phi of the prefix B_1 x ... x B_k, folded by the tensor formulas.
  std::vector<long long> pre_eps(n + 1, 0), pre_phi(n + 1, 0);
  pre_eps[1] = factors[0].eps(i);
  pre_phi[1] = factors[0].phi(i);
  for (int k = 2; k <= n; ++k) {
    long long e2 = factors[k - 1].eps(i), p2 = factors[k - 1].phi(i);
    long long cut = std::min(pre_eps[k - 1], p2);
    pre_eps[k] = pre_eps[k - 1] + e2 - cut;
    pre_phi[k] = pre_phi[k - 1] + p2 - cut;
  }
  // Walk back down the fold to find which factor acts.
  int k = n;
  while (k > 1) {
    bool left;
    if (dir == CrystalDirection::raise)
      left = pre_eps[k - 1] > factors[k - 1].phi(i);
    else
      left = pre_eps[k - 1] >= factors[k - 1].phi(i);
    if (!left) break;
    --k;
  }
  bool ok = dir == CrystalDirection::raise ? factors[k - 1].raise(i)
                                           : factors[k - 1].lower(i);
  if (!ok) return std::nullopt;
  IntMatrix out = a;
  for (int r = 1; r <= a.rows(); ++r) out.at(r, k) = factors[k - 1].a[r - 1];
  return out;
}

// Tropicalized GT decoration of an integer pattern: min over the terms
// of F (differences replace the ratios), with the corner term z_{m,m}
// when width < height.  A pattern with no decoration terms (height 1,
// width >= height) has F identically zero in the rational world; the
// tropical min is then empty, signalled by nullopt so the term drops out
// of tropicalized identities instead of contributing a spurious 0.
inline std::optional<long long> trop_gt_decoration(const IntPattern& z) {
  const int m = z.width(), n = z.height();
  std::optional<long long> best;
  auto take = [&](long long v) {
    if (!best || v < *best) best = v;
  };
  for (int i = 1; i <= z.p(); ++i)
    for (int j = i; j <= n - 1; ++j) take(z.at(i, j + 1) - z.at(i, j));
  for (int i = 1; i <= std::min(m - 1, z.p() - 1); ++i)
    for (int j = i; j <= n - 1; ++j) take(z.at(i, j) - z.at(i + 1, j + 1));
  if (m < n) take(z.at(m, m));
  return best;
}

// Tropical central charge Trop(Delta) = min(Trop(F)(Q), [m=n] z_{n,n}).
// For a single row (m = 1, n >= 2) the rational central charge is the
// zero function and the tropical min is empty; 0 is returned there.
inline long long trop_central_charge(const IntMatrix& a) {
  PQPair<long long> pq = split(trop_grsk(a));
  std::optional<long long> charge = trop_gt_decoration(pq.Q);
  if (a.rows() == a.cols()) {
    long long corner = pq.P.at(pq.P.p(), pq.P.height());
    charge = charge ? std::min(*charge, corner) : corner;
  }
  return charge.value_or(0);
}

// All integer GT patterns of the given height/width whose weight (row
// sums of diagonal differences) equals mu.
inline std::vector<IntPattern> patterns_with_content(int height, int width,
                                                     const std::vector<long long>& mu) {
  std::vector<IntPattern> result;
  IntPattern z(width, height);
  auto row_entries = [&](int j) {  // indices i valid in diagonal row j
    return std::min(j, z.p());
  };
  auto rec = [&](auto&& self, int j) -> void {
    if (j > height) {
      result.push_back(z);
      return;
    }
    long long target = 0;  // sum of diagonal row j = mu_1 + ... + mu_j
    for (int t = 0; t < j; ++t) target += mu[t];
    const int k = row_entries(j);
    std::vector<long long> vals(k);
    auto fill = [&](auto&& self2, int idx, long long remaining) -> void {
      if (idx == k) {
        if (remaining != 0) return;
        for (int i = 1; i <= k; ++i) z.at(i, j) = vals[i - 1];
        bool ok = true;  // interlacing against row j-1
        for (int i = 1; i <= k && ok; ++i) {
          if (j > 1 && z.valid_index(i, j - 1)) {
            if (z.at(i, j) < z.at(i, j - 1)) ok = false;
            if (i + 1 <= k && vals[i] > z.at(i, j - 1)) ok = false;
          }
        }
        for (int i = 1; i + 1 <= k && ok; ++i)
          if (vals[i - 1] < vals[i]) ok = false;
        if (ok) self(self, j + 1);
        return;
      }
      for (long long v = remaining; v >= 0; --v) {
        vals[idx] = v;
        self2(self2, idx + 1, remaining - v);
      }
    };
    fill(fill, 0, target);
  };
  rec(rec, 1);
  return result;
}

// q-analogue of tensor multiplicities: group the recording patterns of
// content mu by shape and count them by tropical central charge.
struct QAnalogueRow {
  std::vector<long long> shape;
  std::map<long long, long long> coeffs;  // charge -> multiplicity
};

inline std::vector<QAnalogueRow> q_analogue(int m, int n, const std::vector<long long>& mu) {
  // Recording patterns live in GT_m^{<=n}: height m, width n.
  std::vector<QAnalogueRow> rows;
  for (const IntPattern& q : patterns_with_content(m, n, mu)) {
    std::optional<long long> dec = trop_gt_decoration(q);
    if (m == n) {
      long long corner = q.at(q.p(), q.height());
      dec = dec ? std::min(*dec, corner) : corner;
    }
    long long charge = dec.value_or(0);
    auto shape = q.shape();
    auto it = std::find_if(rows.begin(), rows.end(),
                           [&](const QAnalogueRow& r) { return r.shape == shape; });
    if (it == rows.end()) {
      rows.push_back({shape, {}});
      it = rows.end() - 1;
    }
    ++it->coeffs[charge];
  }
  std::sort(rows.begin(), rows.end(), [](const QAnalogueRow& a, const QAnalogueRow& b) {
    return a.shape > b.shape;
  });
  return rows;
}

}  // namespace gcryst
