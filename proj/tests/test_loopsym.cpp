#include <gtest/gtest.h>

#include "gcryst/crystal_basic.hpp"
#include "gcryst/grsk.hpp"
#include "gcryst/loopsym.hpp"
#include "test_util.hpp"

namespace gcryst {
namespace {

using testutil::random_grid;

LoopPoly x_(int a, int b) { return LoopPoly::variable(a, b); }

TEST(LoopE, TwoRowCase) {
  // m=2: E_1^{(i)} = a_i + b_{i-1}, E_2^{(i)} = a_i b_i  (a_i = x_1^i, b_i = x_2^i).
  const int n = 3;
  for (int i = 1; i <= n; ++i) {
    int bm1 = ((i - 1 - 1) % n + n) % n + 1;
    EXPECT_EQ(loop_e(2, n, 1, i), x_(1, i) + x_(2, bm1));
    EXPECT_EQ(loop_e(2, n, 2, i), x_(1, i) * x_(2, i));
  }
  EXPECT_EQ(loop_e(2, 4, 3, 1), LoopPoly::zero());  // k > m
  EXPECT_EQ(loop_e(2, 4, 0, 1), LoopPoly::one());
  EXPECT_EQ(loop_e(2, 4, -1, 1), LoopPoly::zero());
}

// The whirl product over the polynomial ring has exactly the loop
// elementary symmetric functions as entries: M(x)_{ij} = E^{(i)}_{m+j-i}.
TEST(LoopE, MOfEntriesArePTypeLoopE) {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 4; ++n) {
      Mat<LoopPoly> M = m_of(symbolic_grid(m, n));
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) EXPECT_EQ(M.at(i, j), loop_e(m, n, m + j - i, i));
    }
}

TEST(LoopH, BasicsAndKappaDisplay) {
  EXPECT_EQ(loop_h(2, 3, 0, 1), LoopPoly::one());
  EXPECT_EQ(loop_h(2, 3, -2, 1), LoopPoly::zero());

  // m=2, n=5: H_4^{(2)} = kappa_3 = a2 a1 a5 a4 + a2 a1 a5 b3 + a2 a1 b4 b3
  //                               + a2 b5 b4 b3 + b1 b5 b4 b3.
  auto a = [](int i) { return x_(1, i); };
  auto b = [](int i) { return x_(2, i); };
  LoopPoly expect = a(2) * a(1) * a(5) * a(4) + a(2) * a(1) * a(5) * b(3) +
                    a(2) * a(1) * b(4) * b(3) + a(2) * b(5) * b(4) * b(3) +
                    b(1) * b(5) * b(4) * b(3);
  EXPECT_EQ(loop_h(2, 5, 4, 2), expect);
}

// kappa_r of the geometric R-matrix is H_{n-1}^{(r-1)} evaluated at the rows.
TEST(LoopH, KappaEvaluations) {
  Rng rng(100);
  for (int trial = 0; trial < 10; ++trial) {
    Grid<Rat> g = random_grid(rng, 2, 3);
    for (int r = 1; r <= 3; ++r)
      EXPECT_EQ(loop_h(2, 3, 2, r - 1).eval(g), kappa_r(g.row(1), g.row(2), r));
  }
}

TEST(LoopSchur, ExampleSchurTableauxSum) {
  // s_{(4,2)}^{(1)}(x_1, x_2) with n = 4: three tableaux.
  LoopPoly term1 = x_(1, 1) * x_(1, 2) * x_(1, 3) * x_(1, 4) * x_(2, 4) * x_(2, 1);
  LoopPoly term2 = x_(1, 1) * x_(1, 3) * x_(1, 4) * x_(2, 4) * x_(2, 1) * x_(2, 1);
  LoopPoly term3 = x_(1, 1) * x_(1, 4) * x_(2, 4) * x_(2, 1) * x_(2, 1) * x_(2, 2);
  LoopPoly expect = term1 + term2 + term3;
  EXPECT_EQ(loop_schur_tableaux(2, 4, {4, 2}, {}, 1), expect);
  // "The reader may verify": the Jacobi-Trudi determinant agrees.
  EXPECT_EQ(loop_schur_jt(2, 4, {4, 2}, {}, 1), expect);
}

TEST(LoopSchur, ColumnsAreE) {
  for (int k = 1; k <= 3; ++k)
    for (int r = 1; r <= 3; ++r) {
      Partition col(k, 1);
      EXPECT_EQ(loop_schur_tableaux(3, 3, col, {}, r), loop_e(3, 3, k, r));
      EXPECT_EQ(loop_schur_jt(3, 3, col, {}, r), loop_e(3, 3, k, r));
    }
  EXPECT_EQ(loop_schur_tableaux(2, 3, {1}, {}, 2), loop_e(2, 3, 1, 2));
}

TEST(LoopSchur, RowsAreH) {
  for (int k = 1; k <= 4; ++k)
    for (int r = 1; r <= 3; ++r)
      EXPECT_EQ(loop_schur_tableaux(2, 3, {k}, {}, r), loop_h(2, 3, k, r));
}

TEST(LoopSchur, EmptyShape) {
  EXPECT_EQ(loop_schur_jt(2, 3, {}, {}, 1), LoopPoly::one());
  EXPECT_EQ(loop_schur_tableaux(2, 3, {}, {}, 1), LoopPoly::one());
  EXPECT_EQ(loop_schur_jt(2, 3, {2, 1}, {2, 1}, 1), LoopPoly::one());
}

// Tableaux route vs Jacobi-Trudi route on a spread of skew shapes
// (the acceptance suite runs the exhaustive version).
TEST(LoopSchur, TableauxEqualsJacobiTrudi) {
  std::vector<Partition> shapes = {{1}, {2}, {2, 1}, {3, 1}, {2, 2}, {3, 2, 1}, {4, 4}};
  for (int m = 2; m <= 3; ++m)
    for (int n = 2; n <= 4; ++n)
      for (const auto& lambda : shapes)
        for (int r = 1; r <= n; ++r) {
          EXPECT_EQ(loop_schur_tableaux(m, n, lambda, {}, r),
                    loop_schur_jt(m, n, lambda, {}, r));
          // One nontrivial skew cut per shape.
          Partition mu;
          if (lambda.size() >= 2 && lambda[1] >= 1) mu = {1};
          if (!mu.empty()) {
            EXPECT_EQ(loop_schur_tableaux(m, n, lambda, mu, r),
                      loop_schur_jt(m, n, lambda, mu, r));
          }
        }
}

TEST(ShapeInvariant, WorkedAndStructural) {
  // m=3, n=2: S_2 = x_1^2 x_2^2 + x_1^2 x_3^1 + x_2^1 x_3^1.
  LoopPoly expect = x_(1, 2) * x_(2, 2) + x_(1, 2) * x_(3, 1) + x_(2, 1) * x_(3, 1);
  EXPECT_EQ(shape_invariant(3, 2, 2), expect);

  // S_1 = det M(x) = product of all variables.
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      LoopPoly prod = LoopPoly::one();
      for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= n; ++b) prod = prod * x_(a, b);
      EXPECT_EQ(shape_invariant(m, n, 1), prod);
    }

  // Minor route = explicit Jacobi-Trudi route = rectangular loop Schur.
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int k = 1; k <= std::min(m, n); ++k) {
        LoopPoly s = shape_invariant(m, n, k);
        EXPECT_EQ(s, shape_invariant_jt(m, n, k));
        EXPECT_EQ(s, box_poly(m, n, k, n));
      }
}

// Eq. "P loop formula": z_{i,j} = box(i,j)/box(i+1,j) at random points.
TEST(BoxPoly, PPatternRatios) {
  Rng rng(101);
  for (int m = 2; m <= 4; ++m)
    for (int n = 2; n <= 4; ++n)
      for (int trial = 0; trial < 5; ++trial) {
        Grid<Rat> x = random_grid(rng, m, n);
        PQPair<Rat> pq = grsk_insert(x);
        for (int i = 1; i <= pq.P.p(); ++i)
          for (int j = i; j <= n; ++j) {
            Rat num = box_poly(m, n, i, j).eval(x);
            Rat den = box_poly(m, n, i + 1, j).eval(x);
            EXPECT_EQ(pq.P.at(i, j), num / den);
          }
      }
}

// Evaluating any loop Schur polynomial is R-invariant.
TEST(LoopSchur, RInvarianceOfEvaluations) {
  Rng rng(102);
  std::vector<Partition> shapes = {{2, 1}, {3, 2}, {2, 2, 1}};
  for (int trial = 0; trial < 10; ++trial) {
    Grid<Rat> x = random_grid(rng, 3, 3);
    for (const auto& lambda : shapes)
      for (int r = 1; r <= 3; ++r) {
        LoopPoly s = loop_schur_jt(3, 3, lambda, {}, r);
        Rat val = s.eval(x);
        for (int i = 1; i <= 2; ++i) EXPECT_EQ(s.eval(r_matrix_rows(x, i)), val);
      }
  }
}

TEST(Dominance, WorkedExample) {
  ExpMatrix p = {{3, 2}, {1, 2}, {0, 1}};
  EXPECT_TRUE(dominant(p));
  EMonomial ep = e_p(p);
  EMonomial expect;
  expect.factors = {{1, 1}, {1, 1}, {2, 1}, {2, 2}, {3, 2}};
  EXPECT_EQ(ep, expect);

  ExpMatrix zero = {{0, 0}, {0, 0}};
  EXPECT_TRUE(dominant(zero));
  EXPECT_TRUE(e_p(zero).factors.empty());
  EXPECT_EQ(expand_e_monomial(2, 2, e_p(zero)), LoopPoly::one());

  ExpMatrix bad = {{0, 1}, {1, 0}};
  EXPECT_FALSE(dominant(bad));
  EXPECT_THROW(e_p(bad), NotDominant);
}

// The lex-leading monomial of E_p is x^p with coefficient 1.
TEST(LeadingTerm, RandomDominantMatrices) {
  Rng rng(103);
  int done = 0;
  std::vector<Mono> leading_seen;
  while (done < 200) {
    int m = static_cast<int>(rng.uniform(1, 3)), n = static_cast<int>(rng.uniform(1, 3));
    ExpMatrix p(m, std::vector<int>(n, 0));
    for (int b = 0; b < n; ++b) {
      int top = static_cast<int>(rng.uniform(0, 3));
      for (int a = 0; a < m; ++a) {
        p[a][b] = top;
        top = static_cast<int>(rng.uniform(0, top));  // weakly decreasing columns
      }
    }
    ASSERT_TRUE(dominant(p));
    LoopPoly ep = expand_e_monomial(m, n, e_p(p));
    Mono expect;
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < n; ++b)
        expect = expect * Mono::var(a + 1, b + 1, static_cast<std::uint32_t>(p[a][b]));
    EXPECT_EQ(ep.leading_monomial(), expect);
    EXPECT_EQ(ep.leading_coeff(), Rat(1));
    ++done;
  }
}

TEST(LsymReduce, RoundTripsAndCertificates) {
  // E_2^{(1)} E_1^{(2)} reduces to itself.
  const int m = 2, n = 3;
  EMonomial em;
  em.factors = {{1, 2}, {2, 1}};
  LoopPoly f = expand_e_monomial(m, n, em);
  ReduceResult res = lsym_reduce(m, n, f);
  ASSERT_TRUE(res.succeeded());
  ASSERT_EQ(res.representation.size(), 1u);
  EXPECT_EQ(res.representation[0].first, Rat(1));
  EXPECT_EQ(res.representation[0].second, em);

  // x_1^1 with m >= 2: one subtraction of E_1^{(1)} leaves a remainder
  // with no dominant monomial.
  ReduceResult bad = lsym_reduce(2, 3, LoopPoly::variable(1, 1));
  EXPECT_FALSE(bad.succeeded());
  EXPECT_FALSE(bad.remainder.is_zero());
  for (const auto& [mono, c] : bad.remainder.terms()) EXPECT_FALSE(dominant(mono, 2, 3));

  // kappa_2 = H_{n-1}^{(1)} for m=2, n=3 is in LSym.
  LoopPoly kappa2 = loop_h(2, 3, 2, 1);
  ReduceResult rk = lsym_reduce(2, 3, kappa2);
  ASSERT_TRUE(rk.succeeded());
  LoopPoly back = LoopPoly::zero();
  for (const auto& [c, mono] : rk.representation)
    back = back + c * expand_e_monomial(2, 3, mono);
  EXPECT_EQ(back, kappa2);
}

TEST(LsymReduce, RandomEProductsRoundTrip) {
  Rng rng(104);
  for (int trial = 0; trial < 60; ++trial) {
    int m = static_cast<int>(rng.uniform(2, 3)), n = static_cast<int>(rng.uniform(1, 3));
    // Random product of E's with total degree <= 8, possibly a sum of two.
    LoopPoly f = LoopPoly::one();
    int degree = 0;
    EMonomial em;
    while (true) {
      int k = static_cast<int>(rng.uniform(1, m));
      if (degree + k > 8) break;
      int r = static_cast<int>(rng.uniform(1, n));
      em.factors.push_back({k, r});
      degree += k;
      if (rng.uniform(0, 3) == 0) break;
    }
    std::sort(em.factors.begin(), em.factors.end());
    f = expand_e_monomial(m, n, em);
    ReduceResult res = lsym_reduce(m, n, f);
    ASSERT_TRUE(res.succeeded());
    LoopPoly back = LoopPoly::zero();
    for (const auto& [c, mono] : res.representation)
      back = back + c * expand_e_monomial(m, n, mono);
    EXPECT_EQ(back, f);

    // Termination witness: the dominant monomial targeted at each step
    // (the leading monomial of the subtracted E_p) strictly decreases.
    for (std::size_t s = 1; s < res.representation.size(); ++s) {
      Mono prev = expand_e_monomial(m, n, res.representation[s - 1].second).leading_monomial();
      Mono cur = expand_e_monomial(m, n, res.representation[s].second).leading_monomial();
      EXPECT_GT(Mono::cmp_lex(prev, cur), 0);
    }
  }
}

// Distinct dominant exponent matrices have distinct leading monomials.
TEST(LeadingTerm, InjectiveOverSample) {
  Rng rng(105);
  std::vector<std::pair<ExpMatrix, Mono>> seen;
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 2, n = 2;
    ExpMatrix p(m, std::vector<int>(n, 0));
    for (int b = 0; b < n; ++b) {
      int top = static_cast<int>(rng.uniform(0, 3));
      for (int a = 0; a < m; ++a) {
        p[a][b] = top;
        top = static_cast<int>(rng.uniform(0, top));
      }
    }
    Mono lead = expand_e_monomial(m, n, e_p(p)).leading_monomial();
    for (const auto& [q, ql] : seen)
      if (!(q == p)) {
        EXPECT_FALSE(ql == lead) << "leading term collision";
      }
    seen.push_back({p, lead});
  }
}

}  // namespace
}  // namespace gcryst
