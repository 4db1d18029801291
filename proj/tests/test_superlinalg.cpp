#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "yosp/sampling.hpp"
#include "yosp/superlinalg/context.hpp"
#include "yosp/superlinalg/graded.hpp"
#include "yosp/superlinalg/r_matrix.hpp"
#include "yosp/superlinalg/super_matrix.hpp"

using namespace yosp;

TEST(AlgebraContext, StandardSequence) {
  auto ctx = AlgebraContext::standard(1, 1);
  EXPECT_EQ(ctx.sequence_string(), "10");
  EXPECT_EQ(ctx.dim(), 4u);
  EXPECT_EQ(ctx.kappa(), -1);
  EXPECT_EQ(ctx.prime(0), 3u);
  // parities 1,0,0,1 and theta = -1 only at 1'
  EXPECT_EQ(ctx.parities(), (Parities{1, 0, 0, 1}));
  EXPECT_EQ(ctx.theta(0), 1);
  EXPECT_EQ(ctx.theta(2), 1);
  EXPECT_EQ(ctx.theta(3), -1);
}

TEST(AlgebraContext, KappaForTwoOne) { EXPECT_EQ(AlgebraContext::standard(1, 2).kappa(), 0); }

TEST(AlgebraContext, RejectsBadInput) {
  EXPECT_THROW(AlgebraContext::from_parity("2"), InvalidInput);
  EXPECT_THROW(AlgebraContext::make(1, 1, "11"), InvalidInput);
  EXPECT_THROW(AlgebraContext::from_parity(""), InvalidInput);
}

TEST(AlgebraContext, Reduced) {
  auto ctx = AlgebraContext::from_parity("100");
  EXPECT_EQ(ctx.reduced().sequence_string(), "00");
  EXPECT_EQ(ctx.reduced().m(), 0);
}

TEST(PermutationOp, SquaresToIdentity) {
  for (auto s : {"10", "01", "110", "101", "1100"}) {
    auto ctx = AlgebraContext::from_parity(s);
    auto p = permutation_op(ctx).matrix();
    EXPECT_TRUE((p * p).is_identity()) << s;
  }
}

TEST(PermutationOp, SignOnBasisVectors) {
  auto ctx = AlgebraContext::standard(1, 1);
  auto p = permutation_op(ctx).matrix();
  const std::size_t n = ctx.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vector x = kron(basis_vector(n, a), basis_vector(n, b));
      Vector expected = kron(basis_vector(n, b), basis_vector(n, a));
      const int s = koszul_sign(ctx.parity(a) * ctx.parity(b));
      for (auto& v : expected) v *= s;
      EXPECT_EQ(p * x, expected) << a << "," << b;
    }
  // e1 (x) e2 with s = 10: |e1| = 1, |e2| = 0, no sign
  EXPECT_EQ(p * kron(basis_vector(n, 0), basis_vector(n, 1)), kron(basis_vector(n, 1), basis_vector(n, 0)));
}

TEST(PermutationOp, ConjugationIsGradedSwap) {
  auto ctx = AlgebraContext::from_parity("10");
  const auto par = ctx.parities();
  const std::size_t n = ctx.dim();
  auto p = permutation_op(ctx).matrix();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const auto a = SparseMatrix::unit(n, i, j), b = SparseMatrix::unit(n, k, l);
          const unsigned pa = (par[i] + par[j]) & 1u, pb = (par[k] + par[l]) & 1u;
          auto lhs = p * graded_kron(a, par, b, par) * p;
          auto rhs = graded_kron(b, par, a, par) * Rational(koszul_sign(pa * pb));
          EXPECT_EQ(lhs, rhs);
        }
}

TEST(QOp, SquareIsSuperdimensionTimesQ) {
  for (auto s : {"10", "01", "110", "011", "100"}) {
    auto ctx = AlgebraContext::from_parity(s);
    auto q = q_op(ctx).matrix();
    EXPECT_EQ(q * q, q * Rational(2 * (ctx.n() - ctx.m()))) << s;
  }
}

TEST(RMatrix, PlugIn) {
  auto ctx = AlgebraContext::standard(1, 1);
  auto r = r_matrix(ctx, 1).matrix();
  auto expected = SparseMatrix::identity(16) - permutation_op(ctx).matrix() + q_op(ctx).matrix() * make_rational(1, 2);
  EXPECT_EQ(r, expected);
}

TEST(RMatrix, KappaZeroCase) {
  auto ctx = AlgebraContext::standard(1, 2);  // (n, m) = (2, 1)
  EXPECT_EQ(ctx.kappa(), 0);
  const Rational u0 = 3;
  auto r = r_matrix(ctx, u0).matrix();
  auto expected = SparseMatrix::identity(36) + (q_op(ctx).matrix() - permutation_op(ctx).matrix()) * Rational(1 / u0);
  EXPECT_EQ(r, expected);
}

TEST(RMatrix, Poles) {
  auto ctx = AlgebraContext::standard(1, 1);
  EXPECT_THROW(r_matrix(ctx, 0), PoleError);
  EXPECT_THROW(r_matrix(ctx, -1), PoleError);
}

TEST(RMatrix, SymbolicEntriesVanishAtInfinityAfterIdentity) {
  for (auto s : {"10", "110", "100"}) {
    auto ctx = AlgebraContext::from_parity(s);
    auto sym = r_matrix_symbolic(ctx);
    for (const auto& [rc, f] : sym.entries) {
      RationalFunction g = rc.first == rc.second ? f - RationalFunction(1) : f;
      if (!g.is_zero()) {
        EXPECT_LT(g.numer().degree(), g.denom().degree());
      }
    }
    for (Rational x : {Rational(5), make_rational(-7, 3)}) EXPECT_EQ(sym.evaluate(x), r_matrix(ctx, x).matrix());
  }
}

TEST(SuperTranspose, IdentityFixed) {
  auto ctx = AlgebraContext::standard(1, 1);
  Grid<Rational> id(4, Rational(0));
  for (std::size_t i = 0; i < 4; ++i) id(i, i) = 1;
  EXPECT_EQ(super_transpose(ctx, id), id);
}

TEST(SuperTranspose, MatrixUnitSign) {
  auto ctx = AlgebraContext::standard(1, 1);
  Grid<Rational> e11(4, Rational(0));
  e11(0, 0) = 1;
  auto t = super_transpose(ctx, e11);
  // (e11)^t = e_{1'1'} (-1)^{|1||1| + |1|} theta_{1'}^2 = e_{1'1'}
  Grid<Rational> expected(4, Rational(0));
  expected(3, 3) = koszul_sign(ctx.parity(3) * ctx.parity(3) + ctx.parity(3));
  EXPECT_EQ(t, expected);
}

TEST(SuperTranspose, InvolutiveOnAllSmallContexts) {
  std::mt19937_64 rng(17);
  std::bernoulli_distribution bit(0.5);
  for (int rank = 1; rank <= 4; ++rank)
    for (unsigned mask = 0; mask < (1u << rank); ++mask) {
      std::string s;
      for (int k = 0; k < rank; ++k) s.push_back((mask >> k) & 1u ? '1' : '0');
      auto ctx = AlgebraContext::from_parity(s);
      const std::size_t n = ctx.dim();
      for (int t = 0; t < 5; ++t) {
        Grid<Rational> a(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) a(i, j) = bit(rng) ? 1 : 0;
        EXPECT_EQ(super_transpose(ctx, super_transpose(ctx, a)), a) << s;
      }
    }
}

TEST(YangBaxter, SinglePoint) {
  auto ctx = AlgebraContext::standard(1, 1);
  auto report = check_yang_baxter(ctx, {{5, 2}});
  EXPECT_TRUE(report.passed()) << report.checks.at(0).detail;
}

TEST(YangBaxter, RandomPointsSmallContexts) {
  for (auto [m, n] : {std::pair{2, 1}, std::pair{1, 2}}) {
    auto ctx = AlgebraContext::standard(m, n);
    auto report = check_yang_baxter(ctx, sampling::sample_pairs(ctx, 10, 2024));
    EXPECT_TRUE(report.passed()) << ctx.name();
    EXPECT_EQ(report.checks.size(), 10u);
  }
}

TEST(YangBaxter, NonStandardParity) {
  auto ctx = AlgebraContext::from_parity("01");
  EXPECT_TRUE(check_yang_baxter(ctx, {{make_rational(7, 2), make_rational(-1, 3)}}).passed());
}

TEST(YangBaxter, DegenerateSampleIsSkipped) {
  auto ctx = AlgebraContext::standard(1, 1);
  auto report = check_yang_baxter(ctx, {{3, 3}});
  EXPECT_TRUE(report.checks.empty());
  ASSERT_EQ(report.notes.size(), 1u);
}
