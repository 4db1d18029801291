#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "yosp/exact/polynomial.hpp"
#include "yosp/exact/rational.hpp"
#include "yosp/exact/rational_function.hpp"
#include "yosp/exact/roots.hpp"
#include "yosp/exact/shift_quotient.hpp"

using namespace yosp;

namespace {

const Polynomial u = Polynomial::variable();

Polynomial lin(long root) { return Polynomial::linear_factor(Rational(root)); }

}  // namespace

TEST(Rational, ParsesExactStrings) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-6/4"), make_rational(-3, 2));
}

TEST(Rational, RejectsFloatsAndGarbage) {
  EXPECT_THROW(parse_rational("0.5"), InvalidInput);
  EXPECT_THROW(parse_rational("1e3"), InvalidInput);
  EXPECT_THROW(parse_rational("1/0"), InvalidInput);
  EXPECT_THROW(parse_rational(""), InvalidInput);
}

TEST(Rational, ArrowScalar) {
  EXPECT_TRUE(arrow_scalar(3, 1));
  EXPECT_FALSE(arrow_scalar(1, 3));
  EXPECT_TRUE(arrow_scalar(make_rational(1, 2), make_rational(1, 2)));
  EXPECT_FALSE(arrow_scalar(make_rational(3, 2), 1));
}

TEST(RfReduce, CancelsCommonFactor) {
  auto f = rf_reduce(u * u - Polynomial(1), u * u - u);
  EXPECT_EQ(f.numer(), u + Polynomial(1));
  EXPECT_EQ(f.denom(), u);
}

TEST(RfReduce, IdentityCase) {
  auto f = rf_reduce(u, u);
  EXPECT_TRUE(f.is_one());
}

TEST(RfReduce, MonicNormalization) {
  auto f = rf_reduce(Polynomial({4, 2}), Polynomial(2));
  EXPECT_EQ(f.numer(), u + Polynomial(2));
  EXPECT_EQ(f.denom(), Polynomial(1));
}

TEST(RfReduce, ZeroDenominator) { EXPECT_THROW(rf_reduce(u, Polynomial(0)), InvalidInput); }

TEST(RfReduce, IdempotentAndPointwiseEqual) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> a(4), b(4);
    for (auto& x : a) x = coef(rng);
    for (auto& x : b) x = coef(rng);
    Polynomial n(a), d(b);
    if (d.is_zero()) continue;
    auto f = rf_reduce(n, d);
    EXPECT_EQ(rf_reduce(f.numer(), f.denom()), f);
    EXPECT_TRUE(f.denom().is_monic());
    for (int x = -6; x <= 6; ++x) {
      if (d(x) == 0) continue;
      EXPECT_EQ(f(x), n(x) / d(x));
    }
  }
}

TEST(RationalFunction, PoleEvaluationThrows) {
  RationalFunction f(Polynomial(1), u);
  EXPECT_THROW(f(0), PoleError);
}

TEST(RationalRoots, DistinctRoots) {
  auto [roots, rest] = rational_roots(u * u - Polynomial(1));
  EXPECT_EQ(roots, (RootMultiset{{1, 1}, {-1, 1}}));
  EXPECT_EQ(rest, Polynomial(1));
}

TEST(RationalRoots, IrrationalStayInRemainder) {
  auto [roots, rest] = rational_roots(u * u - Polynomial(2));
  EXPECT_TRUE(roots.empty());
  EXPECT_EQ(rest, u * u - Polynomial(2));
}

TEST(RationalRoots, RepeatedWithIrreducibleFactor) {
  Polynomial p = lin(-3) * lin(-3) * (u * u + Polynomial(1));
  auto [roots, rest] = rational_roots(p);
  EXPECT_EQ(roots, (RootMultiset{{-3, 2}}));
  EXPECT_EQ(rest, u * u + Polynomial(1));
}

TEST(RationalRoots, ReconstructionIsExact) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4), deg(0, 5);
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial p(make_rational(num(rng) == 0 ? 3 : 5, den(rng)));
    const int k = deg(rng);
    for (int i = 0; i < k; ++i) p = p * Polynomial::linear_factor(make_rational(num(rng), den(rng)));
    if (trial % 3 == 0) p = p * (u * u + Polynomial(3));
    auto [roots, rest] = rational_roots(p);
    EXPECT_EQ(rest * Polynomial::from_roots(roots.elements()), p);
    EXPECT_EQ(roots.size(), k);
  }
}

TEST(ShiftQuotient, SingleStep) {
  auto q = shift_quotient_witness(RationalFunction(u + Polynomial(1), u), 1);
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, u);
}

TEST(ShiftQuotient, TwoSteps) {
  auto q = shift_quotient_witness(RationalFunction(u + Polynomial(2), u), 1);
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, u * (u + Polynomial(1)));
}

TEST(ShiftQuotient, NoWitnessForInverseDirection) {
  EXPECT_FALSE(shift_quotient_witness(RationalFunction(u, u + Polynomial(1)), 1));
}

TEST(ShiftQuotient, StepTwo) {
  auto q = shift_quotient_witness(RationalFunction(u + Polynomial(2), u), 2);
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, u);
}

TEST(ShiftQuotient, ConstantOneHasEmptyWitness) {
  auto q = shift_quotient_witness(RationalFunction(1), 1);
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, Polynomial(1));
}

TEST(ShiftQuotient, DegreeMismatchAndLeadingRatio) {
  EXPECT_FALSE(shift_quotient_witness(RationalFunction(u, Polynomial(1)), 1));
  EXPECT_FALSE(shift_quotient_witness(RationalFunction(Polynomial(2)), 1));
}

TEST(ShiftQuotient, IrrationalRootsUnsupported) {
  RationalFunction f(u * u - Polynomial(2), u * u);
  EXPECT_THROW(shift_quotient_witness(f, 1), UnsupportedRoot);
}

TEST(ShiftQuotient, RationalCosets) {
  const Rational half = make_rational(1, 2);
  RationalFunction f(Polynomial::linear_factor(-half - Rational(3)), Polynomial::linear_factor(-half));
  auto q = shift_quotient_witness(f, 1);
  ASSERT_TRUE(q);
  EXPECT_TRUE(is_shift_quotient(f, *q, 1));
  EXPECT_EQ(q->degree(), 3);
}

TEST(ShiftQuotient, WitnessExpandsBackExactly) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> r(-5, 5), k(0, 4);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Rational> roots;
    const int n = k(rng);
    for (int i = 0; i < n; ++i) roots.push_back(r(rng));
    const Polynomial q = Polynomial::from_roots(roots);
    for (int step : {1, 2, 3}) {
      RationalFunction f(q.shifted(step), q);
      auto w = shift_quotient_witness(f, step);
      ASSERT_TRUE(w);
      EXPECT_TRUE(is_shift_quotient(f, *w, step));
    }
  }
}

// Exhaustive agreement with the brute-force oracle over every f whose zeros and
// poles form a multiset of at most four points in {-3..3}.
TEST(ShiftQuotient, AgreesWithBruteForceOracle) {
  for (int step : {1, 2}) {
    const oracle::ShiftQuotientOracle brute(step);
    const auto result = oracle::compare_shift_quotient_all(brute, step);
    EXPECT_EQ(result.mismatches, 0) << "step " << step << ": " << result.first_mismatch;
    EXPECT_GT(result.cases, 1000);
    EXPECT_GT(result.positives, 10);
  }
}
