#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "yosp/series/factored_series.hpp"
#include "yosp/series/truncated_series.hpp"
#include "yosp/superlinalg/sparse_matrix.hpp"

using namespace yosp;

namespace {

const Polynomial u = Polynomial::variable();

ScalarSeries ser(std::vector<Rational> c) { return ScalarSeries(std::move(c)); }

FactoredSeries random_factored(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> r(-3, 3), k(0, 3);
  std::vector<Rational> params;
  const int n = k(rng);
  for (int i = 0; i < n; ++i) params.push_back(r(rng));
  Polynomial num(1), den(1);
  const int t = k(rng) % 2;
  for (int i = 0; i < t; ++i) {
    num = num * Polynomial::linear_factor(r(rng));
    den = den * Polynomial::linear_factor(r(rng));
  }
  return FactoredSeries(RootMultiset::from_list(params), RationalFunction(num, den));
}

ScalarSeries random_series(std::mt19937_64& rng, int order) {
  std::uniform_int_distribution<int> c(-5, 5);
  std::vector<Rational> v(static_cast<std::size_t>(order + 1));
  for (auto& x : v) x = make_rational(c(rng), 1 + std::abs(c(rng)));
  v[0] = 1;
  return ScalarSeries(v);
}

}  // namespace

TEST(TruncatedSeries, ProductOfConjugates) {
  auto a = ser({1, 1, 0, 0});
  auto b = ser({1, -1, 0, 0});
  EXPECT_EQ(series_mul(a, b), ser({1, 0, -1, 0}));
}

TEST(TruncatedSeries, GeometricInverse) {
  auto inv = series_inverse(ser({1, -1, 0, 0, 0, 0}));
  EXPECT_EQ(inv, ser({1, 1, 1, 1, 1, 1}));
}

TEST(TruncatedSeries, SingularInverse) { EXPECT_THROW(series_inverse(ser({0, 1, 2})), SingularSeries); }

TEST(TruncatedSeries, ResultCarriesMinOrder) {
  auto a = ser({1, 2, 3, 4});
  auto b = ser({1, 1});
  EXPECT_EQ(series_add(a, b).order(), 1);
  EXPECT_EQ(series_mul(a, b).order(), 1);
}

TEST(TruncatedSeries, InverseProperty) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    auto a = random_series(rng, 8);
    EXPECT_EQ(a * a.inverse(), ScalarSeries::one(Rational(1), 8));
  }
}

TEST(ShiftArgument, ZeroShiftIsIdentity) {
  auto s = ser({1, 1, 0, 0});
  EXPECT_EQ(shift_argument(s, 0), s);
}

TEST(ShiftArgument, ExpandsReciprocal) { EXPECT_EQ(shift_argument(ser({0, 1, 0, 0}), 1), ser({0, 1, -1, 1})); }

TEST(ShiftArgument, InverseShiftsCancel) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) {
    auto s = random_series(rng, 8);
    EXPECT_EQ(shift_argument(shift_argument(s, 1), -1), s);
  }
}

TEST(ShiftArgument, RingHomomorphismAndAdditive) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 20; ++t) {
    auto a = random_series(rng, 8), b = random_series(rng, 8);
    const Rational c = make_rational(static_cast<long>(t) - 7, 3), d = make_rational(2, 5);
    EXPECT_EQ(shift_argument(a * b, c), shift_argument(a, c) * shift_argument(b, c));
    EXPECT_EQ(shift_argument(a + b, c), shift_argument(a, c) + shift_argument(b, c));
    EXPECT_EQ(shift_argument(shift_argument(a, c), d), shift_argument(a, c + d));
  }
}

TEST(ShiftArgument, AgreesWithRationalShift) {
  RationalFunction f(Polynomial::linear_factor(2) * Polynomial::linear_factor(-1), Polynomial::linear_factor(3) * u);
  EXPECT_EQ(shift_argument(rf_to_series(f, 8), make_rational(1, 2)), rf_to_series(f.shifted(make_rational(1, 2)), 8));
}

TEST(TruncatedSeries, OperatorCoefficients) {
  using OpSeries = TruncatedSeries<SparseMatrix>;
  const SparseMatrix e12 = SparseMatrix::unit(2, 0, 1), e21 = SparseMatrix::unit(2, 1, 0), id = SparseMatrix::identity(2);
  OpSeries a({id, e12, SparseMatrix(2, 2)});
  OpSeries b({id, e21, SparseMatrix(2, 2)});
  auto prod = a * b;
  EXPECT_EQ(prod[1], e12 + e21);
  EXPECT_EQ(prod[2], e12 * e21);
  EXPECT_EQ(a * a.inverse(), OpSeries::one(id, 2));
}

TEST(FactoredToSeries, LinearFactor) {
  auto s = factored_to_series(FactoredSeries::linear(-1), 2);
  EXPECT_EQ(s, ser({1, -1, 0}));
}

TEST(FactoredToSeries, TailLongDivision) {
  auto f = FactoredSeries::from_rational(RationalFunction(u - Polynomial(1), u + Polynomial(1)));
  EXPECT_EQ(factored_to_series(f, 2), ser({1, -2, 2}));
}

TEST(FactoredToSeries, EmptyIsOne) { EXPECT_EQ(factored_to_series(FactoredSeries(), 3), ser({1, 0, 0, 0})); }

TEST(FactoredToSeries, PoleAtInfinity) { EXPECT_THROW(rf_to_series(RationalFunction(u), 3), InvalidInput); }

TEST(FactoredSeries, TailMustBeOneAtInfinity) {
  EXPECT_THROW(FactoredSeries(RootMultiset{}, RationalFunction(Polynomial(2))), InvalidInput);
}

TEST(FactoredSeries, MultiplyCombinesRoots) {
  auto a = FactoredSeries::linear(-1);
  auto p = factored_mul(a, a);
  EXPECT_EQ(p.roots(), (RootMultiset{{-1, 2}}));
}

TEST(FactoredSeries, DivideCancels) {
  auto a = FactoredSeries::linear(-1);
  auto q = factored_div(a, a);
  EXPECT_TRUE(q.roots().empty());
  EXPECT_TRUE(q.tail().is_one());
}

TEST(FactoredSeries, DivideByTail) {
  auto a = FactoredSeries::linear(-2);
  auto b = FactoredSeries::from_rational(RationalFunction(u - Polynomial(1), u));
  auto q = factored_div(a, b);
  EXPECT_EQ(q.roots(), (RootMultiset{{-2, 1}}));
  EXPECT_EQ(q.tail(), RationalFunction(u, u - Polynomial(1)));
  EXPECT_EQ(q.to_series(4), a.to_series(4) * b.to_series(4).inverse());
}

TEST(FactoredSeries, ExpansionIsHomomorphism) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 100; ++t) {
    auto a = random_factored(rng), b = random_factored(rng);
    EXPECT_EQ((a * b).to_series(8), a.to_series(8) * b.to_series(8));
    EXPECT_EQ((a / b).to_series(8), a.to_series(8) * b.to_series(8).inverse());
  }
}

TEST(FactoredSeries, ShiftMatchesSeriesShift) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 50; ++t) {
    auto a = random_factored(rng);
    EXPECT_EQ(a.shifted(1).to_series(8), shift_argument(a.to_series(8), 1));
    EXPECT_EQ(a.shifted(-2).to_series(8), shift_argument(a.to_series(8), -2));
  }
}

TEST(FactoredSeries, PolynomialParameters) {
  auto a = FactoredSeries::from_parameters({1, 3});
  auto params = a.polynomial_parameters();
  ASSERT_TRUE(params);
  EXPECT_EQ(params->size(), 2u);
  auto b = FactoredSeries::from_rational(RationalFunction(u, u - Polynomial(1)));
  EXPECT_FALSE(b.polynomial_parameters());
}
