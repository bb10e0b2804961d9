#include <gtest/gtest.h>

#include <random>

#include "dyckpop/enumeration.hpp"
#include "dyckpop/series.hpp"

using namespace dyckpop;

namespace {

Series random_series(std::mt19937& rng, int trunc, int degree, bool unit) {
  std::uniform_int_distribution<int> coef(-5, 5), ydeg(0, 3);
  Series s(trunc);
  for (int n = 0; n <= std::min(degree, trunc); ++n) {
    std::vector<Rational> c(static_cast<std::size_t>(ydeg(rng) + 1));
    for (auto& v : c) v = Rational(coef(rng), 1 + std::abs(coef(rng)));
    s.set(n, Poly(std::move(c)));
  }
  if (unit) s.set(0, Poly(Rational(1)));
  return s;
}

}  // namespace

TEST(Poly, Arithmetic) {
  Poly a(std::vector<Rational>{1, 2});  // 1 + 2y
  Poly b(std::vector<Rational>{0, 1});  // y
  EXPECT_EQ(a * b, Poly(std::vector<Rational>{0, 1, 2}));
  EXPECT_EQ((a - a).degree(), -1);
  EXPECT_EQ(Poly(std::vector<Rational>{0, 0, 3}).valuation(), 2);
  EXPECT_THROW(a.div_monomial(1, 1), InexactDivision);
  EXPECT_EQ(a.evaluate(Rational(1, 2)), Rational(2));
  EXPECT_EQ(a.derivative(), Poly(Rational(2)));
}

TEST(Series, SqrtOfSquare) {
  const int N = 6;
  Series x = Series::x(N);
  auto s = sqrt_unit(1 + 2 * x + x * x);
  EXPECT_EQ(s, 1 + x);
}

TEST(Series, CatalanFromSqrt) {
  const int N = 10;
  Series x = Series::x(N + 1);
  Series c = div_exact_monomial(1 - sqrt_unit(1 - 4 * x), 1, 0) * Rational(1, 2);
  ASSERT_EQ(c.trunc(), N);
  for (int n = 0; n <= N; ++n) {
    std::size_t count = 0;
    for (const auto& p : enumerate_dyck(static_cast<std::size_t>(n))) {
      (void)p;
      ++count;
    }
    EXPECT_EQ(c.coeff(n, 0), Rational(static_cast<long>(count))) << n;
  }
}

TEST(Series, SqrtErrors) {
  Series x = Series::x(4);
  EXPECT_THROW(sqrt_unit(2 + x), NonSquareConstantTerm);
  EXPECT_THROW(sqrt_unit(x), NonSquareConstantTerm);
}

TEST(Series, DivisionErrors) {
  Series x = Series::x(4), y = Series::y(4);
  EXPECT_THROW(div_unit(1 + x, x), NonUnitDivisor);
  EXPECT_THROW(div_unit(1 + x, y + x), NonUnitDivisor);
  EXPECT_THROW(div_exact_monomial(1 + x, 1, 0), InexactDivision);
  EXPECT_THROW(div_exact_monomial(x + x * y, 1, 1), InexactDivision);
}

TEST(Series, DivExactWithYLead) {
  const int N = 6;
  Series x = Series::x(N), y = Series::y(N);
  Series b = y * y + x * (1 + y);
  Series a = Series::constant(3, N) + x * y;
  Series q = div_exact(a * b, b);
  EXPECT_EQ(q.truncated(N - 2), a.truncated(N - 2));
}

TEST(Series, DerivativeAndEvaluation) {
  const int N = 3;
  Series x = Series::x(N), y = Series::y(N);
  EXPECT_EQ(d_dy(x * y * y), 2 * x * y);
  EXPECT_EQ(eval_y(1 + x * y + x * y * y, 1), 1 + 2 * x);
  EXPECT_EQ(eval_y(1 + x * y, 0), Series::constant(1, N));
}

TEST(Series, Dump) {
  Series x = Series::x(2), y = Series::y(2);
  EXPECT_EQ(dump(Rational(1, 2) * x * y + 1), "0: 1\n1: 0 1/2\n2: 0\n");
}

TEST(Series, MixedTruncationTakesMinimum) {
  auto s = Series::x(3) + Series::x(5);
  EXPECT_EQ(s.trunc(), 3);
}

TEST(SeriesProperty, SqrtSquaresBack) {
  std::mt19937 rng(12345);
  for (int i = 0; i < 100; ++i) {
    Series a = random_series(rng, 10, 8, true);
    Series s = sqrt_unit(a);
    ASSERT_EQ(s * s, a) << dump(a);
    ASSERT_EQ(s.coeff(0, 0), Rational(1));
  }
}

TEST(SeriesProperty, DivUndoesMul) {
  std::mt19937 rng(777);
  for (int i = 0; i < 100; ++i) {
    Series a = random_series(rng, 9, 8, false);
    Series b = random_series(rng, 9, 8, true);
    ASSERT_EQ(div_unit(a * b, b), a);
  }
}
