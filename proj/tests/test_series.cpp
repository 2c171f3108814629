#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gkoszul/errors.hpp"
#include "gkoszul/series.hpp"

using namespace gkoszul;

TEST_CASE("construction and basics") {
  ZSeries z(6);
  CHECK(z.order() == 6);
  CHECK(z.is_zero());
  CHECK(z.first_nonzero() == -1);

  ZSeries one = ZSeries::one(4);
  CHECK(one.coeffs() == std::vector<int64_t>{1, 0, 0, 0, 0});
  CHECK(one.first_nonzero() == 0);

  ZSeries m = ZSeries::monomial(2, -3, 4);
  CHECK(m.coeffs() == std::vector<int64_t>{0, 0, -3, 0, 0});
  CHECK(m.first_nonzero() == 2);
  CHECK(m.str() == "(0, 0, -3, 0, 0)");
}

TEST_CASE("ring operations") {
  ZSeries a({1, 2, 3});
  ZSeries b({0, 1, 1});
  CHECK(a.add(b).coeffs() == std::vector<int64_t>{1, 3, 4});
  CHECK(a.sub(b).coeffs() == std::vector<int64_t>{1, 1, 2});
  CHECK(a.mul(b).coeffs() == std::vector<int64_t>{0, 1, 3});
  CHECK(a.scale(-2).coeffs() == std::vector<int64_t>{-2, -4, -6});
  CHECK(a.shift(1).coeffs() == std::vector<int64_t>{0, 1, 2});
  CHECK(a.truncate(5).coeffs() == std::vector<int64_t>{1, 2, 3, 0, 0, 0});
  CHECK(a.truncate(1).coeffs() == std::vector<int64_t>{1, 2});
}

TEST_CASE("binomial powers") {
  CHECK(binom_pow(2, 6).coeffs() == std::vector<int64_t>{1, 2, 1, 0, 0, 0, 0});
  CHECK(binom_pow(3, 3).coeffs() == std::vector<int64_t>{1, 3, 3, 1});
  CHECK(binom_pow(0, 2).coeffs() == std::vector<int64_t>{1, 0, 0});
}

TEST_CASE("division by unit-constant series") {
  // 1 / (1 - z) = all ones
  ZSeries one = ZSeries::one(6);
  ZSeries d({1, -1, 0, 0, 0, 0, 0});
  CHECK(one.div(d).coeffs() == std::vector<int64_t>{1, 1, 1, 1, 1, 1, 1});

  // 1 / (1 - 2z) = powers of two
  ZSeries d2({1, -2, 0, 0, 0, 0, 0});
  CHECK(one.div(d2).coeffs() == std::vector<int64_t>{1, 2, 4, 8, 16, 32, 64});

  // (1+z)^2 / (1 - z^2)^2 = 1/(1-z)^2 = 1, 2, 3, 4, ...
  ZSeries num = binom_pow(2, 6);
  ZSeries den({1, 0, -2, 0, 1, 0, 0});
  CHECK(num.div(den).coeffs() == std::vector<int64_t>{1, 2, 3, 4, 5, 6, 7});

  // constant -1 denominators work too
  ZSeries dneg({-1, 1, 0, 0, 0, 0, 0});
  CHECK(one.div(dneg).coeffs() == std::vector<int64_t>{-1, -1, -1, -1, -1, -1, -1});

  // division then multiplication round-trips
  ZSeries q = num.div(den);
  CHECK(q.mul(den) == num);

  CHECK_THROWS_AS(one.div(ZSeries({2, 1, 0})), NonUnitDenominator);
  CHECK_THROWS_AS(one.div(ZSeries({0, 1, 0})), NonUnitDenominator);
}

TEST_CASE("overflow is an error, not a wraparound") {
  int64_t big = int64_t(1) << 40;
  ZSeries a({big, big});
  CHECK_THROWS_AS(a.mul(a), Error);

  ZSeries m({INT64_MAX, 0});
  CHECK_THROWS_AS(m.add(ZSeries({1, 0})), Error);
  CHECK_THROWS_AS(m.scale(2), Error);
  CHECK_NOTHROW(m.scale(1));
}
