#include <doctest.h>

#include <cmath>
#include <random>

#include "digitop/exact.hpp"

using namespace digitop;

TEST_CASE("parse_rational accepts integers and fractions") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-1/8") == Rational(-1, 8));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/2"), std::invalid_argument);
  CHECK(to_string(Rational(3, 2)) == "3/2");
  CHECK(to_string(Rational(-4)) == "-4");
}

TEST_CASE("square roots reduce to canonical surds") {
  CHECK(Real::sqrt_of(4) == Real(2));
  CHECK(Real::sqrt_of(8).to_string() == "2*sqrt(2)");
  CHECK(Real::sqrt_of(0).is_zero());
  CHECK(Real::sqrt_of(12) == Real(2) * Real::sqrt_of(3));
  CHECK(Real::sqrt_of(2) * Real::sqrt_of(2) == Real(2));
  CHECK(Real::sqrt_of(6) == Real::sqrt_of(2) * Real::sqrt_of(3));
  CHECK((Real::sqrt_of(2) - Real::sqrt_of(2)).is_zero());
  CHECK_FALSE(Real::sqrt_of(2).as_rational().has_value());
  CHECK(Real::sqrt_of(9).as_rational() == Rational(3));
}

TEST_CASE("signs of surd sums near zero are exact") {
  // sqrt(2) + sqrt(3) = 3.1463 vs sqrt(10) = 3.1623
  CHECK(Real::sqrt_of(2) + Real::sqrt_of(3) < Real::sqrt_of(10));
  // 99/70 is just above sqrt(2); 140/99 just below
  CHECK(Real(Rational(99, 70)) > Real::sqrt_of(2));
  CHECK(Real(Rational(140, 99)) < Real::sqrt_of(2));
  // sqrt(5) + sqrt(7) vs sqrt(3) + sqrt(11): 4.8818 vs 5.0487
  CHECK(Real::sqrt_of(5) + Real::sqrt_of(7) < Real::sqrt_of(3) + Real::sqrt_of(11));
  // sqrt(10001) - 100 is tiny and positive
  CHECK((Real::sqrt_of(10001) - Real(100)).sign() == 1);
  CHECK((Real(100) - Real::sqrt_of(10001)).sign() == -1);
}

TEST_CASE("to_string forms") {
  CHECK(Real(0).to_string() == "0");
  CHECK(Real(Rational(3, 2)).to_string() == "3/2");
  CHECK((Real(1) + Real(Rational(1, 2)) * Real::sqrt_of(3)).to_string() == "1 + sqrt(3)/2");
  CHECK(Real::approximate(1.5L).to_string().front() == '~');
}

TEST_CASE("approximate values compare with tolerance") {
  CHECK(Real::approximate(1.0L) == Real(1));
  CHECK(Real::approximate(1.0L + 1e-12L) == Real(1));
  CHECK(Real::approximate(1.1L) > Real(1));
  CHECK_FALSE(Real::approximate(1.0L).is_exact());
  CHECK((Real::approximate(2.0L) * Real::sqrt_of(2)).to_long_double() == doctest::Approx(2 * std::sqrt(2.0)));
}

TEST_CASE("ratio compares by cross multiplication") {
  Ratio half(Real(1), Real(2));
  Ratio inv_sqrt2(Real(1), Real::sqrt_of(2));
  CHECK(half < inv_sqrt2);
  CHECK(Ratio(Real::sqrt_of(2), Real(2)) == inv_sqrt2);
  CHECK(Ratio(Real(3), Real(3)) == Ratio(1));
  CHECK(Ratio(Rational(1, 2)) == half);
  CHECK_THROWS_AS(Ratio(Real(1), Real(0)), std::domain_error);
  CHECK(half.to_string() == "1/2");
}

namespace {

// Random sums of up to four surds with small coefficients and radicands.
Real random_surd_sum(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(1, 4), coef(-6, 6), den(1, 4), rad(1, 30);
  Real x(0);
  for (int i = terms(rng); i > 0; --i) x += Real(Rational(coef(rng), den(rng))) * Real::sqrt_of(rad(rng));
  return x;
}

}  // namespace

TEST_CASE("property: exact comparison agrees with long double away from ties") {
  std::mt19937_64 rng(20241016);
  int checked = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    Real a = random_surd_sum(rng);
    Real b = random_surd_sum(rng);
    long double da = a.to_long_double(), db = b.to_long_double();
    if (std::fabs(da - db) < 1e-9L) continue;
    ++checked;
    REQUIRE((compare(a, b) < 0) == (da < db));
  }
  CHECK(checked > 3000);
}

TEST_CASE("property: ring identities hold exactly") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    Real a = random_surd_sum(rng), b = random_surd_sum(rng), c = random_surd_sum(rng);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) * c == a * c + b * c);
    REQUIRE((a - a).is_zero());
    REQUIRE(-(-a) == a);
  }
}
