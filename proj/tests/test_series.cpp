#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "burnside/numtheory.hpp"
#include "burnside/quadratic.hpp"
#include "burnside/rational.hpp"
#include "burnside/series.hpp"

using namespace burnside;

static RationalSeries one_plus_t(long truncation) {
  RationalSeries s = RationalSeries::constant(1, truncation);
  s.set_coeff(1, 1);
  return s;
}

TEST_CASE("constant, monomial, coefficient access") {
  RationalSeries z(5);
  CHECK(z.truncation() == 5);
  CHECK(z.degree() == -1);
  for (long d = 0; d <= 5; ++d) CHECK(z.coeff(d) == 0);
  CHECK_THROWS_AS(z.coeff(6), std::out_of_range);

  RationalSeries m = RationalSeries::monomial(Rational(3, 2), 4, 6);
  CHECK(m.degree() == 4);
  CHECK(m.coeff(4) == Rational(3, 2));
  CHECK(m.coeff(3) == 0);

  // degrees beyond the truncation are dropped, not stored
  RationalSeries s(3);
  s.set_coeff(7, 1);
  CHECK(s.degree() == -1);
}

TEST_CASE("binomial expansion") {
  RationalSeries p = one_plus_t(6).pow(6);
  std::vector<long> expected{1, 6, 15, 20, 15, 6, 1};
  for (long d = 0; d <= 6; ++d) CHECK(p.coeff(d) == expected[static_cast<size_t>(d)]);
  CHECK(p.evaluate_at_one() == 64);

  // pow agrees with repeated multiplication
  RationalSeries q = RationalSeries::constant(1, 6);
  for (int i = 0; i < 6; ++i) q *= one_plus_t(6);
  CHECK(p == q);
}

TEST_CASE("arithmetic truncates to the smaller operand") {
  RationalSeries a = one_plus_t(8);
  RationalSeries b = one_plus_t(3);
  CHECK((a * b).truncation() == 3);
  CHECK((a + b).truncation() == 3);
  CHECK((a - b).truncation() == 3);
  CHECK(a.same_coefficients(b));
  CHECK_FALSE(a == b);  // exact equality includes the truncation
}

TEST_CASE("reciprocal of 1 - t is the all-ones series") {
  RationalSeries g = RationalSeries::constant(1, 10);
  g.set_coeff(1, -1);
  RationalSeries r = g.reciprocal();
  for (long d = 0; d <= 10; ++d) CHECK(r.coeff(d) == 1);
}

TEST_CASE("reciprocal of 1 - t - t^2 generates Fibonacci numbers") {
  RationalSeries g = RationalSeries::constant(1, 8);
  g.set_coeff(1, -1);
  g.set_coeff(2, -1);
  RationalSeries r = g.reciprocal();
  std::vector<long> fib{1, 1, 2, 3, 5, 8, 13, 21, 34};
  for (long d = 0; d <= 8; ++d) CHECK(r.coeff(d) == fib[static_cast<size_t>(d)]);
}

TEST_CASE("reciprocal is a two-sided inverse for random unit series") {
  long seed = 3;
  RationalSeries one = RationalSeries::constant(1, 8);
  for (int trial = 0; trial < 200; ++trial) {
    RationalSeries s(8);
    for (long d = 0; d <= 8; ++d) {
      seed = (seed * 1103515245L + 12345L) % 2147483648L;
      long num = seed % 9 - 4;
      seed = (seed * 1103515245L + 12345L) % 2147483648L;
      long den = seed % 3 + 1;
      s.set_coeff(d, Rational(num, den));
    }
    if (s.coeff(0) == 0) s.set_coeff(0, 1);
    RationalSeries r = s.reciprocal();
    CHECK(s * r == one);
    CHECK(r * s == one);
  }
}

TEST_CASE("reciprocal rejects a zero constant term") {
  RationalSeries s = RationalSeries::monomial(1, 1, 4);
  CHECK_THROWS_AS(s.reciprocal(), std::invalid_argument);
}

TEST_CASE("alternate_signs flips odd coefficients") {
  RationalSeries c = one_plus_t(3).pow(3);
  RationalSeries f = c.alternate_signs();
  CHECK(f.coeff(0) == 1);
  CHECK(f.coeff(1) == -3);
  CHECK(f.coeff(2) == 3);
  CHECK(f.coeff(3) == -1);
  CHECK(f.evaluate_at_one() == 0);
  CHECK(f.alternate_signs() == c);
}

TEST_CASE("to_string formats") {
  CHECK(RationalSeries(4).to_string() == "0");
  CHECK(RationalSeries::constant(5, 2).to_string() == "5");
  CHECK(RationalSeries::monomial(1, 1, 3).to_string() == "t");

  RationalSeries s(3);
  s.set_coeff(0, 1);
  s.set_coeff(1, 1);
  s.set_coeff(2, 2);
  s.set_coeff(3, Rational(-1, 2));
  CHECK(s.to_string() == "1 + t + 2t^2 - (1/2)t^3");

  RationalSeries neg(2);
  neg.set_coeff(0, -1);
  neg.set_coeff(2, Rational(3, 4));
  CHECK(neg.to_string() == "-1 + (3/4)t^2");

  CHECK(s.coeff_strings() == std::vector<std::string>{"1", "1", "2", "-1/2"});
}

TEST_CASE("cyclotomic-style factorization of the geometric series") {
  // 1/(1 - k t) = prod_{n >= 1} (1 - t^n)^(-M(k, n)), truncated at degree 12
  const long degree = 12;
  for (long k = 1; k <= 3; ++k) {
    RationalSeries lhs = RationalSeries::constant(1, degree);
    for (long d = 0; d <= degree; ++d)
      lhs.set_coeff(d, rational_pow(Rational(k), static_cast<unsigned long>(d)));

    RationalSeries rhs = RationalSeries::constant(1, degree);
    for (long n = 1; n <= degree; ++n) {
      Rational m = necklace_poly(Rational(k), n);
      REQUIRE(is_integer(m));
      RationalSeries factor = RationalSeries::constant(1, degree);
      factor.set_coeff(n, -1);
      unsigned long e = static_cast<unsigned long>(to_integer(m));
      rhs *= factor.pow(e).reciprocal();
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("quadratic values fold perfect squares") {
  CHECK(QuadraticValue::sqrt_of(9) == QuadraticValue(Rational(3)));
  CHECK(QuadraticValue::sqrt_of(0) == QuadraticValue(Rational(0)));
  CHECK(QuadraticValue::sqrt_of(1) == QuadraticValue(Rational(1)));
  QuadraticValue root8 = QuadraticValue::sqrt_of(8);
  CHECK(root8.radicand() == 8);  // radicand kept verbatim, not reduced
  CHECK((root8 * root8) == QuadraticValue(Rational(8)));
}

TEST_CASE("quadratic arithmetic is exact") {
  QuadraticValue root2 = QuadraticValue::sqrt_of(2);
  QuadraticValue a = QuadraticValue(Rational(1)) + root2;
  QuadraticValue b = QuadraticValue(Rational(1)) - root2;
  CHECK(a * b == QuadraticValue(Rational(-1)));
  CHECK(a + b == QuadraticValue(Rational(2)));

  QuadraticValue root3 = QuadraticValue::sqrt_of(3);
  QuadraticValue c = (QuadraticValue(Rational(1)) + root3).pow(3);
  CHECK(c == QuadraticValue(Rational(10), Rational(6), 3));

  CHECK(root2.is_rational() == false);
  CHECK(a.is_integer() == false);
  CHECK((a * b).to_integer() == -1);
  CHECK_THROWS_AS(a.to_integer(), std::logic_error);
  CHECK_THROWS_AS(root2 + root3, std::invalid_argument);
}

TEST_CASE("quadratic to_string") {
  CHECK(QuadraticValue(Rational(7)).to_string() == "7");
  CHECK(QuadraticValue::sqrt_of(2).to_string() == "1*sqrt(2)");
  CHECK((QuadraticValue(Rational(1, 2)) + QuadraticValue::sqrt_of(5)).to_string() ==
        "1/2 + 1*sqrt(5)");
}

TEST_CASE("necklace polynomial at quadratic arguments") {
  // M(sqrt(2), 2) = (2 - sqrt(2)) / 2
  QuadraticValue m = necklace_poly(QuadraticValue::sqrt_of(2), 2);
  CHECK(m == QuadraticValue(Rational(1), Rational(-1, 2), 2));
  // a perfect-square radicand collapses to the rational case
  CHECK(necklace_poly(QuadraticValue::sqrt_of(4), 3) == QuadraticValue(Rational(2)));
  CHECK(necklace_poly(QuadraticValue::sqrt_of(4), 6) == QuadraticValue(Rational(9)));
  // cross-check against the rational overload on a grid
  for (long k = 1; k <= 5; ++k)
    for (long n = 1; n <= 8; ++n)
      CHECK(necklace_poly(QuadraticValue(Rational(k)), n) ==
            QuadraticValue(necklace_poly(Rational(k), n)));
}
