#include <doctest.h>

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "burnside/numtheory.hpp"
#include "burnside/rational.hpp"

using namespace burnside;

TEST_CASE("divisors are sorted and complete") {
  CHECK(divisors(1) == std::vector<long>{1});
  CHECK(divisors(7) == std::vector<long>{1, 7});
  CHECK(divisors(12) == std::vector<long>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(36) == std::vector<long>{1, 2, 3, 4, 6, 9, 12, 18, 36});
  for (long n = 1; n <= 200; ++n) {
    auto ds = divisors(n);
    // every listed value divides n, the list is strictly increasing, and
    // nothing is missing
    long count = 0;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) ++count;
    CHECK(static_cast<long>(ds.size()) == count);
    for (size_t i = 0; i < ds.size(); ++i) {
      CHECK(n % ds[i] == 0);
      if (i > 0) CHECK(ds[i - 1] < ds[i]);
    }
  }
}

TEST_CASE("mobius values") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(2) == -1);
  CHECK(mobius(3) == -1);
  CHECK(mobius(4) == 0);
  CHECK(mobius(5) == -1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(8) == 0);
  CHECK(mobius(9) == 0);
  CHECK(mobius(10) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(30) == -1);
  CHECK(mobius(49) == 0);
  CHECK(mobius(210) == 1);  // 2*3*5*7
}

TEST_CASE("mobius sums to zero over divisors of n > 1") {
  for (long n = 2; n <= 300; ++n) {
    int sum = 0;
    for (long d : divisors(n)) sum += mobius(d);
    CHECK(sum == 0);
  }
}

TEST_CASE("mobius is multiplicative on coprime arguments") {
  for (long a = 1; a <= 40; ++a)
    for (long b = 1; b <= 40; ++b)
      if (std::gcd(a, b) == 1) CHECK(mobius(a * b) == mobius(a) * mobius(b));
}

TEST_CASE("necklace polynomial at known points") {
  CHECK(necklace_poly(Rational(2), 1) == 2);
  CHECK(necklace_poly(Rational(2), 2) == 1);
  CHECK(necklace_poly(Rational(2), 3) == 2);
  CHECK(necklace_poly(Rational(2), 6) == 9);
  CHECK(necklace_poly(Rational(4), 3) == 20);
  CHECK(necklace_poly(Rational(3), 4) == 18);
  for (long k = 1; k <= 6; ++k) CHECK(necklace_poly(Rational(k), 1) == k);
  // at k = 1 only the single-bead necklace is aperiodic
  CHECK(necklace_poly(Rational(1), 1) == 1);
  for (long n = 2; n <= 12; ++n) CHECK(necklace_poly(Rational(1), n) == 0);
  // rational arguments stay exact
  CHECK(necklace_poly(Rational(1, 2), 2) == Rational(-1, 8));
}

// Independent route: count length-n strings over k letters with no proper
// period, one aperiodic necklace per n of them.
static long long aperiodic_strings(long k, long n) {
  long long space = 1;
  for (long i = 0; i < n; ++i) space *= k;
  long long count = 0;
  std::vector<int> s(static_cast<size_t>(n));
  for (long long code = 0; code < space; ++code) {
    long long c = code;
    for (long i = 0; i < n; ++i) {
      s[static_cast<size_t>(i)] = static_cast<int>(c % k);
      c /= k;
    }
    bool aperiodic = true;
    for (long p : divisors(n)) {
      if (p == n) continue;
      bool periodic = true;
      for (long i = 0; i < n && periodic; ++i)
        periodic = s[static_cast<size_t>(i)] == s[static_cast<size_t>((i + p) % n)];
      if (periodic) {
        aperiodic = false;
        break;
      }
    }
    if (aperiodic) ++count;
  }
  return count;
}

TEST_CASE("necklace polynomial counts aperiodic strings") {
  for (long n = 1; n <= 12; ++n)
    CHECK(necklace_poly(Rational(2), n) == Rational(aperiodic_strings(2, n), n));
  for (long n = 1; n <= 7; ++n)
    CHECK(necklace_poly(Rational(3), n) == Rational(aperiodic_strings(3, n), n));
}

TEST_CASE("strings partition by primitive period") {
  // sum over d | n of d * M(k, d) = k^n
  for (long k = 2; k <= 4; ++k)
    for (long n = 1; n <= 12; ++n) {
      Rational sum = 0;
      for (long d : divisors(n)) sum += Rational(d) * necklace_poly(Rational(k), d);
      CHECK(sum == rational_pow(Rational(k), static_cast<unsigned long>(n)));
    }
}

TEST_CASE("mobius_invert undoes divisor accumulation") {
  // deterministic pseudo-random values on the divisors of 60
  std::map<long, Rational> original;
  long seed = 7;
  for (long d : divisors(60)) {
    seed = (seed * 61 + 17) % 103;
    original[d] = Rational(seed - 51, 4);
  }
  std::map<long, Rational> accumulated;
  for (long n : divisors(60)) {
    Rational sum = 0;
    for (long d : divisors(n)) sum += original[d];
    accumulated[n] = sum;
  }
  CHECK(mobius_invert(accumulated) == original);
}

TEST_CASE("mobius_invert requires every divisor key") {
  std::map<long, Rational> holes{{1, Rational(1)}, {4, Rational(2)}};  // missing 2
  CHECK_THROWS_AS(mobius_invert(holes), std::invalid_argument);
  std::map<long, Rational> empty;
  CHECK(mobius_invert(empty).empty());
}
