#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace burnside {

// All ring arithmetic in this library is exact.  Marks and orbit counts are
// integers that can exceed 64 bits once coloring counts like k^|X| show up,
// and the inversion coefficients are genuine rationals, so everything runs
// on arbitrary-precision types.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised when a request exceeds one of the documented resource caps
// (group closure size, subgroup enumeration order, brute-force coloring
// space, ...).  Callers that want to retry with a smaller instance can
// catch this specifically.
class cap_exceeded : public std::runtime_error {
 public:
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline Integer to_integer(const Rational& r) {
  if (!is_integer(r)) throw std::logic_error("expected integral rational, got " + r.str());
  return numerator(r);
}

// "p/q", or just "p" when the denominator is 1.
inline std::string rational_string(const Rational& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational rational_pow(const Rational& base, unsigned long e) {
  Rational acc(1), b = base;
  while (e) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

inline Integer integer_pow(const Integer& base, unsigned long e) {
  Integer acc(1), b = base;
  while (e) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

}  // namespace burnside
