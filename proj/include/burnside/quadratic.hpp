#pragma once

#include <string>

#include "burnside/rational.hpp"

namespace burnside {

// Exact element of Q(sqrt(m)): rational + surd * sqrt(radicand).
// The closed-form counts for reflection-symmetric colorings involve sqrt(k)
// terms that must cancel exactly; tracking them symbolically lets us assert
// that the final answer is an integer instead of trusting floating point.
//
// A perfect-square radicand is folded into the rational part on
// construction, and a zero surd part resets the radicand to 1, so equality
// is plain field-wise comparison.  Mixing two different non-trivial
// radicands is not something the formulas here ever need and throws.
class QuadraticValue {
 public:
  QuadraticValue() = default;
  QuadraticValue(const Rational& rational);  // NOLINT: implicit by design
  QuadraticValue(const Rational& rational, const Rational& surd, long radicand);

  static QuadraticValue sqrt_of(long n);  // n >= 0

  const Rational& rational_part() const { return rat_; }
  const Rational& surd_part() const { return surd_; }
  long radicand() const { return rad_; }

  bool is_rational() const { return surd_ == 0; }
  bool is_integer() const { return is_rational() && burnside::is_integer(rat_); }
  Integer to_integer() const;  // throws std::logic_error unless integral

  QuadraticValue operator-() const;
  QuadraticValue& operator+=(const QuadraticValue& o);
  QuadraticValue& operator-=(const QuadraticValue& o);
  QuadraticValue& operator*=(const QuadraticValue& o);
  friend QuadraticValue operator+(QuadraticValue a, const QuadraticValue& b) { return a += b; }
  friend QuadraticValue operator-(QuadraticValue a, const QuadraticValue& b) { return a -= b; }
  friend QuadraticValue operator*(QuadraticValue a, const QuadraticValue& b) { return a *= b; }
  friend bool operator==(const QuadraticValue& a, const QuadraticValue& b) {
    return a.rat_ == b.rat_ && a.surd_ == b.surd_ && a.rad_ == b.rad_;
  }

  QuadraticValue pow(unsigned long e) const;
  std::string to_string() const;

 private:
  void normalize();
  long common_radicand(const QuadraticValue& o) const;

  Rational rat_{0};
  Rational surd_{0};
  long rad_ = 1;
};

// Necklace polynomial evaluated at a quadratic argument, e.g. M(sqrt(k), n).
QuadraticValue necklace_poly(const QuadraticValue& k, long n);

}  // namespace burnside
