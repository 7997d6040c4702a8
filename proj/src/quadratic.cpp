#include "burnside/quadratic.hpp"

#include <cmath>
#include <stdexcept>

#include "burnside/numtheory.hpp"

namespace burnside {

namespace {
// Largest s with s*s <= n.
long isqrt(long n) {
  long s = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (s > 0 && s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}
}  // namespace

QuadraticValue::QuadraticValue(const Rational& rational) : rat_(rational) {}

QuadraticValue::QuadraticValue(const Rational& rational, const Rational& surd, long radicand)
    : rat_(rational), surd_(surd), rad_(radicand) {
  if (radicand < 0) throw std::invalid_argument("QuadraticValue: negative radicand");
  normalize();
}

QuadraticValue QuadraticValue::sqrt_of(long n) {
  if (n < 0) throw std::invalid_argument("QuadraticValue::sqrt_of: negative argument");
  return QuadraticValue(Rational(0), Rational(1), n);
}

void QuadraticValue::normalize() {
  if (rad_ == 0) {  // sqrt(0) == 0
    surd_ = 0;
    rad_ = 1;
    return;
  }
  long s = isqrt(rad_);
  if (s * s == rad_) {
    rat_ += surd_ * s;
    surd_ = 0;
  }
  if (surd_ == 0) rad_ = 1;
}

long QuadraticValue::common_radicand(const QuadraticValue& o) const {
  if (surd_ == 0) return o.rad_;
  if (o.surd_ == 0) return rad_;
  if (rad_ != o.rad_)
    throw std::invalid_argument("QuadraticValue: mixing sqrt(" + std::to_string(rad_) +
                                ") with sqrt(" + std::to_string(o.rad_) + ")");
  return rad_;
}

Integer QuadraticValue::to_integer() const {
  if (!is_rational()) throw std::logic_error("QuadraticValue: surd part " + to_string() + " is not rational");
  return burnside::to_integer(rat_);
}

QuadraticValue QuadraticValue::operator-() const {
  QuadraticValue r = *this;
  r.rat_ = -r.rat_;
  r.surd_ = -r.surd_;
  return r;
}

QuadraticValue& QuadraticValue::operator+=(const QuadraticValue& o) {
  rad_ = common_radicand(o);
  rat_ += o.rat_;
  surd_ += o.surd_;
  normalize();
  return *this;
}

QuadraticValue& QuadraticValue::operator-=(const QuadraticValue& o) { return *this += -o; }

QuadraticValue& QuadraticValue::operator*=(const QuadraticValue& o) {
  long rad = common_radicand(o);
  Rational rat = rat_ * o.rat_ + surd_ * o.surd_ * rad;
  Rational surd = rat_ * o.surd_ + surd_ * o.rat_;
  rat_ = rat;
  surd_ = surd;
  rad_ = rad;
  normalize();
  return *this;
}

QuadraticValue QuadraticValue::pow(unsigned long e) const {
  QuadraticValue acc(Rational(1)), b = *this;
  while (e) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

std::string QuadraticValue::to_string() const {
  if (surd_ == 0) return rational_string(rat_);
  std::string s = rational_string(surd_) + "*sqrt(" + std::to_string(rad_) + ")";
  if (rat_ == 0) return s;
  return rational_string(rat_) + " + " + s;
}

QuadraticValue necklace_poly(const QuadraticValue& k, long n) {
  if (n < 1) throw std::invalid_argument("necklace_poly: n must be >= 1");
  QuadraticValue sum;
  for (long d : divisors(n)) sum += QuadraticValue(Rational(mobius(n / d))) * k.pow(static_cast<unsigned long>(d));
  return sum * QuadraticValue(Rational(1, n));
}

}  // namespace burnside
