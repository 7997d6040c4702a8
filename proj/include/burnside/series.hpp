#pragma once

#include <string>
#include <vector>

#include "burnside/rational.hpp"

namespace burnside {

// Truncated power series / polynomial over Q in one variable t.
// Coefficients are stored for degrees 0..truncation and every operation is
// exact.  Arithmetic between two series truncates the result to the smaller
// truncation degree; it never silently extends one operand.
class RationalSeries {
 public:
  explicit RationalSeries(long truncation);  // zero series
  static RationalSeries constant(const Rational& c, long truncation);
  static RationalSeries monomial(const Rational& c, long degree, long truncation);

  long truncation() const { return static_cast<long>(coeffs_.size()) - 1; }
  const Rational& coeff(long degree) const;          // throws beyond truncation
  void set_coeff(long degree, const Rational& c);    // degrees beyond truncation are dropped

  // Largest degree with nonzero coefficient, or -1 for the zero series.
  long degree() const;

  RationalSeries& operator+=(const RationalSeries& o);
  RationalSeries& operator-=(const RationalSeries& o);
  friend RationalSeries operator+(const RationalSeries& a, const RationalSeries& b);
  friend RationalSeries operator-(const RationalSeries& a, const RationalSeries& b);
  friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
  RationalSeries& operator*=(const RationalSeries& o) { return *this = *this * o; }
  RationalSeries& operator*=(const Rational& c);
  friend RationalSeries operator*(RationalSeries a, const Rational& c) { return a *= c; }
  friend RationalSeries operator*(const Rational& c, RationalSeries a) { return a *= c; }

  RationalSeries pow(unsigned long e) const;
  // Multiplicative inverse as a truncated series; the constant term must be
  // nonzero or std::invalid_argument is thrown.
  RationalSeries reciprocal() const;
  // Substitute t -> -t.
  RationalSeries alternate_signs() const;

  Rational evaluate_at_one() const;

  // True when the two series agree coefficient-wise up to the smaller
  // truncation degree (the usual notion when comparing results computed at
  // different truncations).
  bool same_coefficients(const RationalSeries& o) const;
  friend bool operator==(const RationalSeries& a, const RationalSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Human form, ascending degrees: "1 + t + 2t^2 - (1/2)t^3".
  std::string to_string() const;
  // Coefficients 0..truncation rendered as "p/q" strings (JSON-friendly).
  std::vector<std::string> coeff_strings() const;

 private:
  std::vector<Rational> coeffs_;  // index = degree
};

}  // namespace burnside
