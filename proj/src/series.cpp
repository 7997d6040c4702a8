#include "burnside/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace burnside {

RationalSeries::RationalSeries(long truncation) {
  if (truncation < 0) throw std::invalid_argument("RationalSeries: negative truncation degree");
  coeffs_.assign(static_cast<size_t>(truncation) + 1, Rational(0));
}

RationalSeries RationalSeries::constant(const Rational& c, long truncation) {
  RationalSeries s(truncation);
  s.coeffs_[0] = c;
  return s;
}

RationalSeries RationalSeries::monomial(const Rational& c, long degree, long truncation) {
  RationalSeries s(truncation);
  if (degree < 0) throw std::invalid_argument("RationalSeries: negative degree");
  if (degree <= truncation) s.coeffs_[static_cast<size_t>(degree)] = c;
  return s;
}

const Rational& RationalSeries::coeff(long degree) const {
  if (degree < 0 || degree > truncation())
    throw std::out_of_range("RationalSeries: coefficient " + std::to_string(degree) +
                            " beyond truncation " + std::to_string(truncation()));
  return coeffs_[static_cast<size_t>(degree)];
}

void RationalSeries::set_coeff(long degree, const Rational& c) {
  if (degree < 0) throw std::invalid_argument("RationalSeries: negative degree");
  if (degree <= truncation()) coeffs_[static_cast<size_t>(degree)] = c;
}

long RationalSeries::degree() const {
  for (long d = truncation(); d >= 0; --d)
    if (coeffs_[static_cast<size_t>(d)] != 0) return d;
  return -1;
}

RationalSeries& RationalSeries::operator+=(const RationalSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

RationalSeries& RationalSeries::operator-=(const RationalSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
  RationalSeries r = a;
  return r += b;
}

RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) {
  RationalSeries r = a;
  return r -= b;
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
  long trunc = std::min(a.truncation(), b.truncation());
  RationalSeries r(trunc);
  for (long i = 0; i <= trunc; ++i) {
    if (a.coeffs_[static_cast<size_t>(i)] == 0) continue;
    for (long j = 0; i + j <= trunc; ++j) {
      if (b.coeffs_[static_cast<size_t>(j)] == 0) continue;
      r.coeffs_[static_cast<size_t>(i + j)] +=
          a.coeffs_[static_cast<size_t>(i)] * b.coeffs_[static_cast<size_t>(j)];
    }
  }
  return r;
}

RationalSeries& RationalSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

RationalSeries RationalSeries::pow(unsigned long e) const {
  RationalSeries acc = constant(Rational(1), truncation());
  RationalSeries b = *this;
  while (e) {
    if (e & 1) acc = acc * b;
    b = b * b;
    e >>= 1;
  }
  return acc;
}

RationalSeries RationalSeries::reciprocal() const {
  if (coeffs_[0] == 0)
    throw std::invalid_argument("RationalSeries::reciprocal: constant term is zero");
  RationalSeries r(truncation());
  Rational inv0 = Rational(1) / coeffs_[0];
  r.coeffs_[0] = inv0;
  // Standard recursion: coefficient n of the inverse kills the degree-n term
  // of (this * inverse).
  for (long n = 1; n <= truncation(); ++n) {
    Rational sum(0);
    for (long j = 0; j < n; ++j)
      sum += coeffs_[static_cast<size_t>(n - j)] * r.coeffs_[static_cast<size_t>(j)];
    r.coeffs_[static_cast<size_t>(n)] = -inv0 * sum;
  }
  return r;
}

RationalSeries RationalSeries::alternate_signs() const {
  RationalSeries r = *this;
  for (long d = 1; d <= truncation(); d += 2) r.coeffs_[static_cast<size_t>(d)] = -r.coeffs_[static_cast<size_t>(d)];
  return r;
}

Rational RationalSeries::evaluate_at_one() const {
  Rational sum(0);
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

bool RationalSeries::same_coefficients(const RationalSeries& o) const {
  size_t n = std::min(coeffs_.size(), o.coeffs_.size());
  return std::equal(coeffs_.begin(), coeffs_.begin() + static_cast<long>(n), o.coeffs_.begin());
}

std::string RationalSeries::to_string() const {
  std::string out;
  for (long d = 0; d <= truncation(); ++d) {
    const Rational& c = coeffs_[static_cast<size_t>(d)];
    if (c == 0) continue;
    Rational abs = c < 0 ? Rational(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mag = rational_string(abs);
    if (d == 0) {
      out += mag;
      continue;
    }
    if (abs != 1) out += is_integer(abs) ? mag : "(" + mag + ")";
    out += "t";
    if (d > 1) out += "^" + std::to_string(d);
  }
  return out.empty() ? "0" : out;
}

std::vector<std::string> RationalSeries::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(rational_string(c));
  return out;
}

}  // namespace burnside
