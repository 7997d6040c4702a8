#include "burnside/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace burnside {

std::vector<long> divisors(long n) {
  if (n < 1) throw std::invalid_argument("divisors: n must be >= 1");
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int mobius(long n) {
  if (n < 1) throw std::invalid_argument("mobius: n must be >= 1");
  int sign = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;  // square factor
    sign = -sign;
  }
  if (n > 1) sign = -sign;  // leftover prime
  return sign;
}

Rational necklace_poly(const Rational& k, long n) {
  if (n < 1) throw std::invalid_argument("necklace_poly: n must be >= 1");
  Rational sum(0);
  for (long d : divisors(n)) sum += mobius(n / d) * rational_pow(k, static_cast<unsigned long>(d));
  return sum / n;
}

std::map<long, Rational> mobius_invert(const std::map<long, Rational>& accumulated) {
  std::map<long, Rational> out;
  for (const auto& [n, unused] : accumulated) {
    Rational sum(0);
    for (long d : divisors(n)) {
      auto it = accumulated.find(d);
      if (it == accumulated.end())
        throw std::invalid_argument("mobius_invert: missing divisor key " + std::to_string(d) +
                                    " required by key " + std::to_string(n));
      sum += mobius(n / d) * it->second;
    }
    out[n] = sum;
  }
  return out;
}

}  // namespace burnside
