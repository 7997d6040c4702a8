#pragma once

#include <map>
#include <vector>

#include "burnside/rational.hpp"

namespace burnside {

// Divisors of n in increasing order.  n >= 1.
std::vector<long> divisors(long n);

// Moebius function.  mobius(1) = 1, 0 on non-squarefree n.
int mobius(long n);

// Necklace polynomial M(k, n) = (1/n) * sum_{d | n} mobius(n/d) k^d,
// the number of aperiodic necklaces of length n over k beads (an integer
// whenever k is one, but defined for any rational k).
Rational necklace_poly(const Rational& k, long n);

// Given accumulated values b with b_n = sum_{d | n} a_d, recover a via
// a_n = sum_{d | n} mobius(n/d) b_d.  Every key's divisors must be present;
// a missing divisor key throws std::invalid_argument.
std::map<long, Rational> mobius_invert(const std::map<long, Rational>& accumulated);

}  // namespace burnside
