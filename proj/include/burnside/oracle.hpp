#pragma once

#include <map>
#include <vector>

#include "burnside/burnside_ring.hpp"
#include "burnside/gset.hpp"
#include "burnside/group.hpp"

namespace burnside {

// Brute-force cross-checks.  Everything here enumerates the full coloring
// space (k^|X| assignments) or builds explicit point sets, sidestepping the
// mark-table machinery entirely, so the two routes can be diffed.
//
// The enumeration kernel visits each assignment, finds the
// lexicographically least translate under the group, and only tallies
// assignments that are their own least translate (one representative per
// orbit, no orbit storage).  Each representative contributes to the cell
// (stabilizer class, number of points off the distinguished color 0).
// The work is embarrassingly parallel over the assignment range and the
// tallies are additive, so the OpenMP driver shards the range and merges
// per-thread tallies; omp=false forces the single-threaded reference loop.

struct OracleOptions {
  long long cap = 2000000;  // refuse when k^|X| exceeds this
  bool omp = true;
};

struct ColoringCensus {
  // tally[class][degree] = orbits with that exact stabilizer class whose
  // representative uses `degree` points off color 0.
  std::vector<std::vector<long long>> tally;

  long long class_total(int cls) const;
  std::map<long, long long> class_by_degree(int cls) const;  // zero entries omitted
};

// Requires the class table so stabilizers can be located; the mark and
// inversion tables are never consulted.
ColoringCensus coloring_census(const SubgroupClassTable& classes, const GSet& x, long colors,
                               const OracleOptions& options = {});

// Orbits with trivial stabilizer, by degree.
std::map<long, long long> primitive_census(const SubgroupClassTable& classes, const GSet& x,
                                           long colors, const OracleOptions& options = {});

// Decomposition of X into transitive pieces by direct orbit/stabilizer
// computation (no marks): coeffs[cls] = number of orbits whose point
// stabilizers land in cls.
BurnsideElement orbit_stabilizer_decompose(const SubgroupClassTable& classes, const GSet& x);

// The n-th symmetric power of X as an explicit G-set: points are the
// multisets of size n over the points of X (multiplicity vectors in
// lexicographic order).  Size is C(|X|+n-1, n), capped.
GSet multiset_power(const GSet& x, int n, long long cap = 2000000);

}  // namespace burnside
