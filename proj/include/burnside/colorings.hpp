#pragma once

#include <string>
#include <vector>

#include "burnside/burnside_ring.hpp"
#include "burnside/gset.hpp"
#include "burnside/quadratic.hpp"
#include "burnside/series.hpp"

namespace burnside {

// Which numbers of non-distinguished points a placement may use per orbit.
// ZeroOne is the classical coloring setup (each point either keeps the
// distinguished color or not), Full allows any multiplicity, Explicit is an
// arbitrary finite set of allowed multiplicities.
struct DegreeSet {
  enum class Kind { Full, ZeroOne, Explicit };
  Kind kind = Kind::ZeroOne;
  std::vector<long> values;  // Explicit only; sorted, distinct, >= 0

  static DegreeSet full() { return {Kind::Full, {}}; }
  static DegreeSet zero_one() { return {Kind::ZeroOne, {}}; }
  static DegreeSet explicit_set(std::vector<long> values);
};

// A coloring counting problem: placements of k colors (one distinguished)
// on the points of X, graded by the number of points that moved off the
// distinguished color.  All generating functions are truncated at
// `truncation`, which defaults to |X| for ZeroOne problems (their series
// are honest polynomials of degree <= |X|) and 24 otherwise.
struct ColoringProblem {
  GSet gset;
  long colors;
  DegreeSet degrees;
  long truncation;

  ColoringProblem(GSet gset, long colors, DegreeSet degrees = DegreeSet::zero_one(),
                  long truncation = -1);
};

// Generating function of the fixed placements: for a subgroup H with orbit
// profile {i -> o_i} this is prod_i (sum_{n in N} ((k-1) t^i)^n)^(o_i).
RationalSeries mark_series(const ColoringProblem& p, const Subgroup& h);

// Generating function counting placement orbits whose stabilizer class is
// exactly the given class, via the exact inverse of the mark table.  The
// coefficients of any honest problem are non-negative integers; anything
// else throws logic_error.
RationalSeries multiplicity_series(const BurnsideTables& tables, const ColoringProblem& p, int cls);

// multiplicity_series evaluated at t = 1 (the series must be a polynomial,
// i.e. ZeroOne, or Explicit with the truncation covering max(N) * |X|).
Integer multiplicity_total(const BurnsideTables& tables, const ColoringProblem& p, int cls);

// Orbits of placements with trivial stabilizer.
Integer primitive_count(const BurnsideTables& tables, const ColoringProblem& p);

// Fixed placements of a ZeroOne problem, ungraded: k^(number of H-orbits).
Integer total_marks(const ColoringProblem& p, const Subgroup& h);

// Character series of the symmetric powers of the permutation
// representation of X at the given group element: with c_i the cycle
// lengths of the element on X this is prod_i 1/(1 - t^(c_i)); the
// coefficient of t^n is the character of the n-th symmetric power.
RationalSeries symmetric_character_series(const GSet& x, int element, long truncation);
// Exterior counterpart via lambda_t = 1/S_(-t); a polynomial of degree <= |X|.
RationalSeries exterior_character_series(const GSet& x, int element, long truncation);

// One line per subgroup class of the base group.
struct IdentityReport {
  struct Row {
    std::string label;
    Integer lhs, rhs;
    bool ok;
  };
  std::vector<Row> rows;
  bool all_ok() const;
};

// Splitting a palette of k1*k2 colors as pairs (k1 colors, k2 colors)
// matches the Burnside-ring product of the two smaller problems:
//   total_h(X, k1*k2) = sum_{v1,v2} b_{v1,v2}(h) total_v1(X, k1) total_v2(X, k2)
// with b the product coefficients of the transitive basis.
IdentityReport verify_product_identity(const BurnsideTables& tables, const GSet& x, long k1, long k2);

// Power-palette identity: k^r colors on X counted through k colors on
// Y = Z_r x X over the extended group G' = C_r x G,
//   total_h(X, k^r) = sum_{V in Phi(G')} c_V(h) total_V(Y, k),
// where c_V(h) is the multiplicity of [G/K_h] in G'/V restricted to G.
// The precondition that Y restricts to r disjoint copies of X is checked.
IdentityReport verify_power_identity(const BurnsideTables& tables, const GSet& x, long k, int r,
                                     const Caps& caps = {});

// Same identity over a caller-supplied extension: hom embeds the base group
// into big.group() and y is the big G-set standing in for Z_r x X.
IdentityReport verify_power_identity_with(const BurnsideTables& tables, const GSet& x, long k, int r,
                                          const BurnsideTables& big, const GSet& y,
                                          const std::vector<int>& hom);

enum class DihedralFamily { Prism, Polygon };

// Closed-form count of primitive k-colorings of the n-prism or n-gon under
// the dihedral group, evaluated in exact Q(sqrt(k)) arithmetic.  The result
// is checked to be an integer and equal to the generic primitive_count; the
// intermediate Moebius-inversion identities relating multiplicity and mark
// series are re-verified for every divisor along the way.  Any mismatch
// throws logic_error.
struct ClosedFormResult {
  std::string case_label;      // "prism", "polygon-odd", "polygon-2mod4", "polygon-0mod4"
  Integer total;
  RationalSeries series;       // generic multiplicity series of the trivial class
};
ClosedFormResult dihedral_closed_form(const DihedralGroup& d, long k, DihedralFamily family,
                                      const Caps& caps = {});

}  // namespace burnside
