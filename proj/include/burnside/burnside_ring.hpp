#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "burnside/gset.hpp"
#include "burnside/group.hpp"
#include "burnside/rational.hpp"

namespace burnside {

// Element of the Burnside ring written in the transitive basis:
// coeffs[i] multiplies [G / H_i] with H_i the i-th subgroup class of the
// owning table.  Decompositions of honest G-sets have non-negative entries;
// differences of such (virtual elements) may go negative.
struct BurnsideElement {
  std::vector<long long> coeffs;
  friend bool operator==(const BurnsideElement&, const BurnsideElement&) = default;
};

// Everything the ring structure of B(G) needs, built once per group:
// the subgroup classes, the table of marks, and its exact rational inverse.
//
//   marks()[v][w]     = number of points of G/H_w fixed by H_v
//   inversion()[h][v] = coefficient of the fixed-point count at H_v in the
//                       multiplicity of [G/H_h]
//
// With classes ordered by subgroup order the mark matrix is upper
// triangular with positive diagonal, so the inverse is computed by exact
// back substitution and satisfies inversion * marks == identity (checked
// in the tests, two-sided).  Product and restriction coefficient lookups
// are memoized; the caches are guarded by a mutex so read-mostly sharing
// across threads is safe.
class BurnsideTables {
 public:
  static std::shared_ptr<const BurnsideTables> build(const GroupPtr& g, const Caps& caps = {});
  static std::shared_ptr<const BurnsideTables> build(SubgroupClassTable classes);

  const GroupPtr& group() const { return classes_.group(); }
  const SubgroupClassTable& classes() const { return classes_; }
  int class_count() const { return classes_.class_count(); }
  const std::vector<std::vector<long long>>& marks() const { return marks_; }
  const std::vector<std::vector<Rational>>& inversion() const { return inversion_; }

  // Fixed points of the canonical subgroup of every class on X.
  std::vector<long long> mark_vector(const GSet& x) const;
  // Multiplicities of the transitive G-sets in X; every honest G-set
  // resolves to non-negative integers (anything else throws logic_error).
  BurnsideElement decompose(const GSet& x) const;
  BurnsideElement decompose_marks(const std::vector<long long>& mark_vector) const;

  // Coefficients of [G/H_v1] * [G/H_v2] in the transitive basis (memoized).
  const BurnsideElement& product_coefficients(int v1, int v2) const;
  BurnsideElement multiply(const BurnsideElement& a, const BurnsideElement& b) const;

  // Restriction to a subgroup: the subgroup becomes a standalone group with
  // its own tables; coeffs[v] gives the decomposition of G/H_v as an H-set.
  struct RestrictionData {
    std::shared_ptr<const BurnsideTables> sub_tables;
    std::vector<int> parent_index;  // standalone element index -> index in G
    std::vector<BurnsideElement> coeffs;  // one per class of G
  };
  const RestrictionData& restriction(const Subgroup& h) const;
  BurnsideElement restrict_element(const BurnsideElement& a, const Subgroup& h) const;

  long long coset_size(int cls) const {
    return group()->order() / classes_.cls(cls).canonical.order();
  }

 private:
  explicit BurnsideTables(SubgroupClassTable classes);

  SubgroupClassTable classes_;
  std::vector<GSet> coset_spaces_;  // one per class, canonical subgroup
  std::vector<std::vector<long long>> marks_;
  std::vector<std::vector<Rational>> inversion_;

  mutable std::mutex memo_mutex_;
  mutable std::map<std::pair<int, int>, BurnsideElement> product_memo_;
  mutable std::map<std::vector<int>, RestrictionData> restriction_memo_;
};

using TablesPtr = std::shared_ptr<const BurnsideTables>;

// Decomposition of the pulled-back transitive G'-sets: entry [v][h] is the
// multiplicity of [H/K_h] in G'/H'_v viewed through the homomorphism
// hom: H -> G'.  Used for the induction/power identities where H sits
// inside G' with a known index map.
std::vector<BurnsideElement> pullback_coefficients(const BurnsideTables& big,
                                                   const BurnsideTables& small,
                                                   const std::vector<int>& hom);

}  // namespace burnside
