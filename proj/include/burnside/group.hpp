#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "burnside/permutation.hpp"

namespace burnside {

// Resource limits.  Defaults are generous enough for every group this
// library is normally pointed at; raise them explicitly (or via
// BURNSIDE_MAX_ORDER for the closure cap in the CLI) when you know what
// you are doing.
struct Caps {
  long closure_cap = 100000;        // max group order during generator closure
  long subgroup_order_cap = 200;    // max |G| for full subgroup enumeration
  int symmetric_degree_cap = 8;     // max n for symmetric_group(n)
  long long enumeration_cap = 2000000;  // max brute-force space (k^|X|, multisets)
  int dense_mult_cap = 512;         // precompute the full mult table up to this order
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Finite permutation group, closed element list with index-based arithmetic.
// Element 0..order-1 is the BFS discovery order from the identity with the
// generators applied on the right in the order given, so the numbering is
// reproducible run to run.
class FiniteGroup {
 public:
  // Breadth-first closure of the generators; throws cap_exceeded if the
  // order would pass caps.closure_cap.
  static GroupPtr from_generators(int degree, const std::vector<Permutation>& generators,
                                  const Caps& caps = {});
  // Explicit element list (already closed, identity present); used for
  // direct products.  Throws std::invalid_argument when not a group.
  static GroupPtr from_elements(std::vector<Permutation> elements, std::vector<int> generator_indices,
                                const Caps& caps = {});

  int order() const { return static_cast<int>(elements_.size()); }
  int degree() const { return degree_; }
  int identity_index() const { return identity_; }
  const Permutation& element(int i) const { return elements_[static_cast<size_t>(i)]; }
  // Index of a permutation, or -1 when it is not an element.
  int index_of(const Permutation& p) const;
  int multiply(int i, int j) const;  // index of element(i) * element(j)
  int inverse(int i) const { return inverses_[static_cast<size_t>(i)]; }
  int conjugate(int g, int h) const;  // index of g h g^-1
  const std::vector<int>& generator_indices() const { return generator_indices_; }

 private:
  FiniteGroup() = default;
  void finish(const Caps& caps);  // builds index map, inverses, mult table

  int degree_ = 0;
  int identity_ = 0;
  std::vector<Permutation> elements_;
  std::vector<int> generator_indices_;
  std::vector<int> inverses_;
  std::vector<int> mult_table_;  // order x order, empty when order > dense_mult_cap
  std::unordered_map<Permutation, int, PermutationHash> index_;
};

GroupPtr trivial_group();
// Z/n acting on n points by rotation (degree 1 when n = 1).
GroupPtr cyclic_group(int n, const Caps& caps = {});
// S_n in its natural action; throws cap_exceeded beyond caps.symmetric_degree_cap.
GroupPtr symmetric_group(int n, const Caps& caps = {});

// Dihedral group of order 2n together with its word structure: every
// element is b^eps a^rot with a the rotation generator and b the
// reflection.  For n >= 3 the realization is the natural action on the n
// vertices of an n-gon (a: i -> i+1, b: i -> -i mod n).  That action is not
// faithful for n <= 2, so D_1 is realized on 2 points (b swaps them) and
// D_2 on 4 points (its regular action); the word structure keeps polygon
// and prism constructions independent of the realization.
struct DihedralGroup {
  GroupPtr group;
  int n = 0;
  int rotation_index = 0;    // element index of a
  int reflection_index = 0;  // element index of b
  std::vector<int> rotation_exponent;    // rot in b^eps a^rot, per element
  std::vector<uint8_t> reflection_flag;  // eps, per element
};
DihedralGroup make_dihedral(int n, const Caps& caps = {});
GroupPtr dihedral_group(int n, const Caps& caps = {});

// A x B acting on the disjoint union of the two domains; element (i, j)
// lives at index i * |B| + j.
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, const Caps& caps = {});

// Subgroup as a sorted list of element indices into its parent group.
struct Subgroup {
  std::vector<int> members;
  int order() const { return static_cast<int>(members.size()); }
  bool contains(int element_index) const;
  friend bool operator==(const Subgroup& a, const Subgroup& b) = default;
};

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);
Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& generator_indices);
bool is_subgroup(const FiniteGroup& g, const Subgroup& h);
Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, int by);
// H <= K as sets (both subgroups of the same parent).
bool subgroup_subset(const Subgroup& h, const Subgroup& k);

// Every subgroup of g, sorted by order then lexicographically by member
// list.  Throws cap_exceeded when |g| > caps.subgroup_order_cap.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const Caps& caps = {});

struct SubgroupClass {
  Subgroup canonical;               // lexicographically least member set in the class
  std::vector<Subgroup> conjugates; // the whole class, sorted; includes canonical
  std::vector<int> witnesses;       // conjugates[i] == witnesses[i] * canonical * witnesses[i]^-1
};

// Conjugacy classes of subgroups, ordered by subgroup order and then by the
// canonical member list.  Class 0 is always the trivial subgroup and the
// last class is the whole group.
class SubgroupClassTable {
 public:
  static SubgroupClassTable build(const GroupPtr& g, const Caps& caps = {});

  const GroupPtr& group() const { return group_; }
  int class_count() const { return static_cast<int>(classes_.size()); }
  const SubgroupClass& cls(int i) const { return classes_[static_cast<size_t>(i)]; }
  const std::vector<SubgroupClass>& classes() const { return classes_; }
  int trivial_class() const { return 0; }
  int whole_class() const { return class_count() - 1; }

  // Class index of an exact subgroup (any member of the class, not just the
  // canonical one).  Throws std::invalid_argument for unknown sets.
  int class_of(const Subgroup& h) const;

  const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  // Index of the class carrying the given label, or -1.
  int class_by_label(const std::string& label) const;

 private:
  GroupPtr group_;
  std::vector<SubgroupClass> classes_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> lookup_;  // member list key -> class
  static std::string key(const Subgroup& h);
};

// Class table of a dihedral group with the standard labels: "C_m" for the
// rotation subgroups and "D_m" / "D'_m" for the two families of reflection
// subgroups of order 2m.  The two families are conjugate (one class, label
// "D_m") exactly when d = n/m is odd; for even d they are distinct classes
// split by the parity of the reflection exponent.
SubgroupClassTable dihedral_subgroup_classes(const DihedralGroup& d, const Caps& caps = {});

// Generic labels: "C_m" when the group is cyclic (every class has a unique
// order there), otherwise "U<order><letter>" in class order.
std::vector<std::string> default_class_labels(const SubgroupClassTable& table, bool cyclic);

}  // namespace burnside
