#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "burnside/group.hpp"

namespace burnside {

// Finite left G-set: |G| x size action table.  The empty set is a valid
// G-set.  Construction checks the identity axiom everywhere and the
// compatibility axiom g(hx) = (gh)x with g running over the group's
// generators (which implies it for all g), skipping the check only when
// |G| * size exceeds a million entries.
class GSet {
 public:
  GSet(GroupPtr group, int size, std::vector<int> action, std::vector<std::string> labels = {});

  const GroupPtr& group() const { return group_; }
  int size() const { return size_; }
  int act(int element, int point) const {
    return action_[static_cast<size_t>(element) * static_cast<size_t>(size_) + static_cast<size_t>(point)];
  }
  const std::string& label(int point) const { return labels_[static_cast<size_t>(point)]; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  GroupPtr group_;
  int size_ = 0;
  std::vector<int> action_;
  std::vector<std::string> labels_;
};

GSet empty_gset(const GroupPtr& g);
// The group acting on its own permutation domain.
GSet natural_gset(const GroupPtr& g);
// Left cosets xH with G acting by left translation.  Point labels follow
// the least element index in each coset.
GSet coset_space(const GroupPtr& g, const Subgroup& h);
// Regular action, shorthand for coset_space(g, trivial).
GSet regular_gset(const GroupPtr& g);

// Same group on both sides is required (pointer identity); diagonal action.
GSet product(const GSet& x, const GSet& y);
GSet disjoint_union(const GSet& x, const GSet& y);

// Action pulled back along an index-level homomorphism phi: H -> G given as
// a table hom[h] = index in the target's group.  Verified to be a
// homomorphism on generators.
GSet pullback(const GSet& x, const GroupPtr& h, const std::vector<int>& hom);

// X viewed as an H-set where H becomes a standalone group; parent_index
// maps the standalone group's element indices back into the original group.
struct RestrictedGSet {
  GSet gset;
  std::vector<int> parent_index;
};
RestrictedGSet restrict_to(const GSet& x, const Subgroup& h);

// Multiset {orbit size -> number of H-orbits of that size} of X under the
// subgroup H.
struct OrbitProfile {
  std::map<long, long> counts;
  long orbit_count() const;
  long total_points() const;
};
OrbitProfile orbit_profile(const GSet& x, const Subgroup& h);
std::vector<std::vector<int>> orbits(const GSet& x, const Subgroup& h);  // each sorted, sorted by first point
long fixed_point_count(const GSet& x, const Subgroup& h);
Subgroup point_stabilizer(const GSet& x, int point);

// H\G/K decomposition: representatives in ascending element order, and for
// each the "part" H intersect (rep K rep^-1), a subgroup of H with indices
// into G.
struct DoubleCosetDecomposition {
  std::vector<int> representatives;
  std::vector<Subgroup> parts;
};
DoubleCosetDecomposition double_cosets(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);

// Extend an action given on the group's generators to the whole group.
GSet gset_from_generator_action(const GroupPtr& g, const std::vector<Permutation>& generator_action,
                                std::vector<std::string> labels = {});

// Vertices of the regular n-gon under the cyclic rotation group.
GSet ngon_vertices(int n, const Caps& caps = {});
// Vertices of the regular n-gon under the dihedral group (n-gon degenerates
// to a segment / digon for n <= 2; the action is through cosets there since
// the point action alone is not faithful).
GSet ngon_vertices_dihedral(const DihedralGroup& d);
// Vertices of the n-gonal prism under the dihedral group: points 0..n-1 on
// the top face, n..2n-1 on the bottom, rotation advances both faces,
// reflection swaps the faces (top i -> bottom -i).
GSet prism_vertices(const DihedralGroup& d);

}  // namespace burnside
