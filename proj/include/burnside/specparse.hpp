#pragma once

#include <optional>
#include <string>
#include <vector>

#include "burnside/colorings.hpp"
#include "burnside/group.hpp"
#include "burnside/gset.hpp"

namespace burnside {

// Syntax errors in spec strings (distinct from semantic errors such as a
// generator not lying in the group, which surface as std::invalid_argument).
class spec_error : public std::invalid_argument {
 public:
  explicit spec_error(const std::string& what) : std::invalid_argument(what) {}
};

// Group specs:
//   cyclic:N | dihedral:N | symmetric:N | perm:DEGREE:GENS
// where GENS is a ';'-separated list of permutations in cycle notation,
// e.g. perm:4:(0 1);(0 1 2 3).
struct GroupSpec {
  enum class Kind { Cyclic, Dihedral, Symmetric, Perm };
  Kind kind = Kind::Cyclic;
  int n = 1;                             // order parameter / degree for Perm
  std::vector<std::string> generators;   // Perm only, canonical cycle strings
};

GroupSpec parse_group_spec(const std::string& text);
std::string print_group_spec(const GroupSpec& spec);

// G-set specs:
//   natural | ngon | ngon-dihedral | prism | coset:GENS
//   | product:(A)x(B) | union:(A)+(B)
// with A and B full g-set specs; coset:() is the trivial subgroup, i.e. the
// regular action.
struct GSetSpec {
  enum class Kind { Natural, Ngon, NgonDihedral, Prism, Coset, Product, Union };
  Kind kind = Kind::Natural;
  std::vector<std::string> subgroup_generators;  // Coset only ("()" alone = trivial)
  std::vector<GSetSpec> children;                // Product / Union: exactly two
};

GSetSpec parse_gset_spec(const std::string& text);
std::string print_gset_spec(const GSetSpec& spec);

// Degree-set specs: zeroone | full | set:N1,N2,...
DegreeSet parse_degree_set(const std::string& text);
std::string print_degree_set(const DegreeSet& degrees);

// A built group, remembering enough structure to label subgroup classes and
// build polygon/prism actions.
struct GroupContext {
  GroupSpec spec;
  GroupPtr group;
  std::optional<DihedralGroup> dihedral;

  SubgroupClassTable labeled_classes(const Caps& caps = {}) const;
};

GroupContext build_group(const GroupSpec& spec, const Caps& caps = {});
GSet build_gset(const GSetSpec& spec, const GroupContext& context, const Caps& caps = {});

}  // namespace burnside
