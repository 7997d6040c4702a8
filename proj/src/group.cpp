#include "burnside/group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "burnside/rational.hpp"

namespace burnside {

GroupPtr FiniteGroup::from_generators(int degree, const std::vector<Permutation>& generators,
                                      const Caps& caps) {
  if (degree < 0) throw std::invalid_argument("FiniteGroup: negative degree");
  for (const auto& g : generators)
    if (g.degree() != degree) throw std::invalid_argument("FiniteGroup: generator degree mismatch");

  auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  group->degree_ = degree;
  group->elements_.push_back(Permutation::identity(degree));
  group->index_[group->elements_[0]] = 0;

  std::deque<int> frontier{0};
  while (!frontier.empty()) {
    int cur = frontier.front();
    frontier.pop_front();
    for (const auto& gen : generators) {
      Permutation next = group->elements_[static_cast<size_t>(cur)] * gen;
      if (group->index_.contains(next)) continue;
      if (static_cast<long>(group->elements_.size()) >= caps.closure_cap)
        throw cap_exceeded("group closure exceeds cap of " + std::to_string(caps.closure_cap) +
                           " elements");
      int idx = static_cast<int>(group->elements_.size());
      group->index_[next] = idx;
      group->elements_.push_back(std::move(next));
      frontier.push_back(idx);
    }
  }

  for (const auto& gen : generators) group->generator_indices_.push_back(group->index_.at(gen));
  group->finish(caps);
  return group;
}

GroupPtr FiniteGroup::from_elements(std::vector<Permutation> elements,
                                    std::vector<int> generator_indices, const Caps& caps) {
  if (elements.empty()) throw std::invalid_argument("FiniteGroup: empty element list");
  auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  group->degree_ = elements[0].degree();
  group->elements_ = std::move(elements);
  for (int i = 0; i < group->order(); ++i) {
    const auto& p = group->elements_[static_cast<size_t>(i)];
    if (p.degree() != group->degree_) throw std::invalid_argument("FiniteGroup: element degree mismatch");
    if (!group->index_.emplace(p, i).second) throw std::invalid_argument("FiniteGroup: duplicate element");
  }
  group->generator_indices_ = std::move(generator_indices);
  group->finish(caps);  // small orders get a dense mult table, a full closure check
  // For larger orders at least verify closure under the generators.
  if (group->mult_table_.empty())
    for (int i = 0; i < group->order(); ++i)
      for (int gen : group->generator_indices_) group->multiply(i, gen);
  return group;
}

void FiniteGroup::finish(const Caps& caps) {
  identity_ = -1;
  for (int i = 0; i < order(); ++i)
    if (elements_[static_cast<size_t>(i)].is_identity()) identity_ = i;
  if (identity_ < 0) throw std::invalid_argument("FiniteGroup: identity missing");

  inverses_.resize(static_cast<size_t>(order()));
  for (int i = 0; i < order(); ++i) {
    int inv = index_of(elements_[static_cast<size_t>(i)].inverse());
    if (inv < 0) throw std::invalid_argument("FiniteGroup: inverse missing, set is not closed");
    inverses_[static_cast<size_t>(i)] = inv;
  }

  if (order() <= caps.dense_mult_cap) {
    mult_table_.resize(static_cast<size_t>(order()) * static_cast<size_t>(order()));
    for (int i = 0; i < order(); ++i)
      for (int j = 0; j < order(); ++j) {
        int k = index_of(elements_[static_cast<size_t>(i)] * elements_[static_cast<size_t>(j)]);
        if (k < 0) throw std::invalid_argument("FiniteGroup: product missing, set is not closed");
        mult_table_[static_cast<size_t>(i) * static_cast<size_t>(order()) + static_cast<size_t>(j)] = k;
      }
  }
}

int FiniteGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

int FiniteGroup::multiply(int i, int j) const {
  if (!mult_table_.empty())
    return mult_table_[static_cast<size_t>(i) * static_cast<size_t>(order()) + static_cast<size_t>(j)];
  int k = index_of(elements_[static_cast<size_t>(i)] * elements_[static_cast<size_t>(j)]);
  if (k < 0) throw std::logic_error("FiniteGroup: product fell outside the group");
  return k;
}

int FiniteGroup::conjugate(int g, int h) const { return multiply(multiply(g, h), inverse(g)); }

GroupPtr trivial_group() { return FiniteGroup::from_generators(1, {}); }

GroupPtr cyclic_group(int n, const Caps& caps) {
  if (n < 1) throw std::invalid_argument("cyclic_group: n must be >= 1");
  // the final order is known here; refuse before allocating degree-n tables
  if (n > caps.closure_cap)
    throw cap_exceeded("cyclic_group: order " + std::to_string(n) + " exceeds cap " +
                       std::to_string(caps.closure_cap));
  if (n == 1) return trivial_group();
  Permutation a = Permutation::identity(n);
  for (int i = 0; i < n; ++i) a.images[static_cast<size_t>(i)] = (i + 1) % n;
  return FiniteGroup::from_generators(n, {a}, caps);
}

GroupPtr symmetric_group(int n, const Caps& caps) {
  if (n < 1) throw std::invalid_argument("symmetric_group: n must be >= 1");
  if (n > caps.symmetric_degree_cap)
    throw cap_exceeded("symmetric_group: degree " + std::to_string(n) + " exceeds cap " +
                       std::to_string(caps.symmetric_degree_cap));
  if (n == 1) return trivial_group();
  Permutation swap01 = Permutation::identity(n);
  std::swap(swap01.images[0], swap01.images[1]);
  Permutation cycle = Permutation::identity(n);
  for (int i = 0; i < n; ++i) cycle.images[static_cast<size_t>(i)] = (i + 1) % n;
  if (n == 2) return FiniteGroup::from_generators(n, {swap01}, caps);
  return FiniteGroup::from_generators(n, {swap01, cycle}, caps);
}

DihedralGroup make_dihedral(int n, const Caps& caps) {
  if (n < 1) throw std::invalid_argument("make_dihedral: n must be >= 1");
  if (n > caps.closure_cap / 2)
    throw cap_exceeded("make_dihedral: order " + std::to_string(2L * n) + " exceeds cap " +
                       std::to_string(caps.closure_cap));
  Permutation a, b;
  if (n == 1) {
    // One vertex is fixed by everything; use two points so the reflection
    // is visible.
    a = Permutation::identity(2);
    b = Permutation::from_images({1, 0});
  } else if (n == 2) {
    // On 2 vertices the reflection b (i -> -i) collapses to the identity;
    // fall back to the regular action on 4 points.
    a = Permutation::from_images({1, 0, 3, 2});
    b = Permutation::from_images({2, 3, 0, 1});
  } else {
    a = Permutation::identity(n);
    b = Permutation::identity(n);
    for (int i = 0; i < n; ++i) {
      a.images[static_cast<size_t>(i)] = (i + 1) % n;
      b.images[static_cast<size_t>(i)] = (n - i) % n;
    }
  }

  DihedralGroup d;
  d.n = n;
  d.group = FiniteGroup::from_generators(a.degree(), {a, b}, caps);
  if (d.group->order() != 2 * n) throw std::logic_error("make_dihedral: unexpected group order");
  d.rotation_index = d.group->generator_indices()[0];
  d.reflection_index = d.group->generator_indices()[1];

  // Recover the word form b^eps a^rot of every element by walking the BFS
  // tree again: (b^e a^k) a = b^e a^(k+1) and (b^e a^k) b = b^(e+1) a^(-k).
  int order = d.group->order();
  d.rotation_exponent.assign(static_cast<size_t>(order), -1);
  d.reflection_flag.assign(static_cast<size_t>(order), 0);
  d.rotation_exponent[static_cast<size_t>(d.group->identity_index())] = 0;
  std::deque<int> frontier{d.group->identity_index()};
  while (!frontier.empty()) {
    int cur = frontier.front();
    frontier.pop_front();
    int k = d.rotation_exponent[static_cast<size_t>(cur)];
    int e = d.reflection_flag[static_cast<size_t>(cur)];
    int via_a = d.group->multiply(cur, d.rotation_index);
    if (d.rotation_exponent[static_cast<size_t>(via_a)] < 0) {
      d.rotation_exponent[static_cast<size_t>(via_a)] = (k + 1) % n;
      d.reflection_flag[static_cast<size_t>(via_a)] = static_cast<uint8_t>(e);
      frontier.push_back(via_a);
    }
    int via_b = d.group->multiply(cur, d.reflection_index);
    if (d.rotation_exponent[static_cast<size_t>(via_b)] < 0) {
      d.rotation_exponent[static_cast<size_t>(via_b)] = (n - k) % n;
      d.reflection_flag[static_cast<size_t>(via_b)] = static_cast<uint8_t>(1 - e);
      frontier.push_back(via_b);
    }
  }
  return d;
}

GroupPtr dihedral_group(int n, const Caps& caps) { return make_dihedral(n, caps).group; }

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, const Caps& caps) {
  long long order = static_cast<long long>(a->order()) * b->order();
  if (order > caps.closure_cap)
    throw cap_exceeded("direct_product: order " + std::to_string(order) + " exceeds closure cap");
  int da = a->degree(), db = b->degree();
  std::vector<Permutation> elements;
  elements.reserve(static_cast<size_t>(order));
  for (int i = 0; i < a->order(); ++i)
    for (int j = 0; j < b->order(); ++j) {
      Permutation p = Permutation::identity(da + db);
      for (int x = 0; x < da; ++x) p.images[static_cast<size_t>(x)] = a->element(i)(x);
      for (int x = 0; x < db; ++x) p.images[static_cast<size_t>(da + x)] = da + b->element(j)(x);
      elements.push_back(std::move(p));
    }
  // Generators: a's embedded at j = identity, b's at i = identity.
  std::vector<int> gens;
  for (int gi : a->generator_indices()) gens.push_back(gi * b->order() + b->identity_index());
  for (int gj : b->generator_indices()) gens.push_back(a->identity_index() * b->order() + gj);
  return FiniteGroup::from_elements(std::move(elements), std::move(gens), caps);
}

bool Subgroup::contains(int element_index) const {
  return std::binary_search(members.begin(), members.end(), element_index);
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup{{g.identity_index()}}; }

Subgroup whole_group(const FiniteGroup& g) {
  Subgroup h;
  h.members.resize(static_cast<size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) h.members[static_cast<size_t>(i)] = i;
  return h;
}

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& generator_indices) {
  std::set<int> members{g.identity_index()};
  std::deque<int> frontier{g.identity_index()};
  while (!frontier.empty()) {
    int cur = frontier.front();
    frontier.pop_front();
    for (int gen : generator_indices) {
      if (gen < 0 || gen >= g.order()) throw std::invalid_argument("subgroup_closure: bad element index");
      int next = g.multiply(cur, gen);
      if (members.insert(next).second) frontier.push_back(next);
    }
  }
  Subgroup h;
  h.members.assign(members.begin(), members.end());
  return h;
}

bool is_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (h.members.empty() || !h.contains(g.identity_index())) return false;
  for (int x : h.members)
    for (int y : h.members)
      if (!h.contains(g.multiply(x, y))) return false;
  return true;
}

Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, int by) {
  Subgroup r;
  r.members.reserve(h.members.size());
  for (int x : h.members) r.members.push_back(g.conjugate(by, x));
  std::sort(r.members.begin(), r.members.end());
  return r;
}

bool subgroup_subset(const Subgroup& h, const Subgroup& k) {
  return std::includes(k.members.begin(), k.members.end(), h.members.begin(), h.members.end());
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const Caps& caps) {
  if (g.order() > caps.subgroup_order_cap)
    throw cap_exceeded("all_subgroups: group order " + std::to_string(g.order()) +
                       " exceeds cap " + std::to_string(caps.subgroup_order_cap));
  // Worklist closure of the subgroup lattice: extend each known subgroup by
  // each element and close.  Fine at these orders.
  std::set<std::vector<int>> seen;
  std::deque<Subgroup> todo{trivial_subgroup(g)};
  seen.insert(todo.front().members);
  while (!todo.empty()) {
    Subgroup h = std::move(todo.front());
    todo.pop_front();
    for (int x = 0; x < g.order(); ++x) {
      if (h.contains(x)) continue;
      std::vector<int> gens = h.members;
      gens.push_back(x);
      Subgroup bigger = subgroup_closure(g, gens);
      if (seen.insert(bigger.members).second) todo.push_back(bigger);
    }
  }
  std::vector<Subgroup> out;
  out.reserve(seen.size());
  for (const auto& m : seen) out.push_back(Subgroup{m});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members < b.members;
  });
  return out;
}

std::string SubgroupClassTable::key(const Subgroup& h) {
  std::string k;
  for (int x : h.members) {
    k += std::to_string(x);
    k += ',';
  }
  return k;
}

SubgroupClassTable SubgroupClassTable::build(const GroupPtr& g, const Caps& caps) {
  SubgroupClassTable table;
  table.group_ = g;

  std::vector<Subgroup> subs = all_subgroups(*g, caps);
  std::set<std::vector<int>> unassigned;
  for (const auto& h : subs) unassigned.insert(h.members);

  while (!unassigned.empty()) {
    Subgroup seed{*unassigned.begin()};
    // Conjugation orbit.  The canonical representative is the least member
    // list; since subgroups were sorted, the seed of the first remaining
    // class of each order is already canonical for its class only if the
    // orbit never reaches a smaller list, so track the true minimum.
    SubgroupClass cls;
    std::set<std::vector<int>> orbit;
    std::vector<std::pair<std::vector<int>, int>> found;  // member list, witness
    for (int by = 0; by < g->order(); ++by) {
      Subgroup c = conjugate_subgroup(*g, seed, by);
      if (orbit.insert(c.members).second) found.emplace_back(c.members, by);
    }
    std::sort(found.begin(), found.end());
    // Witnesses are recorded relative to the seed; rebase them onto the
    // canonical representative: canonical = w0 seed w0^-1, so
    // conj = w seed w^-1 = (w w0^-1) canonical (w w0^-1)^-1.
    int w0 = found.front().second;
    cls.canonical = Subgroup{found.front().first};
    for (auto& [members, w] : found) {
      cls.conjugates.push_back(Subgroup{members});
      cls.witnesses.push_back(g->multiply(w, g->inverse(w0)));
      unassigned.erase(members);
    }
    table.classes_.push_back(std::move(cls));
  }

  std::sort(table.classes_.begin(), table.classes_.end(),
            [](const SubgroupClass& a, const SubgroupClass& b) {
              if (a.canonical.order() != b.canonical.order())
                return a.canonical.order() < b.canonical.order();
              return a.canonical.members < b.canonical.members;
            });

  for (int i = 0; i < table.class_count(); ++i)
    for (const auto& h : table.classes_[static_cast<size_t>(i)].conjugates)
      table.lookup_[key(h)] = i;

  table.labels_.resize(static_cast<size_t>(table.class_count()));
  for (int i = 0; i < table.class_count(); ++i)
    table.labels_[static_cast<size_t>(i)] =
        "U" + std::to_string(table.cls(i).canonical.order()) + "#" + std::to_string(i);
  return table;
}

int SubgroupClassTable::class_of(const Subgroup& h) const {
  auto it = lookup_.find(key(h));
  if (it == lookup_.end()) throw std::invalid_argument("class_of: not a subgroup of this group");
  return it->second;
}

void SubgroupClassTable::set_labels(std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) != class_count())
    throw std::invalid_argument("set_labels: wrong label count");
  labels_ = std::move(labels);
}

int SubgroupClassTable::class_by_label(const std::string& label) const {
  for (int i = 0; i < class_count(); ++i)
    if (labels_[static_cast<size_t>(i)] == label) return i;
  return -1;
}

SubgroupClassTable dihedral_subgroup_classes(const DihedralGroup& d, const Caps& caps) {
  SubgroupClassTable table = SubgroupClassTable::build(d.group, caps);
  std::vector<std::string> labels;
  for (int i = 0; i < table.class_count(); ++i) {
    const Subgroup& h = table.cls(i).canonical;
    bool has_reflection = false;
    int least_reflection_exponent = -1;
    for (int x : h.members) {
      if (!d.reflection_flag[static_cast<size_t>(x)]) continue;
      int k = d.rotation_exponent[static_cast<size_t>(x)];
      if (!has_reflection || k < least_reflection_exponent) least_reflection_exponent = k;
      has_reflection = true;
    }
    if (!has_reflection) {
      labels.push_back("C_" + std::to_string(h.order()));
      continue;
    }
    int m = h.order() / 2;       // rotation part has order m, so H is D_m-shaped
    int div = d.n / m;           // the "d" of the classification
    bool primed = (div % 2 == 0) && (least_reflection_exponent % 2 == 1);
    labels.push_back((primed ? "D'_" : "D_") + std::to_string(m));
  }
  table.set_labels(std::move(labels));
  return table;
}

std::vector<std::string> default_class_labels(const SubgroupClassTable& table, bool cyclic) {
  std::vector<std::string> labels;
  if (cyclic) {
    for (int i = 0; i < table.class_count(); ++i)
      labels.push_back("C_" + std::to_string(table.cls(i).canonical.order()));
    return labels;
  }
  // "U<order><letter>": stable, readable, no structure theory required.
  int prev_order = -1;
  char letter = 'a';
  for (int i = 0; i < table.class_count(); ++i) {
    int ord = table.cls(i).canonical.order();
    letter = (ord == prev_order) ? static_cast<char>(letter + 1) : 'a';
    prev_order = ord;
    labels.push_back("U" + std::to_string(ord) + std::string(1, letter));
  }
  return labels;
}

}  // namespace burnside
