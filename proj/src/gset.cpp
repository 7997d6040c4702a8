#include "burnside/gset.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

#include "burnside/rational.hpp"

namespace burnside {

GSet::GSet(GroupPtr group, int size, std::vector<int> action, std::vector<std::string> labels)
    : group_(std::move(group)), size_(size), action_(std::move(action)), labels_(std::move(labels)) {
  if (!group_) throw std::invalid_argument("GSet: null group");
  if (size_ < 0) throw std::invalid_argument("GSet: negative size");
  size_t expected = static_cast<size_t>(group_->order()) * static_cast<size_t>(size_);
  if (action_.size() != expected) throw std::invalid_argument("GSet: action table has wrong shape");
  for (int v : action_)
    if (v < 0 || v >= size_) throw std::invalid_argument("GSet: action image out of range");
  if (labels_.empty()) {
    labels_.reserve(static_cast<size_t>(size_));
    for (int p = 0; p < size_; ++p) labels_.push_back("p" + std::to_string(p));
  }
  if (static_cast<int>(labels_.size()) != size_) throw std::invalid_argument("GSet: label count mismatch");

  if (expected > 1000000) return;  // axiom check skipped for huge tables
  int e = group_->identity_index();
  for (int x = 0; x < size_; ++x)
    if (act(e, x) != x) throw std::invalid_argument("GSet: identity does not act trivially");
  for (int gen : group_->generator_indices())
    for (int g = 0; g < group_->order(); ++g) {
      int gg = group_->multiply(gen, g);
      for (int x = 0; x < size_; ++x)
        if (act(gen, act(g, x)) != act(gg, x))
          throw std::invalid_argument("GSet: action is not compatible with multiplication");
    }
}

GSet empty_gset(const GroupPtr& g) { return GSet(g, 0, {}); }

GSet natural_gset(const GroupPtr& g) {
  int n = g->degree();
  std::vector<int> action(static_cast<size_t>(g->order()) * static_cast<size_t>(n));
  for (int e = 0; e < g->order(); ++e)
    for (int x = 0; x < n; ++x)
      action[static_cast<size_t>(e) * static_cast<size_t>(n) + static_cast<size_t>(x)] = g->element(e)(x);
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x) labels.push_back("v" + std::to_string(x));
  return GSet(g, n, std::move(action), std::move(labels));
}

GSet coset_space(const GroupPtr& g, const Subgroup& h) {
  if (!is_subgroup(*g, h)) throw std::invalid_argument("coset_space: not a subgroup");
  int n = g->order();
  // Least element of each left coset xH serves as its representative.
  std::vector<int> rep(static_cast<size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    int least = x;
    for (int m : h.members) least = std::min(least, g->multiply(x, m));
    rep[static_cast<size_t>(x)] = least;
  }
  std::vector<int> points;  // representative element of each coset, ascending
  std::vector<int> point_of(static_cast<size_t>(n), -1);
  for (int x = 0; x < n; ++x)
    if (rep[static_cast<size_t>(x)] == x) {
      point_of[static_cast<size_t>(x)] = static_cast<int>(points.size());
      points.push_back(x);
    }
  int size = static_cast<int>(points.size());
  std::vector<int> action(static_cast<size_t>(n) * static_cast<size_t>(size));
  for (int e = 0; e < n; ++e)
    for (int p = 0; p < size; ++p) {
      int image = rep[static_cast<size_t>(g->multiply(e, points[static_cast<size_t>(p)]))];
      action[static_cast<size_t>(e) * static_cast<size_t>(size) + static_cast<size_t>(p)] =
          point_of[static_cast<size_t>(image)];
    }
  std::vector<std::string> labels;
  for (int p : points) labels.push_back("g" + std::to_string(p) + "H");
  return GSet(g, size, std::move(action), std::move(labels));
}

GSet regular_gset(const GroupPtr& g) { return coset_space(g, trivial_subgroup(*g)); }

GSet product(const GSet& x, const GSet& y) {
  if (x.group() != y.group()) throw std::invalid_argument("product: G-sets live over different groups");
  const auto& g = x.group();
  int size = x.size() * y.size();
  std::vector<int> action(static_cast<size_t>(g->order()) * static_cast<size_t>(size));
  std::vector<std::string> labels(static_cast<size_t>(size));
  for (int p = 0; p < x.size(); ++p)
    for (int q = 0; q < y.size(); ++q)
      labels[static_cast<size_t>(p * y.size() + q)] = "(" + x.label(p) + "," + y.label(q) + ")";
  for (int e = 0; e < g->order(); ++e)
    for (int p = 0; p < x.size(); ++p)
      for (int q = 0; q < y.size(); ++q)
        action[static_cast<size_t>(e) * static_cast<size_t>(size) +
               static_cast<size_t>(p * y.size() + q)] = x.act(e, p) * y.size() + y.act(e, q);
  return GSet(g, size, std::move(action), std::move(labels));
}

GSet disjoint_union(const GSet& x, const GSet& y) {
  if (x.group() != y.group()) throw std::invalid_argument("disjoint_union: G-sets live over different groups");
  const auto& g = x.group();
  int size = x.size() + y.size();
  std::vector<int> action(static_cast<size_t>(g->order()) * static_cast<size_t>(size));
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(size));
  for (int p = 0; p < x.size(); ++p) labels.push_back("L" + x.label(p));
  for (int q = 0; q < y.size(); ++q) labels.push_back("R" + y.label(q));
  for (int e = 0; e < g->order(); ++e) {
    for (int p = 0; p < x.size(); ++p)
      action[static_cast<size_t>(e) * static_cast<size_t>(size) + static_cast<size_t>(p)] = x.act(e, p);
    for (int q = 0; q < y.size(); ++q)
      action[static_cast<size_t>(e) * static_cast<size_t>(size) + static_cast<size_t>(x.size() + q)] =
          x.size() + y.act(e, q);
  }
  return GSet(g, size, std::move(action), std::move(labels));
}

GSet pullback(const GSet& x, const GroupPtr& h, const std::vector<int>& hom) {
  if (static_cast<int>(hom.size()) != h->order()) throw std::invalid_argument("pullback: wrong map size");
  const auto& g = x.group();
  for (int v : hom)
    if (v < 0 || v >= g->order()) throw std::invalid_argument("pullback: image index out of range");
  if (hom[static_cast<size_t>(h->identity_index())] != g->identity_index())
    throw std::invalid_argument("pullback: map does not preserve the identity");
  for (int gen : h->generator_indices())
    for (int e = 0; e < h->order(); ++e)
      if (hom[static_cast<size_t>(h->multiply(gen, e))] !=
          g->multiply(hom[static_cast<size_t>(gen)], hom[static_cast<size_t>(e)]))
        throw std::invalid_argument("pullback: map is not a homomorphism");
  std::vector<int> action(static_cast<size_t>(h->order()) * static_cast<size_t>(x.size()));
  for (int e = 0; e < h->order(); ++e)
    for (int p = 0; p < x.size(); ++p)
      action[static_cast<size_t>(e) * static_cast<size_t>(x.size()) + static_cast<size_t>(p)] =
          x.act(hom[static_cast<size_t>(e)], p);
  return GSet(h, x.size(), std::move(action), x.labels());
}

RestrictedGSet restrict_to(const GSet& x, const Subgroup& h) {
  const auto& g = x.group();
  if (!is_subgroup(*g, h)) throw std::invalid_argument("restrict_to: not a subgroup");
  std::vector<Permutation> elements;
  elements.reserve(h.members.size());
  for (int m : h.members) elements.push_back(g->element(m));
  // Generators: all members works, but keep the list short for the
  // downstream generator-based axiom checks by closing greedily.
  std::vector<int> gens;
  {
    Subgroup have = trivial_subgroup(*g);
    for (size_t i = 0; i < h.members.size() && have.order() < h.order(); ++i) {
      if (have.contains(h.members[i])) continue;
      std::vector<int> trial;
      for (int gi : gens) trial.push_back(h.members[static_cast<size_t>(gi)]);
      trial.push_back(h.members[i]);
      gens.push_back(static_cast<int>(i));
      have = subgroup_closure(*g, trial);
    }
  }
  GroupPtr standalone = FiniteGroup::from_elements(std::move(elements), gens);
  std::vector<int> action(static_cast<size_t>(standalone->order()) * static_cast<size_t>(x.size()));
  for (int e = 0; e < standalone->order(); ++e)
    for (int p = 0; p < x.size(); ++p)
      action[static_cast<size_t>(e) * static_cast<size_t>(x.size()) + static_cast<size_t>(p)] =
          x.act(h.members[static_cast<size_t>(e)], p);
  RestrictedGSet out{GSet(standalone, x.size(), std::move(action), x.labels()), h.members};
  return out;
}

std::vector<std::vector<int>> orbits(const GSet& x, const Subgroup& h) {
  std::vector<char> seen(static_cast<size_t>(x.size()), 0);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < x.size(); ++start) {
    if (seen[static_cast<size_t>(start)]) continue;
    std::set<int> orbit;
    std::deque<int> frontier{start};
    orbit.insert(start);
    while (!frontier.empty()) {
      int p = frontier.front();
      frontier.pop_front();
      for (int m : h.members) {
        int q = x.act(m, p);
        if (orbit.insert(q).second) frontier.push_back(q);
      }
    }
    for (int p : orbit) seen[static_cast<size_t>(p)] = 1;
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

long OrbitProfile::orbit_count() const {
  long n = 0;
  for (const auto& [size, count] : counts) n += count;
  return n;
}

long OrbitProfile::total_points() const {
  long n = 0;
  for (const auto& [size, count] : counts) n += size * count;
  return n;
}

OrbitProfile orbit_profile(const GSet& x, const Subgroup& h) {
  OrbitProfile profile;
  for (const auto& orbit : orbits(x, h)) ++profile.counts[static_cast<long>(orbit.size())];
  return profile;
}

long fixed_point_count(const GSet& x, const Subgroup& h) {
  long n = 0;
  for (int p = 0; p < x.size(); ++p) {
    bool fixed = true;
    for (int m : h.members)
      if (x.act(m, p) != p) {
        fixed = false;
        break;
      }
    if (fixed) ++n;
  }
  return n;
}

Subgroup point_stabilizer(const GSet& x, int point) {
  if (point < 0 || point >= x.size()) throw std::invalid_argument("point_stabilizer: point out of range");
  Subgroup s;
  for (int e = 0; e < x.group()->order(); ++e)
    if (x.act(e, point) == point) s.members.push_back(e);
  return s;
}

DoubleCosetDecomposition double_cosets(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  if (!is_subgroup(g, h) || !is_subgroup(g, k)) throw std::invalid_argument("double_cosets: not subgroups");
  DoubleCosetDecomposition out;
  std::vector<char> seen(static_cast<size_t>(g.order()), 0);
  for (int rep = 0; rep < g.order(); ++rep) {
    if (seen[static_cast<size_t>(rep)]) continue;
    out.representatives.push_back(rep);
    for (int a : h.members)
      for (int b : k.members) seen[static_cast<size_t>(g.multiply(g.multiply(a, rep), b))] = 1;
    Subgroup part;  // H intersect rep K rep^-1
    for (int a : h.members) {
      int conj = g.multiply(g.multiply(g.inverse(rep), a), rep);  // rep^-1 a rep in K?
      if (k.contains(conj)) part.members.push_back(a);
    }
    out.parts.push_back(std::move(part));
  }
  return out;
}

GSet gset_from_generator_action(const GroupPtr& g, const std::vector<Permutation>& generator_action,
                                std::vector<std::string> labels) {
  const auto& gens = g->generator_indices();
  if (generator_action.size() != gens.size())
    throw std::invalid_argument("gset_from_generator_action: need one permutation per generator");
  int size = generator_action.empty() ? 0 : generator_action[0].degree();
  for (const auto& p : generator_action)
    if (p.degree() != size) throw std::invalid_argument("gset_from_generator_action: degree mismatch");

  // Spread the generator images through the group along the Cayley graph:
  // row(x * gen) = row(x) * row(gen).
  std::vector<Permutation> rows(static_cast<size_t>(g->order()));
  std::vector<char> known(static_cast<size_t>(g->order()), 0);
  rows[static_cast<size_t>(g->identity_index())] = Permutation::identity(size);
  known[static_cast<size_t>(g->identity_index())] = 1;
  std::deque<int> frontier{g->identity_index()};
  while (!frontier.empty()) {
    int cur = frontier.front();
    frontier.pop_front();
    for (size_t j = 0; j < gens.size(); ++j) {
      int next = g->multiply(cur, gens[j]);
      if (known[static_cast<size_t>(next)]) continue;
      rows[static_cast<size_t>(next)] = rows[static_cast<size_t>(cur)] * generator_action[j];
      known[static_cast<size_t>(next)] = 1;
      frontier.push_back(next);
    }
  }
  for (char k : known)
    if (!k) throw std::invalid_argument("gset_from_generator_action: generators do not generate the group");

  std::vector<int> action(static_cast<size_t>(g->order()) * static_cast<size_t>(size));
  for (int e = 0; e < g->order(); ++e)
    for (int p = 0; p < size; ++p)
      action[static_cast<size_t>(e) * static_cast<size_t>(size) + static_cast<size_t>(p)] =
          rows[static_cast<size_t>(e)](p);
  // The GSet constructor re-checks the axioms, which is what certifies the
  // generator images were consistent (e.g. b^2 = 1 must hold on the points).
  return GSet(g, size, std::move(action), std::move(labels));
}

GSet ngon_vertices(int n, const Caps& caps) {
  GroupPtr c = cyclic_group(n, caps);
  return natural_gset(c);
}

GSet ngon_vertices_dihedral(const DihedralGroup& d) {
  if (d.n >= 3) return natural_gset(d.group);
  // Degenerate polygons: realize the vertex set as cosets of <b>, which has
  // index n in D_n.
  Subgroup reflection = subgroup_closure(*d.group, {d.reflection_index});
  return coset_space(d.group, reflection);
}

GSet prism_vertices(const DihedralGroup& d) {
  int n = d.n;
  Permutation rot = Permutation::identity(2 * n);
  Permutation flip = Permutation::identity(2 * n);
  for (int i = 0; i < n; ++i) {
    rot.images[static_cast<size_t>(i)] = (i + 1) % n;
    rot.images[static_cast<size_t>(n + i)] = n + (i + 1) % n;
    flip.images[static_cast<size_t>(i)] = n + (n - i) % n;
    flip.images[static_cast<size_t>(n + i)] = (n - i) % n;
  }
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("t" + std::to_string(i));
  for (int i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
  return gset_from_generator_action(d.group, {rot, flip}, std::move(labels));
}

}  // namespace burnside
