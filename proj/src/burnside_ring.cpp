#include "burnside/burnside_ring.hpp"

#include <stdexcept>

namespace burnside {

BurnsideTables::BurnsideTables(SubgroupClassTable classes) : classes_(std::move(classes)) {
  int n = class_count();
  coset_spaces_.reserve(static_cast<size_t>(n));
  for (int w = 0; w < n; ++w) coset_spaces_.push_back(coset_space(group(), classes_.cls(w).canonical));

  marks_.assign(static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n), 0));
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      marks_[static_cast<size_t>(v)][static_cast<size_t>(w)] =
          fixed_point_count(coset_spaces_[static_cast<size_t>(w)], classes_.cls(v).canonical);

  // The classes are sorted by subgroup order, and H_v can only fix a point
  // of G/H_w when H_v embeds in a conjugate of H_w, so the matrix is upper
  // triangular with the diagonal counting N_G(H)/H > 0.  Invert by back
  // substitution, row by row; everything stays rational and exact.
  inversion_.assign(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n), Rational(0)));
  for (int h = 0; h < n; ++h) {
    if (marks_[static_cast<size_t>(h)][static_cast<size_t>(h)] == 0)
      throw std::logic_error("mark table diagonal vanished");
    inversion_[static_cast<size_t>(h)][static_cast<size_t>(h)] =
        Rational(1, marks_[static_cast<size_t>(h)][static_cast<size_t>(h)]);
    for (int w = h + 1; w < n; ++w) {
      Rational sum(0);
      for (int v = h; v < w; ++v)
        sum += inversion_[static_cast<size_t>(h)][static_cast<size_t>(v)] *
               marks_[static_cast<size_t>(v)][static_cast<size_t>(w)];
      inversion_[static_cast<size_t>(h)][static_cast<size_t>(w)] =
          -sum / marks_[static_cast<size_t>(w)][static_cast<size_t>(w)];
    }
  }
}

std::shared_ptr<const BurnsideTables> BurnsideTables::build(const GroupPtr& g, const Caps& caps) {
  return build(SubgroupClassTable::build(g, caps));
}

std::shared_ptr<const BurnsideTables> BurnsideTables::build(SubgroupClassTable classes) {
  return std::shared_ptr<const BurnsideTables>(new BurnsideTables(std::move(classes)));
}

std::vector<long long> BurnsideTables::mark_vector(const GSet& x) const {
  if (x.group() != group()) throw std::invalid_argument("mark_vector: G-set lives over another group");
  std::vector<long long> out(static_cast<size_t>(class_count()));
  for (int v = 0; v < class_count(); ++v)
    out[static_cast<size_t>(v)] = fixed_point_count(x, classes_.cls(v).canonical);
  return out;
}

BurnsideElement BurnsideTables::decompose_marks(const std::vector<long long>& mark_vector) const {
  int n = class_count();
  if (static_cast<int>(mark_vector.size()) != n)
    throw std::invalid_argument("decompose_marks: wrong mark vector length");
  BurnsideElement out;
  out.coeffs.resize(static_cast<size_t>(n));
  for (int h = 0; h < n; ++h) {
    Rational mu(0);
    for (int v = h; v < n; ++v)
      mu += inversion_[static_cast<size_t>(h)][static_cast<size_t>(v)] * mark_vector[static_cast<size_t>(v)];
    if (!is_integer(mu))
      throw std::logic_error("decompose: non-integer multiplicity " + rational_string(mu));
    out.coeffs[static_cast<size_t>(h)] = static_cast<long long>(to_integer(mu));
  }
  return out;
}

BurnsideElement BurnsideTables::decompose(const GSet& x) const {
  BurnsideElement out = decompose_marks(mark_vector(x));
  long long total = 0;
  for (int h = 0; h < class_count(); ++h) {
    if (out.coeffs[static_cast<size_t>(h)] < 0)
      throw std::logic_error("decompose: negative multiplicity for an honest G-set");
    total += out.coeffs[static_cast<size_t>(h)] * coset_size(h);
  }
  if (total != x.size()) throw std::logic_error("decompose: multiplicities do not add up to |X|");
  return out;
}

const BurnsideElement& BurnsideTables::product_coefficients(int v1, int v2) const {
  if (v1 > v2) std::swap(v1, v2);  // the ring is commutative
  std::scoped_lock lock(memo_mutex_);
  auto it = product_memo_.find({v1, v2});
  if (it == product_memo_.end()) {
    BurnsideElement e = decompose(
        product(coset_spaces_[static_cast<size_t>(v1)], coset_spaces_[static_cast<size_t>(v2)]));
    it = product_memo_.emplace(std::make_pair(v1, v2), std::move(e)).first;
  }
  return it->second;
}

BurnsideElement BurnsideTables::multiply(const BurnsideElement& a, const BurnsideElement& b) const {
  int n = class_count();
  if (static_cast<int>(a.coeffs.size()) != n || static_cast<int>(b.coeffs.size()) != n)
    throw std::invalid_argument("multiply: element size mismatch");
  BurnsideElement out;
  out.coeffs.assign(static_cast<size_t>(n), 0);
  for (int v1 = 0; v1 < n; ++v1) {
    if (!a.coeffs[static_cast<size_t>(v1)]) continue;
    for (int v2 = 0; v2 < n; ++v2) {
      if (!b.coeffs[static_cast<size_t>(v2)]) continue;
      const BurnsideElement& p = product_coefficients(v1, v2);
      long long scale = a.coeffs[static_cast<size_t>(v1)] * b.coeffs[static_cast<size_t>(v2)];
      for (int h = 0; h < n; ++h) out.coeffs[static_cast<size_t>(h)] += scale * p.coeffs[static_cast<size_t>(h)];
    }
  }
  return out;
}

const BurnsideTables::RestrictionData& BurnsideTables::restriction(const Subgroup& h) const {
  {
    std::scoped_lock lock(memo_mutex_);
    auto it = restriction_memo_.find(h.members);
    if (it != restriction_memo_.end()) return it->second;
  }
  // Build outside the lock; restriction tables recurse into another
  // BurnsideTables build.
  RestrictionData data;
  RestrictedGSet probe = restrict_to(coset_spaces_[0], h);
  GroupPtr sub = probe.gset.group();
  data.parent_index = probe.parent_index;
  data.sub_tables = BurnsideTables::build(sub);
  data.coeffs.reserve(static_cast<size_t>(class_count()));
  for (int v = 0; v < class_count(); ++v) {
    // Same standalone group for every class: pick the action rows of the
    // subgroup members straight out of the coset space.
    const GSet& x = coset_spaces_[static_cast<size_t>(v)];
    std::vector<int> action;
    action.reserve(h.members.size() * static_cast<size_t>(x.size()));
    for (int m : h.members)
      for (int p = 0; p < x.size(); ++p) action.push_back(x.act(m, p));
    data.coeffs.push_back(data.sub_tables->decompose(GSet(sub, x.size(), std::move(action), x.labels())));
  }
  std::scoped_lock lock(memo_mutex_);
  auto [it, inserted] = restriction_memo_.emplace(h.members, std::move(data));
  return it->second;
}

BurnsideElement BurnsideTables::restrict_element(const BurnsideElement& a, const Subgroup& h) const {
  const RestrictionData& data = restriction(h);
  int n = class_count();
  if (static_cast<int>(a.coeffs.size()) != n)
    throw std::invalid_argument("restrict_element: element size mismatch");
  BurnsideElement out;
  out.coeffs.assign(static_cast<size_t>(data.sub_tables->class_count()), 0);
  for (int v = 0; v < n; ++v) {
    if (!a.coeffs[static_cast<size_t>(v)]) continue;
    const BurnsideElement& c = data.coeffs[static_cast<size_t>(v)];
    for (size_t k = 0; k < out.coeffs.size(); ++k)
      out.coeffs[k] += a.coeffs[static_cast<size_t>(v)] * c.coeffs[k];
  }
  return out;
}

std::vector<BurnsideElement> pullback_coefficients(const BurnsideTables& big,
                                                   const BurnsideTables& small,
                                                   const std::vector<int>& hom) {
  std::vector<BurnsideElement> out;
  out.reserve(static_cast<size_t>(big.class_count()));
  for (int v = 0; v < big.class_count(); ++v) {
    GSet big_coset = coset_space(big.group(), big.classes().cls(v).canonical);
    out.push_back(small.decompose(pullback(big_coset, small.group(), hom)));
  }
  return out;
}

}  // namespace burnside
