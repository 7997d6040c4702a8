#include "burnside/colorings.hpp"

#include <algorithm>
#include <stdexcept>

#include "burnside/numtheory.hpp"

namespace burnside {

DegreeSet DegreeSet::explicit_set(std::vector<long> values) {
  if (values.empty()) throw std::invalid_argument("DegreeSet: empty explicit set");
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.front() < 0) throw std::invalid_argument("DegreeSet: negative multiplicity");
  return {Kind::Explicit, std::move(values)};
}

ColoringProblem::ColoringProblem(GSet gset_, long colors_, DegreeSet degrees_, long truncation_)
    : gset(std::move(gset_)), colors(colors_), degrees(std::move(degrees_)), truncation(truncation_) {
  if (colors < 2) throw std::invalid_argument("ColoringProblem: need at least 2 colors");
  if (truncation < 0) truncation = degrees.kind == DegreeSet::Kind::ZeroOne ? gset.size() : 24;
}

namespace {

// sum over allowed multiplicities n of ((k-1) t^i)^n, truncated.
RationalSeries orbit_factor(const ColoringProblem& p, long orbit_size) {
  RationalSeries f(p.truncation);
  Rational weight(p.colors - 1);
  switch (p.degrees.kind) {
    case DegreeSet::Kind::ZeroOne:
      f.set_coeff(0, Rational(1));
      f.set_coeff(orbit_size, weight);
      break;
    case DegreeSet::Kind::Full:
      for (long n = 0; n * orbit_size <= p.truncation; ++n)
        f.set_coeff(n * orbit_size, rational_pow(weight, static_cast<unsigned long>(n)));
      break;
    case DegreeSet::Kind::Explicit:
      for (long n : p.degrees.values)
        if (n * orbit_size <= p.truncation)
          f.set_coeff(n * orbit_size, rational_pow(weight, static_cast<unsigned long>(n)));
      break;
  }
  return f;
}

Integer series_total(const RationalSeries& s, const char* what) {
  Rational sum = s.evaluate_at_one();
  if (!is_integer(sum)) throw std::logic_error(std::string(what) + ": non-integer total");
  return to_integer(sum);
}

}  // namespace

RationalSeries mark_series(const ColoringProblem& p, const Subgroup& h) {
  OrbitProfile profile = orbit_profile(p.gset, h);
  RationalSeries out = RationalSeries::constant(Rational(1), p.truncation);
  for (const auto& [size, count] : profile.counts)
    out *= orbit_factor(p, size).pow(static_cast<unsigned long>(count));
  return out;
}

RationalSeries multiplicity_series(const BurnsideTables& tables, const ColoringProblem& p, int cls) {
  if (p.gset.group() != tables.group())
    throw std::invalid_argument("multiplicity_series: problem lives over another group");
  if (cls < 0 || cls >= tables.class_count())
    throw std::invalid_argument("multiplicity_series: bad class index");
  RationalSeries out(p.truncation);
  const auto& inv = tables.inversion()[static_cast<size_t>(cls)];
  for (int v = cls; v < tables.class_count(); ++v) {
    if (inv[static_cast<size_t>(v)] == 0) continue;
    out += inv[static_cast<size_t>(v)] * mark_series(p, tables.classes().cls(v).canonical);
  }
  // Multiplicities count orbits of honest G-sets degree by degree, so the
  // result must have non-negative integer coefficients; a violation means
  // the tables and the mark series disagree about the group.
  for (long d = 0; d <= out.truncation(); ++d) {
    if (!is_integer(out.coeff(d)))
      throw std::logic_error("multiplicity_series: non-integer coefficient at degree " +
                             std::to_string(d));
    if (out.coeff(d) < 0)
      throw std::logic_error("multiplicity_series: negative coefficient at degree " +
                             std::to_string(d));
  }
  return out;
}

Integer multiplicity_total(const BurnsideTables& tables, const ColoringProblem& p, int cls) {
  bool polynomial = p.degrees.kind == DegreeSet::Kind::ZeroOne;
  if (p.degrees.kind == DegreeSet::Kind::Explicit)
    polynomial = p.degrees.values.back() * p.gset.size() <= p.truncation;
  if (!polynomial)
    throw std::invalid_argument("multiplicity_total: series is not a polynomial within truncation");
  return series_total(multiplicity_series(tables, p, cls), "multiplicity_total");
}

Integer primitive_count(const BurnsideTables& tables, const ColoringProblem& p) {
  return multiplicity_total(tables, p, tables.classes().trivial_class());
}

Integer total_marks(const ColoringProblem& p, const Subgroup& h) {
  if (p.degrees.kind != DegreeSet::Kind::ZeroOne)
    throw std::invalid_argument("total_marks: defined for ZeroOne problems");
  OrbitProfile profile = orbit_profile(p.gset, h);
  return integer_pow(Integer(p.colors), static_cast<unsigned long>(profile.orbit_count()));
}

RationalSeries symmetric_character_series(const GSet& x, int element, long truncation) {
  if (element < 0 || element >= x.group()->order())
    throw std::invalid_argument("symmetric_character_series: bad element index");
  Subgroup cyclic = subgroup_closure(*x.group(), {element});
  OrbitProfile profile = orbit_profile(x, cyclic);
  RationalSeries out = RationalSeries::constant(Rational(1), truncation);
  for (const auto& [size, count] : profile.counts) {
    // 1/(1 - t^size) truncated: geometric series in t^size.
    RationalSeries geo(truncation);
    for (long n = 0; n * size <= truncation; ++n) geo.set_coeff(n * size, Rational(1));
    out *= geo.pow(static_cast<unsigned long>(count));
  }
  return out;
}

RationalSeries exterior_character_series(const GSet& x, int element, long truncation) {
  return symmetric_character_series(x, element, truncation).alternate_signs().reciprocal();
}

bool IdentityReport::all_ok() const {
  for (const auto& r : rows)
    if (!r.ok) return false;
  return true;
}

IdentityReport verify_product_identity(const BurnsideTables& tables, const GSet& x, long k1, long k2) {
  ColoringProblem joint(x, k1 * k2);
  ColoringProblem left(x, k1), right(x, k2);
  int n = tables.class_count();
  std::vector<Integer> left_totals, right_totals;
  for (int v = 0; v < n; ++v) {
    left_totals.push_back(multiplicity_total(tables, left, v));
    right_totals.push_back(multiplicity_total(tables, right, v));
  }
  IdentityReport report;
  for (int h = 0; h < n; ++h) {
    Integer lhs = multiplicity_total(tables, joint, h);
    Integer rhs(0);
    for (int v1 = 0; v1 < n; ++v1)
      for (int v2 = 0; v2 < n; ++v2) {
        long long b = tables.product_coefficients(v1, v2).coeffs[static_cast<size_t>(h)];
        if (b) rhs += b * left_totals[static_cast<size_t>(v1)] * right_totals[static_cast<size_t>(v2)];
      }
    report.rows.push_back({tables.classes().label(h), lhs, rhs, lhs == rhs});
  }
  return report;
}

IdentityReport verify_power_identity_with(const BurnsideTables& tables, const GSet& x, long k, int r,
                                          const BurnsideTables& big, const GSet& y,
                                          const std::vector<int>& hom) {
  if (r < 1) throw std::invalid_argument("verify_power_identity: r must be >= 1");
  // Precondition: y pulled back along hom must fall apart into r copies of x.
  BurnsideElement restricted = tables.decompose(pullback(y, tables.group(), hom));
  BurnsideElement scaled = tables.decompose(x);
  for (auto& c : scaled.coeffs) c *= r;
  if (restricted != scaled)
    throw std::invalid_argument(
        "verify_power_identity: extension does not restrict to r disjoint copies of the base set");

  long k_pow = 1;
  for (int i = 0; i < r; ++i) {
    if (k_pow > 1000000000L / k) throw cap_exceeded("verify_power_identity: k^r too large");
    k_pow *= k;
  }
  ColoringProblem powered(x, k_pow);
  ColoringProblem base(y, k);

  std::vector<BurnsideElement> c = pullback_coefficients(big, tables, hom);
  std::vector<Integer> y_totals;
  for (int v = 0; v < big.class_count(); ++v) y_totals.push_back(multiplicity_total(big, base, v));

  IdentityReport report;
  for (int h = 0; h < tables.class_count(); ++h) {
    Integer lhs = multiplicity_total(tables, powered, h);
    Integer rhs(0);
    for (int v = 0; v < big.class_count(); ++v) {
      long long cv = c[static_cast<size_t>(v)].coeffs[static_cast<size_t>(h)];
      if (cv) rhs += cv * y_totals[static_cast<size_t>(v)];
    }
    report.rows.push_back({tables.classes().label(h), lhs, rhs, lhs == rhs});
  }
  return report;
}

IdentityReport verify_power_identity(const BurnsideTables& tables, const GSet& x, long k, int r,
                                     const Caps& caps) {
  GroupPtr cr = cyclic_group(r, caps);
  GroupPtr gp = direct_product(cr, tables.group(), caps);
  auto big = BurnsideTables::build(gp, caps);

  // y = Z_r x X with (c, g)(z, p) = (cz, gp); element (i, j) of the product
  // group sits at index i * |G| + j.
  GSet zr = natural_gset(cr);
  int xs = x.size(), zs = zr.size();
  std::vector<int> action(static_cast<size_t>(gp->order()) * static_cast<size_t>(zs * xs));
  for (int i = 0; i < cr->order(); ++i)
    for (int j = 0; j < tables.group()->order(); ++j) {
      size_t row = static_cast<size_t>(i * tables.group()->order() + j) * static_cast<size_t>(zs * xs);
      for (int z = 0; z < zs; ++z)
        for (int p = 0; p < xs; ++p)
          action[row + static_cast<size_t>(z * xs + p)] = zr.act(i, z) * xs + x.act(j, p);
    }
  GSet y(gp, zs * xs, std::move(action));

  std::vector<int> hom(static_cast<size_t>(tables.group()->order()));
  for (int j = 0; j < tables.group()->order(); ++j)
    hom[static_cast<size_t>(j)] = cr->identity_index() * tables.group()->order() + j;

  return verify_power_identity_with(tables, x, k, r, *big, y, hom);
}

namespace {

int require_class(const SubgroupClassTable& classes, const std::string& label) {
  int idx = classes.class_by_label(label);
  if (idx < 0) throw std::logic_error("dihedral class " + label + " not found");
  return idx;
}

}  // namespace

ClosedFormResult dihedral_closed_form(const DihedralGroup& dg, long k, DihedralFamily family,
                                      const Caps& caps) {
  const int n = dg.n;
  auto tables = BurnsideTables::build(dihedral_subgroup_classes(dg, caps));
  GSet x = family == DihedralFamily::Prism ? prism_vertices(dg) : ngon_vertices_dihedral(dg);
  ColoringProblem p(x, k);

  // Moebius-inversion identities: for every divisor d of n the multiplicity
  // series of C_{n/d} (and of the reflection classes) must match the
  // alternating sum of mark series over the divisors of d.
  const auto& classes = tables->classes();
  auto phi = [&](const std::string& label) {
    return mark_series(p, classes.cls(require_class(classes, label)).canonical);
  };
  auto mu = [&](const std::string& label) {
    return multiplicity_series(*tables, p, require_class(classes, label));
  };
  for (long d : divisors(n)) {
    long m = n / d;
    RationalSeries mu_c_expected(p.truncation);
    if (d % 2 == 1) {
      RationalSeries mu_d_expected(p.truncation);
      for (long dd : divisors(d)) {
        int mob = mobius(d / dd);
        if (!mob) continue;
        RationalSeries phi_d = phi("D_" + std::to_string(n / dd));
        mu_d_expected += Rational(mob) * phi_d;
        mu_c_expected += Rational(mob) * (Rational(1, 2 * d) * phi("C_" + std::to_string(n / dd)) -
                                          Rational(1, 2) * phi_d);
      }
      if (!(mu("D_" + std::to_string(m)) == mu_d_expected))
        throw std::logic_error("dihedral reflection-class inversion identity failed (odd index)");
    } else {
      RationalSeries mu_d_expected(p.truncation), mu_dp_expected(p.truncation);
      for (long dd : divisors(d)) {
        int mob = mobius(d / dd);
        if (!mob) continue;
        // For odd dd the primed family is conjugate to the unprimed one and
        // the labels merge.
        std::string d_label = "D_" + std::to_string(n / dd);
        std::string dp_label = (dd % 2 == 0) ? "D'_" + std::to_string(n / dd) : d_label;
        RationalSeries phi_d = phi(d_label), phi_dp = phi(dp_label);
        mu_d_expected += Rational(mob, 2) * phi_d;
        mu_dp_expected += Rational(mob, 2) * phi_dp;
        mu_c_expected += Rational(mob) * (Rational(1, 2 * d) * phi("C_" + std::to_string(n / dd)) -
                                          Rational(1, 4) * phi_d - Rational(1, 4) * phi_dp);
      }
      if (!(mu("D_" + std::to_string(m)) == mu_d_expected))
        throw std::logic_error("dihedral reflection-class inversion identity failed (even index)");
      if (!(mu("D'_" + std::to_string(m)) == mu_dp_expected))
        throw std::logic_error("dihedral primed-class inversion identity failed");
    }
    if (!(mu("C_" + std::to_string(m)) == mu_c_expected))
      throw std::logic_error("dihedral rotation-class inversion identity failed");
  }

  // Closed forms for the primitive count.
  QuadraticValue kk{Rational(k)};
  QuadraticValue root_k = QuadraticValue::sqrt_of(k);
  QuadraticValue closed;
  std::string case_label;
  if (family == DihedralFamily::Prism) {
    case_label = "prism";
    closed = QuadraticValue(Rational(1, 2)) *
             (necklace_poly(QuadraticValue{Rational(k * k)}, n) -
              QuadraticValue(Rational(n)) * necklace_poly(kk, n));
  } else if (n % 2 == 1) {
    case_label = "polygon-odd";
    closed = QuadraticValue(Rational(1, 2)) *
             (necklace_poly(kk, n) - QuadraticValue(Rational(n)) * root_k * necklace_poly(root_k, n));
  } else if (n % 4 == 2) {
    case_label = "polygon-2mod4";
    closed = QuadraticValue(Rational(1, 2)) * necklace_poly(kk, n) -
             QuadraticValue(Rational(n, 8)) * QuadraticValue(Rational(k + 1)) * necklace_poly(kk, n / 2) +
             QuadraticValue(Rational(n, 4)) * root_k * necklace_poly(root_k, n / 2);
  } else {
    case_label = "polygon-0mod4";
    closed = QuadraticValue(Rational(1, 2)) * necklace_poly(kk, n) -
             QuadraticValue(Rational(n, 4)) * QuadraticValue(Rational(k + 1)) * necklace_poly(root_k, n);
  }
  Integer total = closed.to_integer();  // throws if a surd survived

  ClosedFormResult result{case_label, total, multiplicity_series(*tables, p, classes.trivial_class())};
  if (primitive_count(*tables, p) != total)
    throw std::logic_error("dihedral closed form disagrees with the generic primitive count");
  return result;
}

}  // namespace burnside
