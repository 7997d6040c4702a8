#include "burnside/specparse.hpp"

#include <charconv>

namespace burnside {

namespace {

int parse_int(const std::string& text, const std::string& context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw spec_error(context + ": expected a number, got \"" + text + "\"");
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

// "(A)x(B)" / "(A)+(B)": returns the two parenthesized payloads.
std::pair<std::string, std::string> split_pair(const std::string& text, char op,
                                               const std::string& context) {
  if (text.empty() || text[0] != '(') throw spec_error(context + ": expected '(' in \"" + text + "\"");
  int depth = 0;
  size_t close = std::string::npos;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')' && --depth == 0) {
      close = i;
      break;
    }
  }
  if (close == std::string::npos) throw spec_error(context + ": unbalanced parentheses");
  if (close + 1 >= text.size() || text[close + 1] != op)
    throw spec_error(context + ": expected '" + std::string(1, op) + "' between operands");
  std::string rest = text.substr(close + 2);
  if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')')
    throw spec_error(context + ": expected parenthesized second operand");
  return {text.substr(1, close - 1), rest.substr(1, rest.size() - 2)};
}

std::vector<Permutation> parse_generator_list(const std::vector<std::string>& cycles, int degree) {
  std::vector<Permutation> gens;
  for (const auto& c : cycles) {
    try {
      gens.push_back(Permutation::from_cycles(degree, c));
    } catch (const std::invalid_argument& e) {
      throw spec_error(e.what());
    }
  }
  return gens;
}

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
  size_t colon = text.find(':');
  std::string head = text.substr(0, colon);
  GroupSpec spec;
  if (head == "cyclic" || head == "dihedral" || head == "symmetric") {
    if (colon == std::string::npos)
      throw spec_error("group spec \"" + text + "\" is missing its parameter");
    spec.kind = head == "cyclic" ? GroupSpec::Kind::Cyclic
               : head == "dihedral" ? GroupSpec::Kind::Dihedral
                                    : GroupSpec::Kind::Symmetric;
    spec.n = parse_int(text.substr(colon + 1), "group spec");
    if (spec.n < 1) throw spec_error("group spec: parameter must be >= 1");
    return spec;
  }
  if (head == "perm") {
    std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
    size_t colon2 = rest.find(':');
    if (colon2 == std::string::npos)
      throw spec_error("perm group spec needs a degree and generators, e.g. perm:4:(0 1);(2 3)");
    spec.kind = GroupSpec::Kind::Perm;
    spec.n = parse_int(rest.substr(0, colon2), "perm group degree");
    if (spec.n < 1) throw spec_error("perm group spec: degree must be >= 1");
    std::vector<std::string> parts = split(rest.substr(colon2 + 1), ';');
    // Canonicalize each generator through a parse/print round trip.
    for (const auto& gen : parse_generator_list(parts, spec.n))
      spec.generators.push_back(gen.cycle_string());
    if (spec.generators.empty()) throw spec_error("perm group spec: no generators");
    return spec;
  }
  throw spec_error("unknown group spec \"" + text +
                   "\" (expected cyclic:N, dihedral:N, symmetric:N or perm:DEGREE:GENS)");
}

std::string print_group_spec(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic: return "cyclic:" + std::to_string(spec.n);
    case GroupSpec::Kind::Dihedral: return "dihedral:" + std::to_string(spec.n);
    case GroupSpec::Kind::Symmetric: return "symmetric:" + std::to_string(spec.n);
    case GroupSpec::Kind::Perm: {
      std::string out = "perm:" + std::to_string(spec.n) + ":";
      for (size_t i = 0; i < spec.generators.size(); ++i) {
        if (i) out += ";";
        out += spec.generators[i];
      }
      return out;
    }
  }
  throw std::logic_error("print_group_spec: bad kind");
}

GSetSpec parse_gset_spec(const std::string& text) {
  GSetSpec spec;
  if (text == "natural") {
    spec.kind = GSetSpec::Kind::Natural;
    return spec;
  }
  if (text == "ngon") {
    spec.kind = GSetSpec::Kind::Ngon;
    return spec;
  }
  if (text == "ngon-dihedral") {
    spec.kind = GSetSpec::Kind::NgonDihedral;
    return spec;
  }
  if (text == "prism") {
    spec.kind = GSetSpec::Kind::Prism;
    return spec;
  }
  if (text.starts_with("coset:")) {
    spec.kind = GSetSpec::Kind::Coset;
    spec.subgroup_generators = split(text.substr(6), ';');
    if (spec.subgroup_generators.empty() || spec.subgroup_generators[0].empty())
      throw spec_error("coset spec needs generators; use coset:() for the trivial subgroup");
    return spec;
  }
  if (text.starts_with("product:")) {
    spec.kind = GSetSpec::Kind::Product;
    auto [a, b] = split_pair(text.substr(8), 'x', "product spec");
    spec.children = {parse_gset_spec(a), parse_gset_spec(b)};
    return spec;
  }
  if (text.starts_with("union:")) {
    spec.kind = GSetSpec::Kind::Union;
    auto [a, b] = split_pair(text.substr(6), '+', "union spec");
    spec.children = {parse_gset_spec(a), parse_gset_spec(b)};
    return spec;
  }
  throw spec_error("unknown g-set spec \"" + text + "\"");
}

std::string print_gset_spec(const GSetSpec& spec) {
  switch (spec.kind) {
    case GSetSpec::Kind::Natural: return "natural";
    case GSetSpec::Kind::Ngon: return "ngon";
    case GSetSpec::Kind::NgonDihedral: return "ngon-dihedral";
    case GSetSpec::Kind::Prism: return "prism";
    case GSetSpec::Kind::Coset: {
      std::string out = "coset:";
      for (size_t i = 0; i < spec.subgroup_generators.size(); ++i) {
        if (i) out += ";";
        out += spec.subgroup_generators[i];
      }
      return out;
    }
    case GSetSpec::Kind::Product:
      return "product:(" + print_gset_spec(spec.children[0]) + ")x(" +
             print_gset_spec(spec.children[1]) + ")";
    case GSetSpec::Kind::Union:
      return "union:(" + print_gset_spec(spec.children[0]) + ")+(" +
             print_gset_spec(spec.children[1]) + ")";
  }
  throw std::logic_error("print_gset_spec: bad kind");
}

DegreeSet parse_degree_set(const std::string& text) {
  if (text == "zeroone") return DegreeSet::zero_one();
  if (text == "full") return DegreeSet::full();
  if (text.starts_with("set:")) {
    std::vector<long> values;
    for (const auto& part : split(text.substr(4), ','))
      values.push_back(parse_int(part, "degree set"));
    try {
      return DegreeSet::explicit_set(std::move(values));
    } catch (const std::invalid_argument& e) {
      throw spec_error(e.what());
    }
  }
  throw spec_error("unknown degree set \"" + text + "\" (expected zeroone, full or set:N1,N2,...)");
}

std::string print_degree_set(const DegreeSet& degrees) {
  switch (degrees.kind) {
    case DegreeSet::Kind::ZeroOne: return "zeroone";
    case DegreeSet::Kind::Full: return "full";
    case DegreeSet::Kind::Explicit: {
      std::string out = "set:";
      for (size_t i = 0; i < degrees.values.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(degrees.values[i]);
      }
      return out;
    }
  }
  throw std::logic_error("print_degree_set: bad kind");
}

SubgroupClassTable GroupContext::labeled_classes(const Caps& caps) const {
  if (dihedral) return dihedral_subgroup_classes(*dihedral, caps);
  SubgroupClassTable table = SubgroupClassTable::build(group, caps);
  table.set_labels(default_class_labels(table, spec.kind == GroupSpec::Kind::Cyclic));
  return table;
}

GroupContext build_group(const GroupSpec& spec, const Caps& caps) {
  GroupContext context;
  context.spec = spec;
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic:
      context.group = cyclic_group(spec.n, caps);
      break;
    case GroupSpec::Kind::Dihedral:
      context.dihedral = make_dihedral(spec.n, caps);
      context.group = context.dihedral->group;
      break;
    case GroupSpec::Kind::Symmetric:
      context.group = symmetric_group(spec.n, caps);
      break;
    case GroupSpec::Kind::Perm: {
      std::vector<Permutation> gens = parse_generator_list(spec.generators, spec.n);
      context.group = FiniteGroup::from_generators(spec.n, gens, caps);
      break;
    }
  }
  return context;
}

GSet build_gset(const GSetSpec& spec, const GroupContext& context, const Caps& caps) {
  switch (spec.kind) {
    case GSetSpec::Kind::Natural:
      return natural_gset(context.group);
    case GSetSpec::Kind::Ngon:
      if (context.spec.kind != GroupSpec::Kind::Cyclic)
        throw std::invalid_argument("g-set ngon needs a cyclic group (use ngon-dihedral for dihedral)");
      return natural_gset(context.group);  // the cyclic realization acts on the vertices already
    case GSetSpec::Kind::NgonDihedral:
      if (!context.dihedral)
        throw std::invalid_argument("g-set ngon-dihedral needs a dihedral group");
      return ngon_vertices_dihedral(*context.dihedral);
    case GSetSpec::Kind::Prism:
      if (!context.dihedral) throw std::invalid_argument("g-set prism needs a dihedral group");
      return prism_vertices(*context.dihedral);
    case GSetSpec::Kind::Coset: {
      std::vector<Permutation> gens =
          parse_generator_list(spec.subgroup_generators, context.group->degree());
      std::vector<int> indices;
      for (const auto& g : gens) {
        int idx = context.group->index_of(g);
        if (idx < 0)
          throw std::invalid_argument("coset spec: " + g.cycle_string() +
                                      " is not an element of the group");
        indices.push_back(idx);
      }
      return coset_space(context.group, subgroup_closure(*context.group, indices));
    }
    case GSetSpec::Kind::Product:
      return product(build_gset(spec.children[0], context, caps),
                     build_gset(spec.children[1], context, caps));
    case GSetSpec::Kind::Union:
      return disjoint_union(build_gset(spec.children[0], context, caps),
                            build_gset(spec.children[1], context, caps));
  }
  throw std::logic_error("build_gset: bad kind");
}

}  // namespace burnside
