// Command-line front end: exact Burnside-ring tables, coloring series and
// identity checks over groups and G-sets given as spec strings.
//
// Exit codes: 0 success, 1 usage / malformed spec strings, 2 semantic errors
// (unknown elements, caps, oracle mismatches, failed identities).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "burnside/burnside_ring.hpp"
#include "burnside/colorings.hpp"
#include "burnside/numtheory.hpp"
#include "burnside/oracle.hpp"
#include "burnside/rational.hpp"
#include "burnside/series.hpp"
#include "burnside/specparse.hpp"

using nlohmann::json;
using namespace burnside;

namespace {

Caps caps_from_environment() {
  Caps caps;
  if (const char* raw = std::getenv("BURNSIDE_MAX_ORDER")) {
    try {
      long v = std::stol(raw);
      if (v < 1) throw std::invalid_argument("");
      caps.closure_cap = v;
    } catch (const std::exception&) {
      throw std::invalid_argument("BURNSIDE_MAX_ORDER must be a positive integer, got '" +
                                  std::string(raw) + "'");
    }
  }
  return caps;
}

// Totals can exceed 64 bits; JSON numbers stay numbers while they fit.
json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<int64_t>::min() && v <= std::numeric_limits<int64_t>::max())
    return static_cast<int64_t>(v);
  return v.str();
}

json series_json(const RationalSeries& s) {
  json out = json::array();
  for (const std::string& c : s.coeff_strings()) out.push_back(c);
  return out;
}

struct Problem {
  GroupContext context;
  SubgroupClassTable classes;
  TablesPtr tables;
  GSet gset;
};

Problem load_problem(const std::string& group_spec, const std::string& gset_spec,
                     const Caps& caps) {
  GroupContext context = build_group(parse_group_spec(group_spec), caps);
  SubgroupClassTable classes = context.labeled_classes(caps);
  TablesPtr tables = BurnsideTables::build(classes);
  GSet gset = build_gset(parse_gset_spec(gset_spec), context, caps);
  return Problem{std::move(context), tables->classes(), tables, std::move(gset)};
}

int resolve_class(const SubgroupClassTable& classes, const std::string& text) {
  bool numeric = !text.empty();
  for (size_t i = text[0] == '-' ? 1 : 0; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) numeric = false;
  if (numeric) {
    int idx = std::stoi(text);
    if (idx < 0 || idx >= classes.class_count())
      throw std::invalid_argument("subgroup class index " + text + " out of range (0.." +
                                  std::to_string(classes.class_count() - 1) + ")");
    return idx;
  }
  int idx = classes.class_by_label(text);
  if (idx < 0) throw std::invalid_argument("unknown subgroup class label '" + text + "'");
  return idx;
}

int run_marks(const std::string& group_spec, const std::string& format, const Caps& caps) {
  GroupContext context = build_group(parse_group_spec(group_spec), caps);
  SubgroupClassTable classes = context.labeled_classes(caps);
  TablesPtr tables = BurnsideTables::build(classes);
  int n = tables->class_count();
  if (format == "json") {
    json out;
    out["classes"] = tables->classes().labels();
    json marks = json::array();
    for (int v = 0; v < n; ++v) {
      json row = json::array();
      for (int w = 0; w < n; ++w) row.push_back(tables->marks()[v][w]);
      marks.push_back(row);
    }
    out["marks"] = marks;
    json inverse = json::array();
    for (int v = 0; v < n; ++v) {
      json row = json::array();
      for (int w = 0; w < n; ++w) row.push_back(rational_string(tables->inversion()[v][w]));
      inverse.push_back(row);
    }
    out["inverse"] = inverse;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "classes:";
  for (const std::string& l : tables->classes().labels()) std::cout << " " << l;
  std::cout << "\nmarks:\n";
  for (int v = 0; v < n; ++v) {
    std::cout << "[";
    for (int w = 0; w < n; ++w) std::cout << " " << tables->marks()[v][w];
    std::cout << " ]\n";
  }
  std::cout << "inverse:\n";
  for (int v = 0; v < n; ++v) {
    std::cout << "[";
    for (int w = 0; w < n; ++w) std::cout << " " << rational_string(tables->inversion()[v][w]);
    std::cout << " ]\n";
  }
  return 0;
}

int run_decompose(const std::string& group_spec, const std::string& gset_spec,
                  const std::string& format, const Caps& caps) {
  Problem p = load_problem(group_spec, gset_spec, caps);
  BurnsideElement e = p.tables->decompose(p.gset);
  if (format == "json") {
    json out;
    out["classes"] = p.classes.labels();
    out["coefficients"] = e.coeffs;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "classes:";
  for (const std::string& l : p.classes.labels()) std::cout << " " << l;
  std::cout << "\ncoefficients:";
  for (long long c : e.coeffs) std::cout << " " << c;
  std::cout << "\n";
  return 0;
}

int run_colorings(const std::string& group_spec, const std::string& gset_spec, long colors,
                  const std::string& degrees_text, const std::string& class_text,
                  bool series_flag, bool total_flag, long truncation, bool oracle,
                  const std::string& format, const Caps& caps) {
  Problem p = load_problem(group_spec, gset_spec, caps);
  DegreeSet degrees = parse_degree_set(degrees_text);
  ColoringProblem problem(p.gset, colors, degrees, truncation);
  int cls = resolve_class(p.classes, class_text);

  RationalSeries series = multiplicity_series(*p.tables, problem, cls);
  std::optional<Integer> total;
  try {
    total = multiplicity_total(*p.tables, problem, cls);
  } catch (const std::invalid_argument&) {
    // not a polynomial within the truncation; series output still stands
  }

  int status = 0;
  std::string oracle_message;
  if (oracle) {
    if (degrees.kind != DegreeSet::Kind::ZeroOne)
      throw std::invalid_argument("--oracle requires zeroone degrees");
    OracleOptions options;
    options.cap = caps.enumeration_cap;
    ColoringCensus census = coloring_census(p.classes, p.gset, colors, options);
    for (int c = 0; c < p.classes.class_count() && status == 0; ++c) {
      RationalSeries mu = multiplicity_series(*p.tables, problem, c);
      std::map<long, long long> expect;
      for (long d = 0; d <= mu.truncation(); ++d)
        if (mu.coeff(d) != 0) expect[d] = static_cast<long long>(to_integer(mu.coeff(d)));
      if (census.class_by_degree(c) != expect) {
        status = 2;
        oracle_message = "oracle mismatch at class " + p.classes.label(c);
      }
    }
    if (status == 0) oracle_message = "oracle agreement: ok";
  }

  if (format == "json") {
    json out;
    out["class"] = p.classes.label(cls);
    out["series"] = series_json(series);
    out["truncation"] = series.truncation();
    out["total"] = total ? integer_json(*total) : json();
    if (oracle) out["oracle"] = status == 0 ? "ok" : oracle_message;
    std::cout << out.dump(2) << "\n";
  } else {
    if (!series_flag && !total_flag) series_flag = true;
    if (series_flag) {
      std::cout << series.to_string();
      if (total) std::cout << " (total " << total->str() << ")";
      std::cout << "\n";
    }
    if (total_flag) {
      if (!total)
        throw std::invalid_argument("total is undefined: series is not a polynomial within the truncation");
      std::cout << total->str() << "\n";
    }
    if (oracle) std::cout << oracle_message << "\n";
  }
  if (status != 0) std::cerr << oracle_message << "\n";
  return status;
}

int run_sym_characters(const std::string& group_spec, const std::string& gset_spec,
                       const std::string& element_cycles, long max_degree, bool exterior,
                       const std::string& format, const Caps& caps) {
  Problem p = load_problem(group_spec, gset_spec, caps);
  const FiniteGroup& g = *p.context.group;
  Permutation perm = Permutation::from_cycles(g.degree(), element_cycles);
  int element = g.index_of(perm);
  if (element < 0)
    throw std::invalid_argument("element " + element_cycles + " is not in the group");
  RationalSeries series = exterior
                              ? exterior_character_series(p.gset, element, max_degree)
                              : symmetric_character_series(p.gset, element, max_degree);
  if (format == "json") {
    json out;
    out["element"] = perm.cycle_string();
    out["kind"] = exterior ? "exterior" : "symmetric";
    out["series"] = series_json(series);
    out["truncation"] = series.truncation();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << series.to_string() << "\n";
  }
  return 0;
}

int run_necklace(long colors, long beads, const std::string& format) {
  if (beads < 1) throw std::invalid_argument("necklace: beads must be >= 1");
  Rational m = necklace_poly(Rational(colors), beads);
  if (format == "json") {
    json out;
    out["colors"] = colors;
    out["beads"] = beads;
    out["count"] = is_integer(m) ? integer_json(to_integer(m)) : json(rational_string(m));
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "M(" << colors << "," << beads << ") = " << rational_string(m) << "\n";
  }
  return 0;
}

int report_identity(const IdentityReport& report, const std::string& name,
                    const std::string& format) {
  if (format == "json") {
    json rows = json::array();
    for (const auto& row : report.rows) {
      json r;
      r["class"] = row.label;
      r["lhs"] = integer_json(row.lhs);
      r["rhs"] = integer_json(row.rhs);
      r["ok"] = row.ok;
      rows.push_back(r);
    }
    json out;
    out["identity"] = name;
    out["rows"] = rows;
    out["ok"] = report.all_ok();
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& row : report.rows)
      std::cout << row.label << ": " << row.lhs.str() << (row.ok ? " == " : " != ")
                << row.rhs.str() << "\n";
    std::cout << (report.all_ok() ? "identity holds" : "identity FAILED") << "\n";
  }
  return report.all_ok() ? 0 : 2;
}

int run_verify_cyclotomic(long colors, long max_degree, const std::string& format) {
  // 1/(1 - k t) = prod_{n>=1} (1 - t^n)^(-M(k,n)) truncated at max_degree
  if (max_degree < 1) throw std::invalid_argument("verify: max degree must be >= 1");
  RationalSeries lhs = RationalSeries::constant(1, max_degree);
  for (long d = 0; d <= max_degree; ++d)
    lhs.set_coeff(d, rational_pow(Rational(colors), static_cast<unsigned long>(d)));
  RationalSeries rhs = RationalSeries::constant(1, max_degree);
  for (long n = 1; n <= max_degree; ++n) {
    Rational m = necklace_poly(Rational(colors), n);
    if (!is_integer(m)) throw std::logic_error("non-integer necklace count");
    RationalSeries factor = RationalSeries::constant(1, max_degree);
    factor.set_coeff(n, -1);
    rhs *= factor.pow(static_cast<unsigned long>(to_integer(m))).reciprocal();
  }
  bool ok = lhs == rhs;
  if (format == "json") {
    json out;
    out["identity"] = "cyclotomic";
    out["colors"] = colors;
    out["max_degree"] = max_degree;
    out["ok"] = ok;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (ok ? "identity holds" : "identity FAILED") << "\n";
  }
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Burnside-ring tables and coloring counts"};
  app.require_subcommand(1);

  std::string group_spec, gset_spec = "natural", format = "text";
  std::string degrees_text = "zeroone", class_text = "0", element_cycles = "()";
  std::string identity_name;
  long colors = 2, colors2 = 2, beads = 1, truncation = -1, max_degree = 12;
  int power = 2;
  bool series_flag = false, total_flag = false, oracle = false, exterior = false;

  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* marks = app.add_subcommand("marks", "Mark table and its exact inverse");
  marks->add_option("--group", group_spec, "Group spec")->required();
  add_format(marks);

  CLI::App* decompose = app.add_subcommand("decompose", "Transitive decomposition of a G-set");
  decompose->add_option("--group", group_spec, "Group spec")->required();
  decompose->add_option("--gset", gset_spec, "G-set spec");
  add_format(decompose);

  CLI::App* colorings = app.add_subcommand("colorings", "Coloring multiplicity series");
  colorings->add_option("--group", group_spec, "Group spec")->required();
  colorings->add_option("--gset", gset_spec, "G-set spec");
  colorings->add_option("--colors", colors, "Number of colors")->required();
  colorings->add_option("--degrees", degrees_text, "zeroone | full | set:N1,N2,...");
  colorings->add_option("--subgroup-class", class_text, "Class index or label");
  colorings->add_flag("--series", series_flag, "Print the multiplicity series");
  colorings->add_flag("--total", total_flag, "Print the total count");
  colorings->add_option("--truncation", truncation, "Series truncation degree");
  colorings->add_flag("--oracle", oracle, "Cross-check against brute-force enumeration");
  add_format(colorings);

  CLI::App* sym = app.add_subcommand("sym-characters", "Symmetric/exterior power characters");
  sym->add_option("--group", group_spec, "Group spec")->required();
  sym->add_option("--gset", gset_spec, "G-set spec");
  sym->add_option("--element", element_cycles, "Group element in cycle notation")->required();
  sym->add_option("--max-degree", max_degree, "Series truncation degree");
  sym->add_flag("--exterior", exterior, "Exterior powers instead of symmetric");
  add_format(sym);

  CLI::App* necklace = app.add_subcommand("necklace", "Necklace polynomial M(k, n)");
  necklace->add_option("--colors", colors, "Number of colors")->required();
  necklace->add_option("--beads", beads, "Necklace length")->required();
  add_format(necklace);

  CLI::App* verify = app.add_subcommand("verify", "Check a counting identity");
  verify->add_option("--identity", identity_name, "genem | genef | cyclotomic")
      ->required()
      ->check(CLI::IsMember({"genem", "genef", "cyclotomic"}));
  verify->add_option("--group", group_spec, "Group spec");
  verify->add_option("--gset", gset_spec, "G-set spec");
  verify->add_option("--colors", colors, "First palette size / base palette");
  verify->add_option("--colors2", colors2, "Second palette size (genem)");
  verify->add_option("--power", power, "Palette exponent (genef)");
  verify->add_option("--max-degree", max_degree, "Truncation degree (cyclotomic)");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion")
      return app.exit(e);
    std::cerr << e.what() << "\n\n" << app.help() << "\n";
    return 1;
  }

  try {
    Caps caps = caps_from_environment();
    if (marks->parsed()) return run_marks(group_spec, format, caps);
    if (decompose->parsed()) return run_decompose(group_spec, gset_spec, format, caps);
    if (colorings->parsed())
      return run_colorings(group_spec, gset_spec, colors, degrees_text, class_text, series_flag,
                           total_flag, truncation, oracle, format, caps);
    if (sym->parsed())
      return run_sym_characters(group_spec, gset_spec, element_cycles, max_degree, exterior,
                                format, caps);
    if (necklace->parsed()) return run_necklace(colors, beads, format);
    if (verify->parsed()) {
      if (identity_name == "cyclotomic") return run_verify_cyclotomic(colors, max_degree, format);
      if (group_spec.empty()) throw std::invalid_argument("verify: --group is required");
      Problem p = load_problem(group_spec, gset_spec, caps);
      if (identity_name == "genem")
        return report_identity(verify_product_identity(*p.tables, p.gset, colors, colors2),
                               "genem", format);
      return report_identity(verify_power_identity(*p.tables, p.gset, colors, power, caps),
                             "genef", format);
    }
    return 1;
  } catch (const spec_error& e) {
    std::cerr << "spec error: " << e.what() << "\n\n" << app.help() << "\n";
    return 1;
  } catch (const cap_exceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
