// Benchmark: serial vs. OpenMP census enumeration on one problem instance.
// The two tallies are diffed cell by cell before any timing is reported.

#include <chrono>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "burnside/oracle.hpp"
#include "burnside/specparse.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace burnside;

namespace {

double run_timed(const SubgroupClassTable& classes, const GSet& x, long colors,
                 const OracleOptions& options, int repeats, ColoringCensus& out) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    out = coloring_census(classes, x, colors, options);
    auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"census kernel benchmark: serial reference vs. OpenMP driver"};
  std::string group = "dihedral:12";
  std::string gset = "ngon-dihedral";
  long colors = 3;
  int repeats = 3;
  long long cap = 100000000;
  app.add_option("--group", group, "group spec (default dihedral:12)");
  app.add_option("--gset", gset, "g-set spec (default ngon-dihedral)");
  app.add_option("--colors", colors, "number of colors (default 3)");
  app.add_option("--repeats", repeats, "timed repetitions, best-of (default 3)")
      ->check(CLI::PositiveNumber);
  app.add_option("--cap", cap, "enumeration budget for k^|X| (default 1e8)");
  CLI11_PARSE(app, argc, argv);

  try {
    GroupContext context = build_group(parse_group_spec(group));
    SubgroupClassTable classes = context.labeled_classes();
    GSet x = build_gset(parse_gset_spec(gset), context);
    Integer space = integer_pow(Integer(colors), static_cast<unsigned long>(x.size()));
    std::cout << "instance: " << group << " on " << gset << " (|G| = " << context.group->order()
              << ", |X| = " << x.size() << ", " << colors << "^" << x.size() << " = " << space
              << " assignments)\n";

    OracleOptions serial{cap, false};
    OracleOptions parallel{cap, true};
    ColoringCensus reference, candidate;
    double t_serial = run_timed(classes, x, colors, serial, repeats, reference);
    double t_parallel = run_timed(classes, x, colors, parallel, repeats, candidate);

    if (reference.tally != candidate.tally) {
      std::cout << "MISMATCH: parallel tallies differ from the serial reference\n";
      return 2;
    }
    std::cout << "tallies identical across " << classes.class_count() << " classes\n";
#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (built without OpenMP; both drivers run serially)\n";
#endif
    std::cout << "serial:   " << t_serial << " s\n";
    std::cout << "parallel: " << t_parallel << " s\n";
    std::cout << "speedup:  " << (t_parallel > 0 ? t_serial / t_parallel : 0.0) << "x\n";
  } catch (const std::exception& e) {
    std::cout << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
