#include "burnside/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "burnside/rational.hpp"

namespace burnside {

long long ColoringCensus::class_total(int cls) const {
  long long sum = 0;
  for (long long v : tally[static_cast<size_t>(cls)]) sum += v;
  return sum;
}

std::map<long, long long> ColoringCensus::class_by_degree(int cls) const {
  std::map<long, long long> out;
  const auto& row = tally[static_cast<size_t>(cls)];
  for (size_t d = 0; d < row.size(); ++d)
    if (row[d]) out[static_cast<long>(d)] = row[d];
  return out;
}

namespace {

struct CensusContext {
  const SubgroupClassTable* classes;
  const GSet* x;
  long k;
  int order;
  int size;
  std::vector<int> inverse_action;  // [g * size + p] = g^-1 . p
};

// Called for each assignment code; decodes nothing itself -- `digits` is
// the current base-k assignment, most significant digit first so that
// vector comparison is code comparison.
void process_assignment(const CensusContext& ctx, const std::vector<uint8_t>& digits,
                        std::vector<uint8_t>& image, Subgroup& stabilizer,
                        std::vector<std::vector<long long>>& tally) {
  stabilizer.members.clear();
  bool least = true;
  for (int g = 0; g < ctx.order && least; ++g) {
    // (g . f)(p) = f(g^-1 . p)
    const int* inv = ctx.inverse_action.data() + static_cast<size_t>(g) * static_cast<size_t>(ctx.size);
    bool equal = true;
    for (int p = 0; p < ctx.size; ++p) {
      uint8_t v = digits[static_cast<size_t>(inv[p])];
      image[static_cast<size_t>(p)] = v;
      if (equal && v != digits[static_cast<size_t>(p)]) equal = false;
    }
    if (equal) {
      stabilizer.members.push_back(g);
      continue;
    }
    if (image < digits) least = false;  // a smaller translate exists elsewhere
  }
  if (!least) return;
  long degree = 0;
  for (uint8_t v : digits)
    if (v) ++degree;
  int cls = ctx.classes->class_of(stabilizer);
  ++tally[static_cast<size_t>(cls)][static_cast<size_t>(degree)];
}

void census_range(const CensusContext& ctx, long long begin, long long end,
                  std::vector<std::vector<long long>>& tally) {
  std::vector<uint8_t> digits(static_cast<size_t>(ctx.size), 0);
  std::vector<uint8_t> image(static_cast<size_t>(ctx.size), 0);
  Subgroup stabilizer;
  // Decode `begin`, then count upward in base k (least significant digit at
  // the back).
  long long code = begin;
  for (int p = ctx.size - 1; p >= 0; --p) {
    digits[static_cast<size_t>(p)] = static_cast<uint8_t>(code % ctx.k);
    code /= ctx.k;
  }
  for (long long c = begin; c < end; ++c) {
    process_assignment(ctx, digits, image, stabilizer, tally);
    for (int p = ctx.size - 1; p >= 0; --p) {  // increment
      if (++digits[static_cast<size_t>(p)] < ctx.k) break;
      digits[static_cast<size_t>(p)] = 0;
    }
  }
}

}  // namespace

ColoringCensus coloring_census(const SubgroupClassTable& classes, const GSet& x, long colors,
                               const OracleOptions& options) {
  if (x.group() != classes.group())
    throw std::invalid_argument("coloring_census: class table belongs to another group");
  if (colors < 2 || colors > 255) throw std::invalid_argument("coloring_census: colors out of range");

  long long space = 1;
  for (int p = 0; p < x.size(); ++p) {
    if (space > options.cap / colors + 1) space = options.cap + 1;
    else space *= colors;
    if (space > options.cap)
      throw cap_exceeded("coloring_census: " + std::to_string(colors) + "^" +
                         std::to_string(x.size()) + " assignments exceed cap " +
                         std::to_string(options.cap));
  }

  CensusContext ctx;
  ctx.classes = &classes;
  ctx.x = &x;
  ctx.k = colors;
  ctx.order = x.group()->order();
  ctx.size = x.size();
  ctx.inverse_action.resize(static_cast<size_t>(ctx.order) * static_cast<size_t>(ctx.size));
  for (int g = 0; g < ctx.order; ++g) {
    int ginv = x.group()->inverse(g);
    for (int p = 0; p < ctx.size; ++p)
      ctx.inverse_action[static_cast<size_t>(g) * static_cast<size_t>(ctx.size) + static_cast<size_t>(p)] =
          x.act(ginv, p);
  }

  auto empty_tally = [&] {
    return std::vector<std::vector<long long>>(
        static_cast<size_t>(classes.class_count()),
        std::vector<long long>(static_cast<size_t>(x.size()) + 1, 0));
  };

  ColoringCensus census;
  census.tally = empty_tally();

#ifdef _OPENMP
  if (options.omp) {
    int threads = omp_get_max_threads();
    std::vector<std::vector<std::vector<long long>>> local(static_cast<size_t>(threads));
#pragma omp parallel num_threads(threads)
    {
      int tid = omp_get_thread_num();
      local[static_cast<size_t>(tid)] = empty_tally();
      long long chunk = (space + threads - 1) / threads;
      long long begin = std::min<long long>(space, tid * chunk);
      long long end = std::min<long long>(space, begin + chunk);
      census_range(ctx, begin, end, local[static_cast<size_t>(tid)]);
    }
    for (const auto& t : local)
      for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = 0; j < t[i].size(); ++j) census.tally[i][j] += t[i][j];
    return census;
  }
#endif
  census_range(ctx, 0, space, census.tally);
  return census;
}

std::map<long, long long> primitive_census(const SubgroupClassTable& classes, const GSet& x,
                                           long colors, const OracleOptions& options) {
  ColoringCensus census = coloring_census(classes, x, colors, options);
  return census.class_by_degree(classes.trivial_class());
}

BurnsideElement orbit_stabilizer_decompose(const SubgroupClassTable& classes, const GSet& x) {
  if (x.group() != classes.group())
    throw std::invalid_argument("orbit_stabilizer_decompose: class table belongs to another group");
  BurnsideElement out;
  out.coeffs.assign(static_cast<size_t>(classes.class_count()), 0);
  for (const auto& orbit : orbits(x, whole_group(*x.group())))
    ++out.coeffs[static_cast<size_t>(classes.class_of(point_stabilizer(x, orbit.front())))];
  return out;
}

GSet multiset_power(const GSet& x, int n, long long cap) {
  if (n < 0) throw std::invalid_argument("multiset_power: negative power");
  // All multiplicity vectors over |X| points summing to n, lex order.
  std::vector<std::vector<int>> points;
  std::vector<int> current(static_cast<size_t>(x.size()), 0);
  // Recursive enumeration without recursion: position walk.
  auto emit = [&](auto&& self, int pos, int remaining) -> void {
    if (static_cast<long long>(points.size()) > cap)
      throw cap_exceeded("multiset_power: more than " + std::to_string(cap) + " multisets");
    if (pos == x.size() - 1 || x.size() == 0) {
      if (x.size() > 0) current[static_cast<size_t>(pos)] = remaining;
      if (x.size() > 0 || remaining == 0) points.push_back(current);
      return;
    }
    for (int take = 0; take <= remaining; ++take) {
      current[static_cast<size_t>(pos)] = take;
      self(self, pos + 1, remaining - take);
    }
  };
  if (x.size() == 0) {
    if (n == 0) points.push_back({});
  } else {
    emit(emit, 0, n);
  }

  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < points.size(); ++i) index[points[i]] = static_cast<int>(i);

  int order = x.group()->order();
  std::vector<int> action(static_cast<size_t>(order) * points.size());
  std::vector<int> moved(static_cast<size_t>(x.size()));
  for (int g = 0; g < order; ++g) {
    int ginv = x.group()->inverse(g);
    for (size_t p = 0; p < points.size(); ++p) {
      // (g . m)(q) = m(g^-1 . q)
      for (int q = 0; q < x.size(); ++q)
        moved[static_cast<size_t>(q)] = points[p][static_cast<size_t>(x.act(ginv, q))];
      action[static_cast<size_t>(g) * points.size() + p] = index.at(moved);
    }
  }

  std::vector<std::string> labels;
  labels.reserve(points.size());
  for (const auto& m : points) {
    std::string l = "[";
    for (size_t q = 0; q < m.size(); ++q) {
      if (q) l += " ";
      l += std::to_string(m[q]);
    }
    l += "]";
    labels.push_back(std::move(l));
  }
  return GSet(x.group(), static_cast<int>(points.size()), std::move(action), std::move(labels));
}

}  // namespace burnside
