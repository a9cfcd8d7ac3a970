#include "sdd/double_distance.hpp"

#include <algorithm>
#include <iterator>

#include "sdd/error.hpp"

namespace sdd {

std::string_view to_string(DistanceMethod m) {
  switch (m) {
    case DistanceMethod::formula: return "formula";
    case DistanceMethod::sigma4: return "sigma4";
    case DistanceMethod::sigma6: return "sigma6";
    case DistanceMethod::oracle: return "oracle";
  }
  return "?";
}

HalfInt breakpoint_double_distance(const Genome& s, const Genome& d) {
  const AdjacencySet doubled = double_adjacencies(s);
  const AdjacencySet dup = adjacencies_and_telomeres(align_families(d, s));
  std::vector<Adjacency> common_adj;
  std::set_intersection(doubled.adjacencies.begin(), doubled.adjacencies.end(), dup.adjacencies.begin(),
                        dup.adjacencies.end(), std::back_inserter(common_adj));
  std::vector<Extremity> common_tel;
  std::set_intersection(doubled.telomeres.begin(), doubled.telomeres.end(), dup.telomeres.begin(),
                        dup.telomeres.end(), std::back_inserter(common_tel));
  const auto n = static_cast<std::int64_t>(s.gene_count());
  return HalfInt::from_halves(4 * n - 2 * static_cast<std::int64_t>(common_adj.size()) -
                              static_cast<std::int64_t>(common_tel.size()));
}

namespace {

OracleResult run_oracle(const AmbiguousBreakpointGraph& g, SigmaK k, const DoubleDistanceOptions& options) {
  OracleOptions o;
  o.cap = options.oracle_cap;
  return oracle_best(g, k, o);
}

}  // namespace

DoubleDistanceResult double_distance(const AmbiguousBreakpointGraph& g, SigmaK k,
                                     const DoubleDistanceOptions& options) {
  const bool linear_time = !k.is_infinite() && (k.value() == 2 || k.value() == 4 || k.value() == 6);
  if (!linear_time && !options.use_oracle)
    throw InputError("k = " + k.to_string() + " has no linear-time solver; use the oracle");

  DoubleDistanceResult r;
  r.k = k;
  r.n_star = g.family_count();
  if (options.use_oracle) {
    OracleResult best = run_oracle(g, k, options);
    r.method = DistanceMethod::oracle;
    r.solution = std::move(best.solution);
    r.score = best.score;
    r.oracle_score = best.score;
    r.oracle_evaluated = best.evaluated;
  } else if (k.value() == 2) {
    // 2-cycles of common adjacencies and 0-paths are the only components that count.
    r.method = DistanceMethod::formula;
    r.solution = Solution(g.square_count());
    r.fixes = fix_two_cycles(g, r.solution);
    r.score = score(g, r.solution, k);
  } else if (k.value() == 4) {
    Sigma4Result s4 = solve_sigma4(g);
    r.method = DistanceMethod::sigma4;
    r.solution = std::move(s4.solution);
    r.score = s4.score;
    r.fixes = s4.stats.fixes;
    r.sigma4 = s4.stats;
  } else {
    Sigma6Result s6 = solve_sigma6(g, options.sigma6);
    r.method = DistanceMethod::sigma6;
    r.solution = std::move(s6.solution);
    r.score = s6.score;
    r.fixes = s6.stats.fixes;
    r.sigma6 = s6.stats;
  }
  if (options.verify_with_oracle && !r.oracle_score) {
    OracleResult best = run_oracle(g, k, options);
    r.oracle_score = best.score;
    r.oracle_evaluated = best.evaluated;
  }
  r.distance = HalfInt(static_cast<std::int64_t>(2 * r.n_star)) - r.score.value;
  return r;
}

DoubleDistanceResult double_distance(const Genome& s, const Genome& d, SigmaK k,
                                     const DoubleDistanceOptions& options) {
  const AmbiguousBreakpointGraph g = build_abg(s, d);
  DoubleDistanceResult r = double_distance(g, k, options);
  if (r.method == DistanceMethod::formula && r.distance != breakpoint_double_distance(s, d))
    throw InvariantViolation("breakpoint double distance " + r.distance.to_string() +
                             " differs from the adjacency formula " + breakpoint_double_distance(s, d).to_string());
  return r;
}

}  // namespace sdd
