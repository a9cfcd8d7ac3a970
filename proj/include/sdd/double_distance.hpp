#pragma once

// sigma_k double distance of a singular genome S and a duplicated genome D:
// 2n - (best k-score over the ambiguous breakpoint graph), dispatched to the closed
// formula (k = 2), the greedy solver (k = 4), the sigma_6 solver, or the exhaustive oracle.

#include <optional>
#include <string_view>

#include "sdd/ambiguous_graph.hpp"
#include "sdd/sigma4.hpp"
#include "sdd/sigma6.hpp"

namespace sdd {

enum class DistanceMethod : std::uint8_t { formula, sigma4, sigma6, oracle };

std::string_view to_string(DistanceMethod m);

struct DoubleDistanceOptions {
  /// Solve with the oracle. Required for k outside {2, 4, 6}.
  bool use_oracle = false;
  /// Additionally run the oracle and record its score next to the solver's.
  bool verify_with_oracle = false;
  std::size_t oracle_cap = 24;
  Sigma6Options sigma6;
};

struct DoubleDistanceResult {
  SigmaK k = SigmaK(2);
  std::size_t n_star = 0;
  DistanceMethod method = DistanceMethod::formula;
  HalfInt distance;
  Solution solution;
  KScore score;
  std::optional<KScore> oracle_score;  // set when verified or solved by the oracle
  std::size_t oracle_evaluated = 0;
  FixReport fixes;
  std::optional<Sigma4Stats> sigma4;
  std::optional<Sigma6Stats> sigma6;

  bool oracle_agrees() const { return oracle_score && oracle_score->value == score.value; }
};

/// d_bp double distance: 2n - |A(2S) & A(D)| - |T(2S) & T(D)| / 2 over multisets.
HalfInt breakpoint_double_distance(const Genome& s, const Genome& d);

/// Throws InputError for k outside {2, 4, 6} without the oracle, and ResourceLimitError when
/// the oracle cap is exceeded.
DoubleDistanceResult double_distance(const AmbiguousBreakpointGraph& g, SigmaK k,
                                     const DoubleDistanceOptions& options = {});

DoubleDistanceResult double_distance(const Genome& s, const Genome& d, SigmaK k,
                                     const DoubleDistanceOptions& options = {});

}  // namespace sdd
