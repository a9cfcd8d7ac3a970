#pragma once

// Preprocessing shared by the sigma_4 and sigma_6 solvers, and the greedy sigma_4 solver.

#include <cstddef>

#include "sdd/ambiguous_graph.hpp"

namespace sdd {

struct FixReport {
  std::size_t two_cycles = 0;        // common-adjacency 2-cycles induced
  std::size_t two_cycle_squares = 0;  // squares fixed to induce them
  std::size_t zero_paths = 0;
  std::size_t symmetric_squares = 0;
};

/// Fixes every square holding an S-edge parallel to a D-edge so that the 2-cycle is induced.
/// Throws InvariantViolation on contradictory requirements.
FixReport fix_two_cycles(const AmbiguousBreakpointGraph& g, Solution& tau);

/// Kind of symmetry that makes both resolutions of a square score-equal, if any.
enum class SymmetricShape { none, paralogous_d_edge, paralogous_d_telomeres, paralogous_s_telomere_links };

SymmetricShape symmetric_shape(const AmbiguousBreakpointGraph& g, std::size_t square);

/// Fixes every unfixed symmetric square to its straight pair.
FixReport fix_symmetric_squares(const AmbiguousBreakpointGraph& g, Solution& tau);

struct Sigma4Stats {
  FixReport fixes;
  std::size_t two_paths = 0;
  std::size_t four_cycles = 0;
  std::size_t leftover_squares = 0;
};

struct Sigma4Result {
  Solution solution;
  KScore score;
  Sigma4Stats stats;
};

/// Greedy optimal sigma_4 disambiguation. Squares are visited by id; within a square valid
/// 2-paths are tried before valid 4-cycles. Unconstrained squares end straight.
Sigma4Result solve_sigma4(const AmbiguousBreakpointGraph& g);

}  // namespace sdd
