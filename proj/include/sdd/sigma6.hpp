#pragma once

// sigma_6 disambiguation: pruning to the {6}-pruned graph, triplets, intersection graphs
// with their gadget decomposition, and exact per-component solving.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sdd/ambiguous_graph.hpp"
#include "sdd/players.hpp"
#include "sdd/sigma4.hpp"

namespace sdd {

// ---------------------------------------------------------------------------
// Pruning

/// Preserved part of a square: a = 4 edges, b = 3, c = 2 from distinct pairs,
/// d = 2 paralogous edges, e = 1 edge, gone = none. Only a, b, c stay ambiguous.
enum class SquareClass : std::uint8_t { a, b, c, d, e, gone };
enum class ComponentType : std::uint8_t { ambiguous, resolved_cycle, resolved_path };

std::string_view to_string(SquareClass c);
std::string_view to_string(ComponentType t);

struct PrunedComponent {
  ComponentType type = ComponentType::ambiguous;
  std::vector<std::int32_t> squares;  // {6}-squares, ascending
  std::vector<std::int32_t> players;  // indices into PrunedGraph::players, ascending
};

struct PrunedGraph {
  std::vector<std::uint8_t> preserved;    // per S-edge
  std::vector<std::uint8_t> preserved_d;  // per vertex: its D-edge lies in some player
  std::vector<SquareClass> square_class;
  std::vector<Player> players;
  std::vector<PrunedComponent> components;
  std::size_t zero_paths = 0;
  std::size_t resolved_cycles = 0;
  std::size_t resolved_paths = 0;  // 2- and 4-paths; 0-paths are counted separately
  std::size_t auto_resolved = 0;   // squares fixed because of their class

  /// |C| + |P|/2 over resolved components, with 0-paths in P.
  HalfInt resolved_score() const {
    return HalfInt::from_halves(static_cast<std::int64_t>(2 * resolved_cycles + resolved_paths + zero_paths));
  }
  std::size_t ambiguous_count() const;

  std::string to_dot(const AmbiguousBreakpointGraph& g, std::string_view name = "pruned_graph") const;
};

/// Removes every S-edge and D-edge that lies in no player (with fixed squares offering only
/// their chosen pair), fixes squares of classes d, e and gone, and splits the rest into
/// components. Expects the 2-cycle fixes to be applied.
PrunedGraph prune(const AmbiguousBreakpointGraph& g, Solution& tau);

// ---------------------------------------------------------------------------
// Triplets

enum class TripletKind : std::uint8_t { saturated, unsaturated };

struct Triplet {
  std::array<std::int32_t, 3> squares{};
  TripletKind kind = TripletKind::saturated;
  int score_halves = 0;
};

/// Finds ambiguous components made of exactly three {6}-squares where a D-edge lies in more
/// than two 6-cycles, fixes each to its best local resolution and returns them.
std::vector<Triplet> detect_and_fix_triplets(const AmbiguousBreakpointGraph& g, Solution& tau);
/// Same, on a graph already pruned under `tau`.
std::vector<Triplet> detect_and_fix_triplets(const AmbiguousBreakpointGraph& g, const PrunedGraph& pg, Solution& tau);

// ---------------------------------------------------------------------------
// Intersection graph

struct IntersectionEdge {
  std::int32_t a = 0;
  std::int32_t b = 0;
  /// 2 when two cycles share a DSD-path or two paths share both telomeres, else 1.
  std::uint8_t multiplicity = 1;
};

struct StraightSolution {
  std::vector<std::int32_t> squares;  // ascending
  std::vector<std::uint8_t> bits;     // tau_H, aligned with squares
  int straight_halves = 0;            // weight of the bubble's cycles induced by tau_H
  int complement_halves = 0;          // same for the complement
  std::size_t seeds = 0;              // propagation roots needed to reach every square
  std::size_t conflicts = 0;          // propagation contradictions (0 on valid input)
};

struct CycleBubble {
  std::vector<std::int32_t> cycles;  // local player indices
  bool is_line = false;
  bool balanced = false;
  StraightSolution straight;
};

enum class DoubleLineKind : std::uint8_t { isolated, terminal, link_single_sided, link_alternate, irregular };

std::string_view to_string(DoubleLineKind k);

struct DoubleLine {
  std::vector<std::int32_t> upper;  // local player indices, in line order
  std::vector<std::int32_t> lower;  // lower[i] shares its inner D-edge with upper[i]
  bool cyclic = false;
  bool twisted = false;
  DoubleLineKind kind = DoubleLineKind::isolated;
  bool balanced = false;  // meaningful for links
  std::size_t length() const { return upper.size(); }
};

struct PathLine {
  std::vector<std::int32_t> paths;  // local player indices; in line order when the line is simple
  bool cyclic = false;
  bool simple = true;  // a path or a cycle in the intersection graph
};

struct InvariantCounts {
  std::size_t d_edge_overload = 0;     // D-edges in more than two players
  std::size_t s_edge_not_unique = 0;   // {6}-square S-edges not in exactly one player
  std::size_t large_bubbles = 0;       // non-line bubbles with more than 8 cycles
  std::size_t non_plug_lines = 0;      // cycle-lines of length >= 4 touched away from their ends
  std::size_t straight_conflicts = 0;  // propagation contradictions in components without paths

  std::size_t total() const {
    return d_edge_overload + s_edge_not_unique + large_bubbles + non_plug_lines + straight_conflicts;
  }
  InvariantCounts& operator+=(const InvariantCounts& o);
};

struct IntersectionGraph {
  std::vector<std::int32_t> players;  // indices into PrunedGraph::players
  std::vector<IntersectionEdge> edges;
  std::vector<std::vector<std::int32_t>> adjacency;  // local indices
  std::vector<CycleBubble> bubbles;
  std::vector<DoubleLine> double_lines;
  std::vector<PathLine> path_lines;
  InvariantCounts violations;

  int weight_halves(const PrunedGraph& pg, std::int32_t local) const {
    return pg.players[static_cast<std::size_t>(players[static_cast<std::size_t>(local)])].weight_halves();
  }
};

IntersectionGraph build_intersection_graph(const AmbiguousBreakpointGraph& g, const PrunedGraph& pg,
                                           std::size_t component, const Solution& tau);

/// Propagates one S-edge choice through the squares of the given cycles, where each choice
/// forces its neighbours. Seeds at the lowest square with its lowest preserved edge.
StraightSolution straight_solution(const AmbiguousBreakpointGraph& g, const PrunedGraph& pg,
                                   const std::vector<std::int32_t>& cycle_players, const Solution& tau);

struct ComponentSolution {
  std::int64_t score_halves = 0;
  std::size_t max_scope = 0;
};

/// Maximum total weight of players a resolution of the component's {6}-squares can induce,
/// i.e. the maximum weight independent set of its intersection graph. Fixes those squares.
ComponentSolution solve_component(const AmbiguousBreakpointGraph& g, const PrunedGraph& pg, std::size_t component,
                                  Solution& tau, std::size_t scope_cap = 20);

// ---------------------------------------------------------------------------
// Driver

struct Sigma6Options {
  /// Throw InvariantViolation when a structural bound the analysis relies on fails.
  bool strict_invariants = true;
  std::size_t scope_cap = 20;
  /// One line per phase when set.
  std::ostream* trace = nullptr;
};

struct Sigma6Stats {
  FixReport fixes;
  std::size_t saturated_triplets = 0;
  std::size_t unsaturated_triplets = 0;
  std::size_t preserved_edges = 0;
  std::size_t class_resolved = 0;  // squares fixed because of their class (d, e, gone)
  std::array<std::size_t, 6> square_classes{};  // indexed by SquareClass
  std::size_t ambiguous_components = 0;
  std::size_t resolved_cycles = 0;
  std::size_t resolved_paths = 0;
  std::size_t bubbles = 0;
  std::size_t cycle_lines = 0;
  std::size_t unbalanced_bubbles = 0;
  std::size_t double_lines = 0;
  std::size_t path_lines = 0;
  std::size_t max_scope = 0;
  InvariantCounts violations;
  HalfInt formula_score;  // |C| + |P|/2 + sum of component scores
};

struct Sigma6Result {
  Solution solution;
  KScore score;
  Sigma6Stats stats;
};

Sigma6Result solve_sigma6(const AmbiguousBreakpointGraph& g, const Sigma6Options& options = {});

}  // namespace sdd
