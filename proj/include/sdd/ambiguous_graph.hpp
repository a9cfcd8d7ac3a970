#pragma once

// The ambiguous breakpoint graph of a singular genome S and a duplicated genome D:
// every adjacency of S becomes a square of four candidate S-edges, of which a
// solution keeps either the straight or the crossed pair.

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sdd/breakpoint_graph.hpp"
#include "sdd/genome.hpp"
#include "sdd/half_int.hpp"

namespace sdd {

// Vertex layout: extremity x = 2f+end of local family f, paralog p (a=0, b=1), vertex 4f+2end+p = 2x+p.
// The paralogous partner of v is v^1.
//
// S-edge layout: square i, pair c (0 straight, 1 crossed), paralog p: edge id 4i+2c+p with endpoints
// 2*gamma+p and 2*beta+(p^c), where gamma < beta are the two extremities of the i-th adjacency of S.
// The paralogous edge of e is e^1.

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

constexpr Vertex paralog_partner(Vertex v) { return v ^ 1; }
constexpr std::int32_t edge_square(EdgeId e) { return e >> 2; }
constexpr int edge_pair(EdgeId e) { return (e >> 1) & 1; }
constexpr EdgeId paralog_edge(EdgeId e) { return e ^ 1; }

struct Square {
  std::int32_t id = 0;
  std::int32_t gamma = 0;  // smaller extremity id
  std::int32_t beta = 0;   // larger extremity id

  /// gamma_a, gamma_b, beta_a, beta_b.
  std::array<Vertex, 4> corners() const { return {2 * gamma, 2 * gamma + 1, 2 * beta, 2 * beta + 1}; }
};

/// Choice bit per square (0 keeps the straight pair, 1 the crossed pair) plus a fixed mask.
class Solution {
 public:
  Solution() = default;
  explicit Solution(std::size_t squares) : choice_(squares, 0), fixed_(squares, 0) {}

  std::size_t size() const { return choice_.size(); }
  int choice(std::size_t i) const { return choice_[i]; }
  bool fixed(std::size_t i) const { return fixed_[i] != 0; }
  void set(std::size_t i, int bit) { choice_[i] = static_cast<std::uint8_t>(bit & 1); }
  void fix(std::size_t i, int bit) {
    set(i, bit);
    fixed_[i] = 1;
  }
  void unfix(std::size_t i) { fixed_[i] = 0; }
  /// Flips square i. Throws InputError if it is fixed.
  void switch_square(std::size_t i);

  /// Choice bits as a string, square 0 first.
  std::string bits() const;
  /// Builds an unfixed solution from the low bits of `mask` (square i = bit i).
  static Solution from_mask(std::size_t squares, std::uint64_t mask);

  friend bool operator==(const Solution&, const Solution&) = default;

 private:
  std::vector<std::uint8_t> choice_;
  std::vector<std::uint8_t> fixed_;
};

/// Returns a copy of tau with square i switched.
Solution switched(const Solution& tau, std::size_t i);

struct KScore {
  HalfInt value;
  Census census;
};

class AmbiguousBreakpointGraph {
 public:
  std::size_t family_count() const { return families_.size(); }
  std::size_t vertex_count() const { return d_mate_.size(); }
  std::size_t square_count() const { return squares_.size(); }
  const std::vector<Square>& squares() const { return squares_; }
  const Square& square(std::size_t i) const { return squares_[i]; }

  /// D-adjacency partner, or -1 for a D-telomere.
  Vertex d_mate(Vertex v) const { return d_mate_[static_cast<std::size_t>(v)]; }
  bool is_d_telomere(Vertex v) const { return d_mate(v) < 0; }
  /// Square owning v, or -1 for an S-telomere.
  std::int32_t vertex_square(Vertex v) const { return vertex_square_[static_cast<std::size_t>(v)]; }
  bool is_s_telomere(Vertex v) const { return vertex_square(v) < 0; }

  std::size_t d_edge_count() const;
  std::size_t d_telomere_count() const;
  std::size_t s_telomere_count() const;
  /// Vertices that are telomeres on both sides: the 0-paths of every induced graph.
  std::size_t zero_path_count() const;

  std::array<Vertex, 2> endpoints(EdgeId e) const;
  /// The S-edge of pair c at v (v must belong to a square).
  EdgeId edge_at(Vertex v, int c) const;
  /// The other endpoint of edge_at(v, c).
  Vertex s_neighbor(Vertex v, int c) const;

  Extremity extremity(Vertex v) const;
  std::string label(Vertex v) const;
  const std::shared_ptr<const FamilyTable>& family_table() const { return table_; }
  /// The singularized copy of D the graph was built from.
  const Genome& tagged_d() const { return tagged_d_; }

  /// Graphviz rendering; S-edges carry square/pair attributes and, given a solution, status.
  std::string to_dot(const Solution* tau = nullptr, std::string_view name = "ambiguous_breakpoint_graph") const;

  friend AmbiguousBreakpointGraph build_abg(const Genome& s, const Genome& d);

 private:
  std::vector<FamilyId> families_;
  std::shared_ptr<const FamilyTable> table_;
  std::vector<Square> squares_;
  std::vector<Vertex> d_mate_;
  std::vector<std::int32_t> vertex_square_;
  Genome tagged_d_;
};

/// s singular, d duplicated (paralogs untagged), same families. d is singularized internally.
AmbiguousBreakpointGraph build_abg(const Genome& s, const Genome& d);

/// S-side mate array of the breakpoint graph induced by tau.
std::vector<Vertex> induced_s_mates(const AmbiguousBreakpointGraph& g, const Solution& tau);
BreakpointGraph induce(const AmbiguousBreakpointGraph& g, const Solution& tau);
KScore score(const AmbiguousBreakpointGraph& g, const Solution& tau, SigmaK k);

/// Reusable scorer that avoids reallocating per evaluation. Not thread-safe.
class FastScorer {
 public:
  FastScorer(const AmbiguousBreakpointGraph& g, SigmaK k);
  /// k-score in halves for the solution whose square i takes bit i of mask.
  std::int64_t score_mask(std::uint64_t mask);
  std::int64_t score_solution(const Solution& tau);

 private:
  std::int64_t evaluate();

  const AmbiguousBreakpointGraph& g_;
  SigmaK k_;
  std::vector<Vertex> s_mate_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

struct OracleOptions {
  std::size_t cap = 24;
  /// Only solutions satisfying this predicate compete (when set).
  std::function<bool(const Solution&)> require;
};

struct OracleResult {
  Solution solution;
  KScore score;
  std::uint64_t evaluated = 0;
};

/// Exhaustive maximization over all 2^a solutions; ties go to the lowest mask.
/// Throws ResourceLimitError above the cap, InputError if no solution satisfies `require`.
OracleResult oracle_best(const AmbiguousBreakpointGraph& g, SigmaK k, const OracleOptions& options = {});

/// Square bits forced by the common-adjacency 2-cycles (square, bit) pairs.
std::vector<std::pair<std::int32_t, int>> two_cycle_requirements(const AmbiguousBreakpointGraph& g);

/// True when tau induces every 2-cycle formed by a D-edge parallel to an S-edge.
bool induces_all_two_cycles(const AmbiguousBreakpointGraph& g, const Solution& tau);

}  // namespace sdd
