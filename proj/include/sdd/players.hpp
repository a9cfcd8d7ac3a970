#pragma once

// Players: valid cycles of length <= k and valid even paths of length <= k-2 that a
// solution can induce as whole components. Enumerated by bounded local search.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sdd/ambiguous_graph.hpp"

namespace sdd {

enum class PlayerKind : std::uint8_t { cycle2, path2, cycle4, path4, cycle6 };

std::string_view to_string(PlayerKind kind);

struct Player {
  PlayerKind kind = PlayerKind::cycle2;
  /// S-edges in walk order.
  std::array<EdgeId, 3> s_edges{};
  std::uint8_t s_count = 0;
  /// Vertices in walk order. Cycles start at the smaller end of their smallest D-edge;
  /// paths start at their S-telomere and end at their D-telomere.
  std::array<Vertex, 6> vertices{};
  std::uint8_t v_count = 0;

  bool is_cycle() const { return kind == PlayerKind::cycle2 || kind == PlayerKind::cycle4 || kind == PlayerKind::cycle6; }
  /// Number of edges.
  std::size_t length() const { return is_cycle() ? v_count : static_cast<std::size_t>(v_count) - 1; }
  /// Contribution to the k-score in halves: 2 for a cycle, 1 for a path.
  int weight_halves() const { return is_cycle() ? 2 : 1; }

  const EdgeId* edges_begin() const { return s_edges.data(); }
  const EdgeId* edges_end() const { return s_edges.data() + s_count; }
  const Vertex* vertices_begin() const { return vertices.data(); }
  const Vertex* vertices_end() const { return vertices.data() + v_count; }
};

/// Two S-edges may coexist in a solution unless they are in the same square and in different pairs.
inline bool compatible(EdgeId e, EdgeId f) { return edge_square(e) != edge_square(f) || edge_pair(e) == edge_pair(f); }

/// Per S-edge availability (size 4a). Fixed squares offer only their chosen pair.
std::vector<std::uint8_t> available_edges(const AmbiguousBreakpointGraph& g, const Solution& tau);

/// Every valid player with cycles of length <= k and paths of length 2..k-2, using only
/// available S-edges. k is 4 or 6. Each player is reported once; 0-paths are not players here.
std::vector<Player> enumerate_players(const AmbiguousBreakpointGraph& g, const std::vector<std::uint8_t>& available,
                                      int k);

/// True when tau keeps every S-edge of p.
bool induced_by(const Player& p, const Solution& tau);

}  // namespace sdd
