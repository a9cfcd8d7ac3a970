#include "sdd/players.hpp"

#include <algorithm>

namespace sdd {

std::string_view to_string(PlayerKind kind) {
  switch (kind) {
    case PlayerKind::cycle2: return "2-cycle";
    case PlayerKind::path2: return "2-path";
    case PlayerKind::cycle4: return "4-cycle";
    case PlayerKind::path4: return "4-path";
    case PlayerKind::cycle6: return "6-cycle";
  }
  return "?";
}

std::vector<std::uint8_t> available_edges(const AmbiguousBreakpointGraph& g, const Solution& tau) {
  std::vector<std::uint8_t> out(4 * g.square_count(), 1);
  for (std::size_t i = 0; i < g.square_count(); ++i) {
    if (!tau.fixed(i)) continue;
    const int other = tau.choice(i) ^ 1;
    out[4 * i + 2 * static_cast<std::size_t>(other)] = 0;
    out[4 * i + 2 * static_cast<std::size_t>(other) + 1] = 0;
  }
  return out;
}

namespace {

bool distinct(const Vertex* first, const Vertex* last) {
  for (const Vertex* a = first; a != last; ++a)
    for (const Vertex* b = a + 1; b != last; ++b)
      if (*a == *b) return false;
  return true;
}

bool all_compatible(const EdgeId* first, const EdgeId* last) {
  for (const EdgeId* a = first; a != last; ++a)
    for (const EdgeId* b = a + 1; b != last; ++b)
      if (!compatible(*a, *b)) return false;
  return true;
}

Player make_player(PlayerKind kind, std::initializer_list<EdgeId> edges, std::initializer_list<Vertex> vertices) {
  Player p;
  p.kind = kind;
  for (EdgeId e : edges) p.s_edges[p.s_count++] = e;
  for (Vertex v : vertices) p.vertices[p.v_count++] = v;
  return p;
}

bool valid(const Player& p) {
  return distinct(p.vertices_begin(), p.vertices_end()) && all_compatible(p.edges_begin(), p.edges_end());
}

}  // namespace

std::vector<Player> enumerate_players(const AmbiguousBreakpointGraph& g, const std::vector<std::uint8_t>& available,
                                      int k) {
  std::vector<Player> out;
  const auto n = static_cast<Vertex>(g.vertex_count());
  auto usable = [&](Vertex v, int c) -> EdgeId {
    if (g.is_s_telomere(v)) return -1;
    const EdgeId e = g.edge_at(v, c);
    return available[static_cast<std::size_t>(e)] != 0 ? e : -1;
  };

  // Cycles, each found from its smallest D-edge (u, v), u < v, walked u -> v first.
  for (Vertex u = 0; u < n; ++u) {
    const Vertex v = g.d_mate(u);
    if (v <= u) continue;
    for (int c1 = 0; c1 < 2; ++c1) {
      const EdgeId e1 = usable(v, c1);
      if (e1 < 0) continue;
      const Vertex w = g.s_neighbor(v, c1);
      if (w == u) {
        out.push_back(make_player(PlayerKind::cycle2, {e1}, {u, v}));
        continue;
      }
      const Vertex x = g.d_mate(w);
      if (x < 0 || std::min(w, x) < u) continue;
      for (int c2 = 0; c2 < 2; ++c2) {
        const EdgeId e2 = usable(x, c2);
        if (e2 < 0) continue;
        const Vertex y = g.s_neighbor(x, c2);
        if (y == u) {
          Player p = make_player(PlayerKind::cycle4, {e1, e2}, {u, v, w, x});
          if (valid(p)) out.push_back(p);
          continue;
        }
        if (k < 6) continue;
        const Vertex z = g.d_mate(y);
        if (z < 0 || std::min(y, z) < u) continue;
        for (int c3 = 0; c3 < 2; ++c3) {
          const EdgeId e3 = usable(z, c3);
          if (e3 < 0 || g.s_neighbor(z, c3) != u) continue;
          Player p = make_player(PlayerKind::cycle6, {e1, e2, e3}, {u, v, w, x, y, z});
          if (valid(p)) out.push_back(p);
        }
      }
    }
  }

  // Paths, each found from its S-telomere end.
  for (Vertex t = 0; t < n; ++t) {
    if (!g.is_s_telomere(t)) continue;
    const Vertex w = g.d_mate(t);
    if (w < 0 || g.is_s_telomere(w)) continue;
    for (int c1 = 0; c1 < 2; ++c1) {
      const EdgeId e1 = usable(w, c1);
      if (e1 < 0) continue;
      const Vertex x = g.s_neighbor(w, c1);
      const Vertex y = g.d_mate(x);
      if (y < 0) {
        out.push_back(make_player(PlayerKind::path2, {e1}, {t, w, x}));
        continue;
      }
      if (k < 6 || g.is_s_telomere(y)) continue;
      for (int c2 = 0; c2 < 2; ++c2) {
        const EdgeId e2 = usable(y, c2);
        if (e2 < 0) continue;
        const Vertex z = g.s_neighbor(y, c2);
        if (g.d_mate(z) >= 0) continue;
        Player p = make_player(PlayerKind::path4, {e1, e2}, {t, w, x, y, z});
        if (valid(p)) out.push_back(p);
      }
    }
  }
  return out;
}

bool induced_by(const Player& p, const Solution& tau) {
  for (const EdgeId* e = p.edges_begin(); e != p.edges_end(); ++e)
    if (tau.choice(static_cast<std::size_t>(edge_square(*e))) != edge_pair(*e)) return false;
  return true;
}

}  // namespace sdd
