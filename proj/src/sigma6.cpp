#include "sdd/sigma6.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "sdd/elimination.hpp"
#include "sdd/error.hpp"

namespace sdd {

std::string_view to_string(SquareClass c) {
  switch (c) {
    case SquareClass::a: return "a";
    case SquareClass::b: return "b";
    case SquareClass::c: return "c";
    case SquareClass::d: return "d";
    case SquareClass::e: return "e";
    case SquareClass::gone: return "gone";
  }
  return "?";
}

std::string_view to_string(ComponentType t) {
  switch (t) {
    case ComponentType::ambiguous: return "ambiguous";
    case ComponentType::resolved_cycle: return "resolved-cycle";
    case ComponentType::resolved_path: return "resolved-path";
  }
  return "?";
}

std::string_view to_string(DoubleLineKind k) {
  switch (k) {
    case DoubleLineKind::isolated: return "isolated";
    case DoubleLineKind::terminal: return "terminal";
    case DoubleLineKind::link_single_sided: return "single-sided link";
    case DoubleLineKind::link_alternate: return "alternate link";
    case DoubleLineKind::irregular: return "irregular";
  }
  return "?";
}

InvariantCounts& InvariantCounts::operator+=(const InvariantCounts& o) {
  d_edge_overload += o.d_edge_overload;
  s_edge_not_unique += o.s_edge_not_unique;
  large_bubbles += o.large_bubbles;
  non_plug_lines += o.non_plug_lines;
  straight_conflicts += o.straight_conflicts;
  return *this;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// D-edges of a player, each keyed by its smaller endpoint.
std::vector<Vertex> d_edge_keys(const Player& p) {
  std::vector<Vertex> keys;
  const Vertex* v = p.vertices.data();
  if (p.is_cycle()) {
    for (std::size_t i = 0; i + 1 < p.v_count; i += 2) keys.push_back(std::min(v[i], v[i + 1]));
  } else {
    keys.push_back(std::min(v[0], v[1]));
    if (p.kind == PlayerKind::path4) keys.push_back(std::min(v[2], v[3]));
  }
  return keys;
}

bool contains_edge(const Player& p, EdgeId e) { return std::find(p.edges_begin(), p.edges_end(), e) != p.edges_end(); }

// Every player touching an unfixed square, as a conjunction over those squares.
std::vector<Literal> literals_of(const Player& p, const Solution& tau,
                                 const std::unordered_map<std::int32_t, std::int32_t>& var_of) {
  std::vector<Literal> lits;
  for (const EdgeId* e = p.edges_begin(); e != p.edges_end(); ++e) {
    const std::int32_t sq = edge_square(*e);
    if (tau.fixed(static_cast<std::size_t>(sq))) continue;
    lits.push_back(Literal{var_of.at(sq), static_cast<std::uint8_t>(edge_pair(*e))});
  }
  return lits;
}

}  // namespace

// ---------------------------------------------------------------------------
// Pruning

std::size_t PrunedGraph::ambiguous_count() const {
  return static_cast<std::size_t>(std::count_if(components.begin(), components.end(), [](const PrunedComponent& c) {
    return c.type == ComponentType::ambiguous;
  }));
}

PrunedGraph prune(const AmbiguousBreakpointGraph& g, Solution& tau) {
  PrunedGraph pg;
  const std::size_t a = g.square_count();
  pg.players = enumerate_players(g, available_edges(g, tau), 6);
  pg.preserved.assign(4 * a, 0);
  pg.preserved_d.assign(g.vertex_count(), 0);
  for (const auto& p : pg.players) {
    for (const EdgeId* e = p.edges_begin(); e != p.edges_end(); ++e) pg.preserved[static_cast<std::size_t>(*e)] = 1;
    for (Vertex key : d_edge_keys(p)) {
      pg.preserved_d[static_cast<std::size_t>(key)] = 1;
      pg.preserved_d[static_cast<std::size_t>(g.d_mate(key))] = 1;
    }
  }

  pg.square_class.resize(a);
  for (std::size_t i = 0; i < a; ++i) {
    const int straight = pg.preserved[4 * i] + pg.preserved[4 * i + 1];
    const int crossed = pg.preserved[4 * i + 2] + pg.preserved[4 * i + 3];
    SquareClass cls;
    switch (straight + crossed) {
      case 4: cls = SquareClass::a; break;
      case 3: cls = SquareClass::b; break;
      case 2: cls = straight == 1 ? SquareClass::c : SquareClass::d; break;
      case 1: cls = SquareClass::e; break;
      default: cls = SquareClass::gone; break;
    }
    pg.square_class[i] = cls;
    if (tau.fixed(i)) continue;
    if (cls == SquareClass::d || cls == SquareClass::e) {
      tau.fix(i, straight > 0 ? 0 : 1);
      ++pg.auto_resolved;
    } else if (cls == SquareClass::gone) {
      tau.fix(i, 0);
      ++pg.auto_resolved;
    }
  }
  pg.zero_paths = g.zero_path_count();

  UnionFind uf(g.vertex_count());
  for (const auto& p : pg.players)
    for (std::size_t i = 1; i < p.v_count; ++i)
      uf.unite(static_cast<std::size_t>(p.vertices[0]), static_cast<std::size_t>(p.vertices[i]));
  std::vector<std::int32_t> component_of(g.vertex_count(), -1);
  for (std::size_t pi = 0; pi < pg.players.size(); ++pi) {
    const auto root = uf.find(static_cast<std::size_t>(pg.players[pi].vertices[0]));
    if (component_of[root] < 0) {
      component_of[root] = static_cast<std::int32_t>(pg.components.size());
      pg.components.emplace_back();
    }
    auto& comp = pg.components[static_cast<std::size_t>(component_of[root])];
    comp.players.push_back(static_cast<std::int32_t>(pi));
    const Player& p = pg.players[pi];
    for (const EdgeId* e = p.edges_begin(); e != p.edges_end(); ++e)
      if (!tau.fixed(static_cast<std::size_t>(edge_square(*e)))) comp.squares.push_back(edge_square(*e));
  }
  for (auto& comp : pg.components) {
    std::sort(comp.squares.begin(), comp.squares.end());
    comp.squares.erase(std::unique(comp.squares.begin(), comp.squares.end()), comp.squares.end());
    if (!comp.squares.empty()) continue;
    if (comp.players.size() != 1) throw InvariantViolation("resolved component holds several players");
    if (pg.players[static_cast<std::size_t>(comp.players[0])].is_cycle()) {
      comp.type = ComponentType::resolved_cycle;
      ++pg.resolved_cycles;
    } else {
      comp.type = ComponentType::resolved_path;
      ++pg.resolved_paths;
    }
  }
  return pg;
}

std::string PrunedGraph::to_dot(const AmbiguousBreakpointGraph& g, std::string_view name) const {
  std::ostringstream out;
  out << "graph " << name << " {\n  node [shape=circle, style=filled];\n";
  std::vector<std::uint8_t> shown(g.vertex_count(), 0);
  for (std::size_t e = 0; e < preserved.size(); ++e) {
    if (!preserved[e]) continue;
    for (Vertex v : g.endpoints(static_cast<EdgeId>(e))) shown[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (preserved_d[v]) shown[v] = 1;
    if (g.is_d_telomere(static_cast<Vertex>(v)) && g.is_s_telomere(static_cast<Vertex>(v))) shown[v] = 1;
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!shown[v]) continue;
    const bool ts = g.is_s_telomere(static_cast<Vertex>(v));
    const bool td = g.is_d_telomere(static_cast<Vertex>(v));
    const char* fill = ts && td ? "gray" : ts ? "lightblue" : td ? "lightgray" : "white";
    out << "  v" << v << " [label=\"" << g.label(static_cast<Vertex>(v)) << "\", fillcolor=" << fill << "];\n";
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const Vertex m = g.d_mate(static_cast<Vertex>(v));
    if (m > static_cast<Vertex>(v) && preserved_d[v]) out << "  v" << v << " -- v" << m << " [color=black];\n";
  }
  for (std::size_t e = 0; e < preserved.size(); ++e) {
    if (!preserved[e]) continue;
    const auto [u, w] = g.endpoints(static_cast<EdgeId>(e));
    const auto sq = static_cast<std::size_t>(edge_square(static_cast<EdgeId>(e)));
    out << "  v" << u << " -- v" << w << " [color=red, square=" << sq
        << ", pair=" << (edge_pair(static_cast<EdgeId>(e)) == 0 ? "straight" : "crossed")
        << ", class=" << to_string(square_class[sq]) << "];\n";
  }
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Triplets

std::vector<Triplet> detect_and_fix_triplets(const AmbiguousBreakpointGraph& g, Solution& tau) {
  const PrunedGraph pg = prune(g, tau);
  return detect_and_fix_triplets(g, pg, tau);
}

std::vector<Triplet> detect_and_fix_triplets(const AmbiguousBreakpointGraph& g, const PrunedGraph& pg, Solution& tau) {
  std::vector<Triplet> found;
  for (const auto& comp : pg.components) {
    if (comp.type != ComponentType::ambiguous || comp.squares.size() != 3) continue;
    bool shape_ok = true;
    std::map<Vertex, int> d_use;
    for (auto pi : comp.players) {
      const Player& p = pg.players[static_cast<std::size_t>(pi)];
      if (p.kind != PlayerKind::cycle6) shape_ok = false;
      for (const EdgeId* e = p.edges_begin(); e != p.edges_end(); ++e)
        if (tau.fixed(static_cast<std::size_t>(edge_square(*e)))) shape_ok = false;
      for (Vertex key : d_edge_keys(p)) ++d_use[key];
    }
    if (!shape_ok) continue;
    int max_use = 0;
    for (auto [key, n] : d_use) max_use = std::max(max_use, n);
    if (max_use <= 2) continue;

    std::vector<Vertex> corners;
    for (auto sq : comp.squares)
      for (Vertex v : g.square(static_cast<std::size_t>(sq)).corners()) corners.push_back(v);
    int internal = 0;
    for (Vertex v : corners) {
      const Vertex m = g.d_mate(v);
      if (m > v && std::find(corners.begin(), corners.end(), m) != corners.end()) ++internal;
    }
    if (internal < 5) continue;

    int best = -1;
    unsigned best_mask = 0;
    for (unsigned mask = 0; mask < 8; ++mask) {
      int total = 0;
      for (auto pi : comp.players) {
        const Player& p = pg.players[static_cast<std::size_t>(pi)];
        bool induced = true;
        for (const EdgeId* e = p.edges_begin(); e != p.edges_end(); ++e) {
          const auto idx = std::find(comp.squares.begin(), comp.squares.end(), edge_square(*e)) - comp.squares.begin();
          if (static_cast<int>((mask >> idx) & 1) != edge_pair(*e)) induced = false;
        }
        if (induced) total += p.weight_halves();
      }
      if (total > best) {
        best = total;
        best_mask = mask;
      }
    }
    const TripletKind kind = internal == 6 ? TripletKind::saturated : TripletKind::unsaturated;
    if (best != (kind == TripletKind::saturated ? 4 : 2)) continue;
    Triplet t;
    t.kind = kind;
    t.score_halves = best;
    for (std::size_t k = 0; k < 3; ++k) {
      t.squares[k] = comp.squares[k];
      tau.fix(static_cast<std::size_t>(comp.squares[k]), static_cast<int>((best_mask >> k) & 1));
    }
    found.push_back(t);
  }
  return found;
}

// ---------------------------------------------------------------------------
// Straight solution

StraightSolution straight_solution(const AmbiguousBreakpointGraph& g, const PrunedGraph& pg,
                                   const std::vector<std::int32_t>& cycle_players, const Solution& tau) {
  StraightSolution out;
  std::map<EdgeId, std::vector<std::int32_t>> cycles_of_edge;
  for (auto pi : cycle_players) {
    const Player& p = pg.players[static_cast<std::size_t>(pi)];
    for (const EdgeId* e = p.edges_begin(); e != p.edges_end(); ++e) {
      if (tau.fixed(static_cast<std::size_t>(edge_square(*e)))) continue;
      cycles_of_edge[*e].push_back(pi);
      out.squares.push_back(edge_square(*e));
    }
  }
  std::sort(out.squares.begin(), out.squares.end());
  out.squares.erase(std::unique(out.squares.begin(), out.squares.end()), out.squares.end());
  auto index_of = [&](std::int32_t sq) {
    return static_cast<std::size_t>(std::lower_bound(out.squares.begin(), out.squares.end(), sq) - out.squares.begin());
  };

  std::vector<int> bit(out.squares.size(), -1);
  std::vector<std::size_t> queue;
  for (std::size_t start = 0; start < out.squares.size(); ++start) {
    if (bit[start] >= 0) continue;
    ++out.seeds;
    const std::int32_t sq = out.squares[start];
    int c = 0;
    for (EdgeId e = 4 * sq; e < 4 * sq + 4; ++e) {
      if (cycles_of_edge.count(e) != 0) {
        c = edge_pair(e);
        break;
      }
    }
    bit[start] = c;
    queue.assign(1, start);
    while (!queue.empty()) {
      const std::size_t qi = queue.back();
      queue.pop_back();
      const std::int32_t q = out.squares[qi];
      for (int p = 0; p < 2; ++p) {
        const EdgeId e = 4 * q + 2 * bit[qi] + p;
        const auto it = cycles_of_edge.find(e);
        if (it == cycles_of_edge.end()) continue;
        for (auto ci : it->second) {
          const Player& cyc = pg.players[static_cast<std::size_t>(ci)];
          for (const EdgeId* f = cyc.edges_begin(); f != cyc.edges_end(); ++f) {
            const std::int32_t fs = edge_square(*f);
            if (tau.fixed(static_cast<std::size_t>(fs))) continue;
            const std::size_t fi = index_of(fs);
            if (bit[fi] < 0) {
              bit[fi] = edge_pair(*f);
              queue.push_back(fi);
            } else if (bit[fi] != edge_pair(*f)) {
              ++out.conflicts;
            }
          }
        }
      }
    }
  }
  out.bits.assign(bit.begin(), bit.end());

  for (auto pi : cycle_players) {
    const Player& p = pg.players[static_cast<std::size_t>(pi)];
    bool in_straight = true;
    bool in_complement = true;
    for (const EdgeId* e = p.edges_begin(); e != p.edges_end(); ++e) {
      const std::int32_t sq = edge_square(*e);
      if (tau.fixed(static_cast<std::size_t>(sq))) continue;
      const int b = out.bits[index_of(sq)];
      if (b != edge_pair(*e)) in_straight = false;
      if ((b ^ 1) != edge_pair(*e)) in_complement = false;
    }
    if (in_straight) out.straight_halves += p.weight_halves();
    if (in_complement) out.complement_halves += p.weight_halves();
  }
  (void)g;
  return out;
}

// ---------------------------------------------------------------------------
// Intersection graph

IntersectionGraph build_intersection_graph(const AmbiguousBreakpointGraph& g, const PrunedGraph& pg,
                                           std::size_t component, const Solution& tau) {
  const PrunedComponent& comp = pg.components.at(component);
  IntersectionGraph ig;
  ig.players = comp.players;
  const auto m = static_cast<std::int32_t>(ig.players.size());
  auto player = [&](std::int32_t local) -> const Player& {
    return pg.players[static_cast<std::size_t>(ig.players[static_cast<std::size_t>(local)])];
  };

  // Conflicts: players sharing a vertex.
  std::vector<std::pair<Vertex, std::int32_t>> incidence;
  for (std::int32_t i = 0; i < m; ++i)
    for (const Vertex* v = player(i).vertices_begin(); v != player(i).vertices_end(); ++v) incidence.emplace_back(*v, i);
  std::sort(incidence.begin(), incidence.end());
  std::vector<std::pair<std::int32_t, std::int32_t>> pairs;
  for (std::size_t s = 0; s < incidence.size();) {
    std::size_t t = s;
    while (t < incidence.size() && incidence[t].first == incidence[s].first) ++t;
    for (std::size_t x = s; x < t; ++x)
      for (std::size_t y = x + 1; y < t; ++y) pairs.emplace_back(incidence[x].second, incidence[y].second);
    s = t;
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  ig.adjacency.assign(static_cast<std::size_t>(m), {});
  for (auto [a, b] : pairs) {
    const Player& pa = player(a);
    const Player& pb = player(b);
    std::uint8_t mult = 1;
    if (pa.is_cycle() && pb.is_cycle()) {
      for (const EdgeId* e = pa.edges_begin(); e != pa.edges_end(); ++e)
        if (contains_edge(pb, *e)) mult = 2;
    } else if (!pa.is_cycle() && !pb.is_cycle()) {
      if (pa.vertices[0] == pb.vertices[0] && pa.vertices[pa.v_count - 1] == pb.vertices[pb.v_count - 1]) mult = 2;
    }
    ig.edges.push_back(IntersectionEdge{a, b, mult});
    ig.adjacency[static_cast<std::size_t>(a)].push_back(b);
    ig.adjacency[static_cast<std::size_t>(b)].push_back(a);
  }

  // Degree bounds.
  std::map<Vertex, int> d_use;
  std::map<EdgeId, int> s_use;
  for (std::int32_t i = 0; i < m; ++i) {
    for (Vertex key : d_edge_keys(player(i))) ++d_use[key];
    for (const EdgeId* e = player(i).edges_begin(); e != player(i).edges_end(); ++e) ++s_use[*e];
  }
  for (auto [key, n] : d_use)
    if (n > 2) ++ig.violations.d_edge_overload;
  for (auto sq : comp.squares)
    for (EdgeId e = 4 * sq; e < 4 * sq + 4; ++e)
      if (pg.preserved[static_cast<std::size_t>(e)] && s_use[e] != 1) ++ig.violations.s_edge_not_unique;

  auto is_cycle = [&](std::int32_t i) { return player(i).is_cycle(); };
  // Propagation is only guaranteed to be consistent when no path competes for the squares.
  bool has_paths = false;
  for (std::int32_t i = 0; i < m; ++i) has_paths = has_paths || !is_cycle(i);

  // Cycle-bubbles: connected groups of cycles.
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(m), 0);
  for (std::int32_t s = 0; s < m; ++s) {
    if (seen[static_cast<std::size_t>(s)] || !is_cycle(s)) continue;
    CycleBubble bubble;
    std::vector<std::int32_t> stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      bubble.cycles.push_back(x);
      for (auto y : ig.adjacency[static_cast<std::size_t>(x)]) {
        if (seen[static_cast<std::size_t>(y)] || !is_cycle(y)) continue;
        seen[static_cast<std::size_t>(y)] = 1;
        stack.push_back(y);
      }
    }
    std::sort(bubble.cycles.begin(), bubble.cycles.end());
    std::size_t inner_edges = 0;
    std::size_t max_degree = 0;
    bool all_six = true;
    for (auto x : bubble.cycles) {
      std::size_t deg = 0;
      for (auto y : ig.adjacency[static_cast<std::size_t>(x)]) deg += is_cycle(y) ? 1 : 0;
      inner_edges += deg;
      max_degree = std::max(max_degree, deg);
      all_six = all_six && player(x).kind == PlayerKind::cycle6;
    }
    inner_edges /= 2;
    bubble.is_line = all_six && max_degree <= 2 && inner_edges + 1 == bubble.cycles.size();
    if (!bubble.is_line && bubble.cycles.size() > 8) ++ig.violations.large_bubbles;
    if (bubble.is_line && bubble.cycles.size() >= 4) {
      for (auto x : bubble.cycles) {
        std::size_t deg = 0;
        bool touches_path = false;
        for (auto y : ig.adjacency[static_cast<std::size_t>(x)]) {
          if (is_cycle(y)) ++deg;
          else touches_path = true;
        }
        if (deg == 2 && touches_path) ++ig.violations.non_plug_lines;
      }
    }
    std::vector<std::int32_t> global;
    for (auto x : bubble.cycles) global.push_back(ig.players[static_cast<std::size_t>(x)]);
    bubble.straight = straight_solution(g, pg, global, tau);
    if (!has_paths) ig.violations.straight_conflicts += bubble.straight.conflicts;
    bubble.balanced = bubble.straight.straight_halves == bubble.straight.complement_halves;
    ig.bubbles.push_back(std::move(bubble));
  }

  // Double-lines: 4-paths paired through a shared inner D-edge.
  std::vector<std::int32_t> partner(static_cast<std::size_t>(m), -1);
  {
    std::map<Vertex, std::vector<std::int32_t>> by_inner;
    for (std::int32_t i = 0; i < m; ++i)
      if (player(i).kind == PlayerKind::path4) by_inner[std::min(player(i).vertices[2], player(i).vertices[3])].push_back(i);
    for (const auto& [key, list] : by_inner) {
      if (list.size() != 2) continue;
      partner[static_cast<std::size_t>(list[0])] = list[1];
      partner[static_cast<std::size_t>(list[1])] = list[0];
    }
  }
  std::vector<int> color(static_cast<std::size_t>(m), -1);
  for (std::int32_t s = 0; s < m; ++s) {
    if (partner[static_cast<std::size_t>(s)] < 0 || color[static_cast<std::size_t>(s)] >= 0) continue;
    DoubleLine line;
    std::vector<std::int32_t> members;
    std::vector<std::int32_t> stack{s};
    color[static_cast<std::size_t>(s)] = 0;
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      members.push_back(x);
      for (auto y : ig.adjacency[static_cast<std::size_t>(x)]) {
        if (partner[static_cast<std::size_t>(y)] < 0) continue;
        const int want = color[static_cast<std::size_t>(x)] ^ (partner[static_cast<std::size_t>(x)] == y ? 1 : 0);
        if (color[static_cast<std::size_t>(y)] < 0) {
          color[static_cast<std::size_t>(y)] = want;
          stack.push_back(y);
        } else if (color[static_cast<std::size_t>(y)] != want) {
          line.twisted = true;
        }
      }
    }
    std::sort(members.begin(), members.end());
    auto is_member = [&](std::int32_t y) { return std::binary_search(members.begin(), members.end(), y); };

    // Order the upper rail.
    std::vector<std::int32_t> upper;
    for (auto x : members)
      if (color[static_cast<std::size_t>(x)] == 0) upper.push_back(x);
    auto rail_neighbors = [&](std::int32_t x) {
      std::vector<std::int32_t> out;
      for (auto y : ig.adjacency[static_cast<std::size_t>(x)])
        if (is_member(y) && y != partner[static_cast<std::size_t>(x)] &&
            color[static_cast<std::size_t>(y)] == color[static_cast<std::size_t>(x)])
          out.push_back(y);
      return out;
    };
    std::size_t rail_edges = 0;
    for (auto x : members) rail_edges += rail_neighbors(x).size();
    rail_edges /= 2;
    std::int32_t start = upper.front();
    for (auto x : upper)
      if (rail_neighbors(x).size() <= 1) {
        start = x;
        break;
      }
    std::vector<std::uint8_t> placed(static_cast<std::size_t>(m), 0);
    for (std::int32_t cur = start; cur >= 0;) {
      placed[static_cast<std::size_t>(cur)] = 1;
      line.upper.push_back(cur);
      std::int32_t next = -1;
      for (auto y : rail_neighbors(cur))
        if (!placed[static_cast<std::size_t>(y)]) {
          next = y;
          break;
        }
      cur = next;
    }
    for (auto x : upper)
      if (!placed[static_cast<std::size_t>(x)]) line.upper.push_back(x);
    for (auto x : line.upper) line.lower.push_back(partner[static_cast<std::size_t>(x)]);
    const std::size_t ell = line.upper.size();
    line.cyclic = line.twisted || (ell > 2 && rail_edges >= 2 * ell) || (ell == 2 && rail_edges > 2);

    // Outer connections.
    std::vector<std::int32_t> touched;
    for (auto x : members)
      for (auto y : ig.adjacency[static_cast<std::size_t>(x)])
        if (!is_member(y)) {
          touched.push_back(x);
          break;
        }
    auto position = [&](std::int32_t x) {
      const auto& rail = color[static_cast<std::size_t>(x)] == 0 ? line.upper : line.lower;
      return static_cast<std::size_t>(std::find(rail.begin(), rail.end(), x) - rail.begin());
    };
    auto at_end = [&](std::int32_t x) { return position(x) == 0 || position(x) + 1 == ell; };
    if (touched.empty()) {
      line.kind = DoubleLineKind::isolated;
    } else if (touched.size() == 1 && at_end(touched[0])) {
      line.kind = DoubleLineKind::terminal;
    } else if (touched.size() == 2 && at_end(touched[0]) && at_end(touched[1]) &&
               (ell == 1 || position(touched[0]) != position(touched[1]))) {
      const bool same_line = color[static_cast<std::size_t>(touched[0])] == color[static_cast<std::size_t>(touched[1])];
      line.kind = same_line ? DoubleLineKind::link_single_sided : DoubleLineKind::link_alternate;
      line.balanced = same_line ? ell % 2 == 0 : ell % 2 == 1;
    } else {
      line.kind = DoubleLineKind::irregular;
    }
    ig.double_lines.push_back(std::move(line));
  }

  // Unsaturated path-lines: remaining paths, grouped by intersection.
  std::fill(seen.begin(), seen.end(), 0);
  for (std::int32_t s = 0; s < m; ++s) {
    if (seen[static_cast<std::size_t>(s)] || is_cycle(s) || partner[static_cast<std::size_t>(s)] >= 0) continue;
    auto in_line = [&](std::int32_t y) { return !is_cycle(y) && partner[static_cast<std::size_t>(y)] < 0; };
    std::vector<std::int32_t> members;
    std::vector<std::int32_t> stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      members.push_back(x);
      for (auto y : ig.adjacency[static_cast<std::size_t>(x)]) {
        if (seen[static_cast<std::size_t>(y)] || !in_line(y)) continue;
        seen[static_cast<std::size_t>(y)] = 1;
        stack.push_back(y);
      }
    }
    PathLine line;
    std::size_t edges = 0;
    std::size_t max_degree = 0;
    std::int32_t end = -1;
    for (auto x : members) {
      std::size_t deg = 0;
      for (auto y : ig.adjacency[static_cast<std::size_t>(x)]) deg += in_line(y) ? 1 : 0;
      edges += deg;
      max_degree = std::max(max_degree, deg);
      if (deg <= 1 && end < 0) end = x;
    }
    edges /= 2;
    line.simple = max_degree <= 2 && edges <= members.size();
    line.cyclic = line.simple && edges == members.size() && members.size() > 1;
    if (line.simple) {
      std::int32_t cur = end >= 0 ? end : *std::min_element(members.begin(), members.end());
      std::vector<std::uint8_t> placed(static_cast<std::size_t>(m), 0);
      while (cur >= 0) {
        placed[static_cast<std::size_t>(cur)] = 1;
        line.paths.push_back(cur);
        std::int32_t next = -1;
        for (auto y : ig.adjacency[static_cast<std::size_t>(cur)])
          if (in_line(y) && !placed[static_cast<std::size_t>(y)]) {
            next = y;
            break;
          }
        cur = next;
      }
    } else {
      std::sort(members.begin(), members.end());
      line.paths = members;
    }
    ig.path_lines.push_back(std::move(line));
  }
  return ig;
}

// ---------------------------------------------------------------------------
// Component solving

ComponentSolution solve_component(const AmbiguousBreakpointGraph& g, const PrunedGraph& pg, std::size_t component,
                                  Solution& tau, std::size_t scope_cap) {
  const PrunedComponent& comp = pg.components.at(component);
  std::unordered_map<std::int32_t, std::int32_t> var_of;
  for (std::size_t i = 0; i < comp.squares.size(); ++i) var_of.emplace(comp.squares[i], static_cast<std::int32_t>(i));
  MaxSumProblem problem(comp.squares.size());
  for (auto pi : comp.players) {
    const Player& p = pg.players[static_cast<std::size_t>(pi)];
    problem.add_term(literals_of(p, tau, var_of), p.weight_halves());
  }
  const auto result = problem.solve(scope_cap);
  for (std::size_t i = 0; i < comp.squares.size(); ++i)
    tau.fix(static_cast<std::size_t>(comp.squares[i]), result.assignment[i]);
  (void)g;
  return ComponentSolution{result.value, result.max_scope};
}

// ---------------------------------------------------------------------------
// Driver

Sigma6Result solve_sigma6(const AmbiguousBreakpointGraph& g, const Sigma6Options& options) {
  Sigma6Result result;
  Sigma6Stats& st = result.stats;
  Solution tau(g.square_count());
  st.fixes = fix_two_cycles(g, tau);
  st.fixes.symmetric_squares = fix_symmetric_squares(g, tau).symmetric_squares;
  if (options.trace)
    *options.trace << "fix: " << st.fixes.two_cycles << " two-cycles over " << st.fixes.two_cycle_squares
                   << " squares, " << st.fixes.zero_paths << " zero-paths, " << st.fixes.symmetric_squares
                   << " symmetric squares\n";

  auto fixed_count = [&]() {
    std::size_t n = 0;
    for (std::size_t i = 0; i < tau.size(); ++i) n += tau.fixed(i) ? 1 : 0;
    return n;
  };
  const std::size_t fixed_before = fixed_count();
  PrunedGraph pg = prune(g, tau);
  for (const auto& t : detect_and_fix_triplets(g, pg, tau))
    ++(t.kind == TripletKind::saturated ? st.saturated_triplets : st.unsaturated_triplets);
  if (options.trace)
    *options.trace << "triplets: " << st.saturated_triplets << " saturated, " << st.unsaturated_triplets
                   << " unsaturated\n";
  // Fixed triplets turn into resolved components.
  if (st.saturated_triplets + st.unsaturated_triplets > 0) pg = prune(g, tau);
  st.class_resolved = fixed_count() - fixed_before - 3 * (st.saturated_triplets + st.unsaturated_triplets);
  st.preserved_edges = static_cast<std::size_t>(std::count(pg.preserved.begin(), pg.preserved.end(), 1));
  for (auto c : pg.square_class) ++st.square_classes[static_cast<std::size_t>(c)];
  st.resolved_cycles = pg.resolved_cycles;
  st.resolved_paths = pg.resolved_paths;
  st.ambiguous_components = pg.ambiguous_count();
  if (options.trace)
    *options.trace << "prune: " << st.preserved_edges << " of " << 4 * g.square_count() << " S-edges kept, "
                   << st.class_resolved << " squares resolved by class, " << pg.resolved_cycles << " resolved cycles, "
                   << pg.resolved_paths + pg.zero_paths << " resolved paths, " << st.ambiguous_components
                   << " ambiguous components\n";

  HalfInt total = pg.resolved_score();
  for (std::size_t ci = 0; ci < pg.components.size(); ++ci) {
    if (pg.components[ci].type != ComponentType::ambiguous) continue;
    const IntersectionGraph ig = build_intersection_graph(g, pg, ci, tau);
    st.violations += ig.violations;
    st.bubbles += ig.bubbles.size();
    for (const auto& b : ig.bubbles) {
      st.cycle_lines += b.is_line ? 1 : 0;
      st.unbalanced_bubbles += b.balanced ? 0 : 1;
    }
    st.double_lines += ig.double_lines.size();
    st.path_lines += ig.path_lines.size();
    const ComponentSolution cs = solve_component(g, pg, ci, tau, options.scope_cap);
    st.max_scope = std::max(st.max_scope, cs.max_scope);
    total += HalfInt::from_halves(cs.score_halves);
    if (options.trace)
      *options.trace << "component " << ci << ": " << pg.components[ci].squares.size() << " squares, "
                     << ig.players.size() << " players, " << ig.bubbles.size() << " bubbles, "
                     << ig.double_lines.size() << " double-lines, " << ig.path_lines.size()
                     << " path-lines, score " << HalfInt::from_halves(cs.score_halves) << "\n";
  }
  st.formula_score = total;

  if (options.strict_invariants && st.violations.total() > 0)
    throw InvariantViolation("structural bounds violated: " + std::to_string(st.violations.d_edge_overload) +
                             " overloaded D-edges, " + std::to_string(st.violations.s_edge_not_unique) +
                             " shared S-edges, " + std::to_string(st.violations.large_bubbles) + " large bubbles, " +
                             std::to_string(st.violations.non_plug_lines) + " non-plug lines, " +
                             std::to_string(st.violations.straight_conflicts) + " straight conflicts");

  result.score = score(g, tau, SigmaK(6));
  if (result.score.value != total)
    throw InvariantViolation("induced 6-score " + result.score.value.to_string() + " differs from the component sum " +
                             total.to_string());
  result.solution = std::move(tau);
  if (options.trace) *options.trace << "sigma6: score " << result.score.value << "\n";
  return result;
}

}  // namespace sdd
