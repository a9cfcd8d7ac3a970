#include "sdd/ambiguous_graph.hpp"

#include <algorithm>
#include <sstream>

#include "sdd/error.hpp"

namespace sdd {

void Solution::switch_square(std::size_t i) {
  if (fixed(i)) throw InputError("square " + std::to_string(i) + " is fixed and cannot be switched");
  choice_[i] ^= 1;
}

std::string Solution::bits() const {
  std::string s;
  s.reserve(choice_.size());
  for (auto c : choice_) s += c != 0 ? '1' : '0';
  return s;
}

Solution Solution::from_mask(std::size_t squares, std::uint64_t mask) {
  Solution tau(squares);
  for (std::size_t i = 0; i < squares; ++i) tau.set(i, static_cast<int>((mask >> i) & 1));
  return tau;
}

Solution switched(const Solution& tau, std::size_t i) {
  Solution out = tau;
  out.switch_square(i);
  return out;
}

// ---------------------------------------------------------------------------

std::size_t AmbiguousBreakpointGraph::d_edge_count() const {
  return static_cast<std::size_t>(std::count_if(d_mate_.begin(), d_mate_.end(), [](Vertex m) { return m >= 0; })) / 2;
}

std::size_t AmbiguousBreakpointGraph::d_telomere_count() const {
  return static_cast<std::size_t>(std::count(d_mate_.begin(), d_mate_.end(), -1));
}

std::size_t AmbiguousBreakpointGraph::s_telomere_count() const {
  return static_cast<std::size_t>(std::count(vertex_square_.begin(), vertex_square_.end(), -1));
}

std::size_t AmbiguousBreakpointGraph::zero_path_count() const {
  std::size_t n = 0;
  for (std::size_t v = 0; v < vertex_count(); ++v) n += d_mate_[v] < 0 && vertex_square_[v] < 0 ? 1 : 0;
  return n;
}

std::array<Vertex, 2> AmbiguousBreakpointGraph::endpoints(EdgeId e) const {
  const Square& q = squares_[static_cast<std::size_t>(edge_square(e))];
  const int c = edge_pair(e);
  const int p = e & 1;
  return {2 * q.gamma + p, 2 * q.beta + (p ^ c)};
}

EdgeId AmbiguousBreakpointGraph::edge_at(Vertex v, int c) const {
  const std::int32_t i = vertex_square(v);
  const Square& q = squares_[static_cast<std::size_t>(i)];
  const int side_bit = v & 1;
  const int p = (v >> 1) == q.gamma ? side_bit : side_bit ^ c;
  return 4 * i + 2 * c + p;
}

Vertex AmbiguousBreakpointGraph::s_neighbor(Vertex v, int c) const {
  const auto ends = endpoints(edge_at(v, c));
  return ends[0] == v ? ends[1] : ends[0];
}

Extremity AmbiguousBreakpointGraph::extremity(Vertex v) const {
  return Extremity{families_[static_cast<std::size_t>(v / 4)], static_cast<End>((v >> 1) & 1),
                   (v & 1) != 0 ? Paralog::b : Paralog::a};
}

std::string AmbiguousBreakpointGraph::label(Vertex v) const { return extremity_label(*table_, extremity(v)); }

std::string AmbiguousBreakpointGraph::to_dot(const Solution* tau, std::string_view name) const {
  std::ostringstream out;
  out << "graph " << name << " {\n  node [shape=circle, style=filled];\n";
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    const bool ts = vertex_square_[v] < 0;
    const bool td = d_mate_[v] < 0;
    const char* fill = ts && td ? "gray" : ts ? "lightblue" : td ? "lightgray" : "white";
    out << "  v" << v << " [label=\"" << label(static_cast<Vertex>(v)) << "\", fillcolor=" << fill << "];\n";
  }
  for (std::size_t v = 0; v < vertex_count(); ++v)
    if (d_mate_[v] > static_cast<Vertex>(v)) out << "  v" << v << " -- v" << d_mate_[v] << " [color=black];\n";
  for (std::size_t i = 0; i < square_count(); ++i) {
    for (int c = 0; c < 2; ++c) {
      for (int p = 0; p < 2; ++p) {
        const auto e = static_cast<EdgeId>(4 * i + 2 * c + p);
        const auto [u, w] = endpoints(e);
        out << "  v" << u << " -- v" << w << " [color=red, square=" << i << ", pair=" << (c == 0 ? "straight" : "crossed");
        if (tau != nullptr) {
          const bool chosen = tau->choice(i) == c;
          out << ", status=" << (chosen ? "chosen" : "masked") << ", fixed=" << (tau->fixed(i) ? "true" : "false");
          if (!chosen) out << ", style=dashed";
        }
        out << "];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

AmbiguousBreakpointGraph build_abg(const Genome& s, const Genome& d) {
  if (s.is_singularized() || d.is_singularized()) throw InputError("genomes must not carry paralog tags");
  if (classify(s) != GenomeClass::singular) throw InputError("first genome is not singular");
  const GenomeClass dc = classify(d);
  if (dc != GenomeClass::duplicated && dc != GenomeClass::doubled) throw InputError("second genome is not duplicated");
  const Genome aligned = align_families(d, s);

  AmbiguousBreakpointGraph g;
  g.table_ = s.family_table();
  const auto counts = s.family_counts();
  std::vector<std::int32_t> local(counts.size(), -1);
  for (std::size_t f = 0; f < counts.size(); ++f) {
    if (counts[f] == 0) continue;
    local[f] = static_cast<std::int32_t>(g.families_.size());
    g.families_.push_back(static_cast<FamilyId>(f));
  }
  const std::size_t n = g.families_.size();
  auto ext = [&](const Extremity& x) {
    return 2 * local[static_cast<std::size_t>(x.family)] + static_cast<std::int32_t>(x.end);
  };

  g.vertex_square_.assign(4 * n, -1);
  for (const auto& [x, y] : adjacencies_and_telomeres(s, false).adjacencies) {
    Square q;
    q.id = static_cast<std::int32_t>(g.squares_.size());
    q.gamma = std::min(ext(x), ext(y));
    q.beta = std::max(ext(x), ext(y));
    for (Vertex v : q.corners()) g.vertex_square_[static_cast<std::size_t>(v)] = q.id;
    g.squares_.push_back(q);
  }

  g.tagged_d_ = singularize(aligned);
  g.d_mate_.assign(4 * n, -1);
  auto vertex = [&](const Extremity& x) { return 2 * ext(x) + (x.paralog == Paralog::b ? 1 : 0); };
  for (const auto& [x, y] : adjacencies_and_telomeres(g.tagged_d_, false).adjacencies) {
    const Vertex u = vertex(x);
    const Vertex w = vertex(y);
    g.d_mate_[static_cast<std::size_t>(u)] = w;
    g.d_mate_[static_cast<std::size_t>(w)] = u;
  }
  return g;
}

std::vector<Vertex> induced_s_mates(const AmbiguousBreakpointGraph& g, const Solution& tau) {
  std::vector<Vertex> mate(g.vertex_count(), -1);
  for (std::size_t i = 0; i < g.square_count(); ++i) {
    for (int p = 0; p < 2; ++p) {
      const auto [u, w] = g.endpoints(static_cast<EdgeId>(4 * i + 2 * tau.choice(i) + p));
      mate[static_cast<std::size_t>(u)] = w;
      mate[static_cast<std::size_t>(w)] = u;
    }
  }
  return mate;
}

BreakpointGraph induce(const AmbiguousBreakpointGraph& g, const Solution& tau) {
  if (tau.size() != g.square_count()) throw InputError("solution size does not match the square count");
  std::vector<Vertex> d(g.vertex_count());
  for (std::size_t v = 0; v < d.size(); ++v) d[v] = g.d_mate(static_cast<Vertex>(v));
  std::vector<FamilyId> families;
  families.reserve(g.family_count());
  for (std::size_t f = 0; f < g.family_count(); ++f) families.push_back(g.extremity(static_cast<Vertex>(4 * f)).family);
  return BreakpointGraph({induced_s_mates(g, tau), std::move(d)}, std::move(families), g.family_table(), true);
}

KScore score(const AmbiguousBreakpointGraph& g, const Solution& tau, SigmaK k) {
  KScore out;
  out.census = induce(g, tau).census();
  out.value = out.census.score(k);
  return out;
}

// ---------------------------------------------------------------------------

FastScorer::FastScorer(const AmbiguousBreakpointGraph& g, SigmaK k)
    : g_(g), k_(k), s_mate_(g.vertex_count(), -1), stamp_(g.vertex_count(), 0) {}

std::int64_t FastScorer::score_mask(std::uint64_t mask) {
  for (std::size_t i = 0; i < g_.square_count(); ++i) {
    const int c = static_cast<int>((mask >> i) & 1);
    for (int p = 0; p < 2; ++p) {
      const auto [u, w] = g_.endpoints(static_cast<EdgeId>(4 * i + 2 * c + p));
      s_mate_[static_cast<std::size_t>(u)] = w;
      s_mate_[static_cast<std::size_t>(w)] = u;
    }
  }
  return evaluate();
}

std::int64_t FastScorer::score_solution(const Solution& tau) {
  s_mate_ = induced_s_mates(g_, tau);
  return evaluate();
}

std::int64_t FastScorer::evaluate() {
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  const std::size_t n = s_mate_.size();
  std::int64_t halves = 0;
  auto next = [&](Vertex v, int color) {
    return color == 0 ? s_mate_[static_cast<std::size_t>(v)] : g_.d_mate(v);
  };
  for (std::size_t start = 0; start < n; ++start) {
    if (stamp_[start] == epoch_) continue;
    const bool has0 = s_mate_[start] >= 0;
    const bool has1 = g_.d_mate(static_cast<Vertex>(start)) >= 0;
    if (has0 && has1) continue;
    stamp_[start] = epoch_;
    std::size_t length = 0;
    if (has0 || has1) {
      int color = has0 ? 0 : 1;
      auto cur = static_cast<Vertex>(start);
      while (true) {
        cur = next(cur, color);
        stamp_[static_cast<std::size_t>(cur)] = epoch_;
        ++length;
        color ^= 1;
        if (next(cur, color) < 0) break;
      }
    }
    if (k_.counts_path(length)) halves += 1;
  }
  for (std::size_t start = 0; start < n; ++start) {
    if (stamp_[start] == epoch_) continue;
    std::size_t length = 0;
    int color = 0;
    auto cur = static_cast<Vertex>(start);
    do {
      stamp_[static_cast<std::size_t>(cur)] = epoch_;
      cur = next(cur, color);
      ++length;
      color ^= 1;
    } while (static_cast<std::size_t>(cur) != start);
    if (k_.counts_cycle(length)) halves += 2;
  }
  return halves;
}

OracleResult oracle_best(const AmbiguousBreakpointGraph& g, SigmaK k, const OracleOptions& options) {
  const std::size_t a = g.square_count();
  if (a > options.cap || a >= 63)
    throw ResourceLimitError("oracle needs 2^" + std::to_string(a) + " evaluations, above the cap of 2^" +
                             std::to_string(options.cap));
  FastScorer scorer(g, k);
  std::int64_t best = -1;
  std::uint64_t best_mask = 0;
  OracleResult result;
  const std::uint64_t total = std::uint64_t{1} << a;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (options.require && !options.require(Solution::from_mask(a, mask))) continue;
    ++result.evaluated;
    const std::int64_t s = scorer.score_mask(mask);
    if (s > best) {
      best = s;
      best_mask = mask;
    }
  }
  if (best < 0) throw InputError("no solution satisfies the oracle constraint");
  result.solution = Solution::from_mask(a, best_mask);
  result.score = score(g, result.solution, k);
  return result;
}

std::vector<std::pair<std::int32_t, int>> two_cycle_requirements(const AmbiguousBreakpointGraph& g) {
  std::vector<std::pair<std::int32_t, int>> out;
  for (Vertex u = 0; u < static_cast<Vertex>(g.vertex_count()); ++u) {
    const Vertex w = g.d_mate(u);
    if (w <= u) continue;
    const std::int32_t i = g.vertex_square(u);
    if (i < 0 || g.vertex_square(w) != i || (u >> 1) == (w >> 1)) continue;
    out.emplace_back(i, (u & 1) ^ (w & 1));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool induces_all_two_cycles(const AmbiguousBreakpointGraph& g, const Solution& tau) {
  for (auto [i, bit] : two_cycle_requirements(g))
    if (tau.choice(static_cast<std::size_t>(i)) != bit) return false;
  return true;
}

}  // namespace sdd
