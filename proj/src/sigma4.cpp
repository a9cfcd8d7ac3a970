#include "sdd/sigma4.hpp"

#include "sdd/error.hpp"

namespace sdd {

FixReport fix_two_cycles(const AmbiguousBreakpointGraph& g, Solution& tau) {
  FixReport report;
  report.zero_paths = g.zero_path_count();
  for (Vertex u = 0; u < static_cast<Vertex>(g.vertex_count()); ++u) {
    const Vertex w = g.d_mate(u);
    if (w <= u) continue;
    const std::int32_t i = g.vertex_square(u);
    if (i < 0 || g.vertex_square(w) != i || (u >> 1) == (w >> 1)) continue;
    const int bit = (u & 1) ^ (w & 1);
    const auto sq = static_cast<std::size_t>(i);
    if (tau.fixed(sq)) {
      if (tau.choice(sq) != bit) throw InvariantViolation("contradictory 2-cycle fixes on square " + std::to_string(i));
    } else {
      tau.fix(sq, bit);
      ++report.two_cycle_squares;
    }
    ++report.two_cycles;
  }
  return report;
}

SymmetricShape symmetric_shape(const AmbiguousBreakpointGraph& g, std::size_t square) {
  const auto corners = g.square(square).corners();
  for (int side = 0; side < 2; ++side) {
    const Vertex a = corners[static_cast<std::size_t>(2 * side)];
    const Vertex b = corners[static_cast<std::size_t>(2 * side + 1)];
    if (g.d_mate(a) == b) return SymmetricShape::paralogous_d_edge;
  }
  for (int side = 0; side < 2; ++side) {
    const Vertex a = corners[static_cast<std::size_t>(2 * side)];
    const Vertex b = corners[static_cast<std::size_t>(2 * side + 1)];
    if (g.is_d_telomere(a) && g.is_d_telomere(b)) return SymmetricShape::paralogous_d_telomeres;
  }
  for (int side = 0; side < 2; ++side) {
    const Vertex ma = g.d_mate(corners[static_cast<std::size_t>(2 * side)]);
    const Vertex mb = g.d_mate(corners[static_cast<std::size_t>(2 * side + 1)]);
    if (ma >= 0 && mb >= 0 && g.is_s_telomere(ma) && g.is_s_telomere(mb))
      return SymmetricShape::paralogous_s_telomere_links;
  }
  return SymmetricShape::none;
}

FixReport fix_symmetric_squares(const AmbiguousBreakpointGraph& g, Solution& tau) {
  FixReport report;
  for (std::size_t i = 0; i < g.square_count(); ++i) {
    if (tau.fixed(i) || symmetric_shape(g, i) == SymmetricShape::none) continue;
    tau.fix(i, 0);
    ++report.symmetric_squares;
  }
  return report;
}

namespace {

bool available(const Solution& tau, std::int32_t square, int c) {
  const auto sq = static_cast<std::size_t>(square);
  return !tau.fixed(sq) || tau.choice(sq) == c;
}

}  // namespace

Sigma4Result solve_sigma4(const AmbiguousBreakpointGraph& g) {
  Sigma4Result result;
  Solution tau(g.square_count());
  result.stats.fixes = fix_two_cycles(g, tau);
  result.stats.fixes.symmetric_squares = fix_symmetric_squares(g, tau).symmetric_squares;

  for (std::size_t i = 0; i < g.square_count(); ++i) {
    if (tau.fixed(i)) continue;
    const auto corners = g.square(i).corners();
    const auto sq = static_cast<std::int32_t>(i);
    bool done = false;

    // A valid 2-path: D-telomere x, S-edge x-w, D-edge from w to an S-telomere.
    for (Vertex x : corners) {
      if (done || !g.is_d_telomere(x)) continue;
      for (int c = 0; c < 2 && !done; ++c) {
        const Vertex m = g.d_mate(g.s_neighbor(x, c));
        if (m >= 0 && g.is_s_telomere(m)) {
          tau.fix(i, c);
          ++result.stats.two_paths;
          done = true;
        }
      }
    }

    // A valid 4-cycle: v -S- w -D- x -S- y -D- v, with the S-edge at v in this square.
    for (Vertex v : corners) {
      if (done) break;
      const Vertex back = g.d_mate(v);
      if (back < 0) continue;
      for (int c = 0; c < 2 && !done; ++c) {
        const Vertex w = g.s_neighbor(v, c);
        const Vertex x = g.d_mate(w);
        if (x < 0 || g.is_s_telomere(x) || x == v) continue;
        const std::int32_t j = g.vertex_square(x);
        for (int c2 = 0; c2 < 2 && !done; ++c2) {
          if (!available(tau, j, c2) || (j == sq && c2 != c)) continue;
          const Vertex y = g.s_neighbor(x, c2);
          if (y != back || y == w) continue;
          tau.fix(i, c);
          tau.fix(static_cast<std::size_t>(j), c2);
          ++result.stats.four_cycles;
          done = true;
        }
      }
    }
  }

  for (std::size_t i = 0; i < g.square_count(); ++i) {
    if (tau.fixed(i)) continue;
    tau.fix(i, 0);
    ++result.stats.leftover_squares;
  }
  result.score = score(g, tau, SigmaK(4));
  result.solution = std::move(tau);
  return result;
}

}  // namespace sdd
