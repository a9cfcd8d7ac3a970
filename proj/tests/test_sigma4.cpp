#include <string>

#include "doctest.h"
#include "sdd/ambiguous_graph.hpp"
#include "sdd/genome.hpp"
#include "sdd/instance_gen.hpp"
#include "sdd/players.hpp"
#include "sdd/sigma4.hpp"
#include "helpers.hpp"

using namespace sdd;

using test::pair_of;
using test::random_instance;

TEST_CASE("figure-3 preprocessing and sigma4") {
  auto [s, d] = pair_of("[1 2 3]", "[1 2 -3 1][-3 2]");
  const auto g = build_abg(s, d);
  Solution tau(g.square_count());
  const FixReport r = fix_two_cycles(g, tau);
  CHECK(r.two_cycles == 1);
  CHECK(r.two_cycle_squares == 1);
  CHECK(r.zero_paths == 2);
  CHECK(tau.fixed(0));
  CHECK(tau.choice(0) == 0);
  CHECK_FALSE(tau.fixed(1));

  const auto res = solve_sigma4(g);
  CHECK(res.score.value == HalfInt::from_halves(5));
  CHECK(res.score.value == oracle_best(g, SigmaK(4)).score.value);
}

TEST_CASE("no common adjacency fixes nothing") {
  auto [s, d] = pair_of("[1 2]", "[1 -2][-2 1]");
  const auto g = build_abg(s, d);
  Solution tau(g.square_count());
  CHECK(fix_two_cycles(g, tau).two_cycle_squares == 0);
}

TEST_CASE("both paralogous copies of an adjacency give two 2-cycles from one fix") {
  auto [s, d] = pair_of("[1 2 3]", "[1 2][1 2][3][3]");
  const auto g = build_abg(s, d);
  Solution tau(g.square_count());
  const FixReport r = fix_two_cycles(g, tau);
  CHECK(r.two_cycles == 2);
  CHECK(r.two_cycle_squares == 1);
  OracleOptions keep;
  keep.require = [&](const Solution& t) { return induces_all_two_cycles(g, t); };
  CHECK(oracle_best(g, SigmaK(4), keep).score.value == oracle_best(g, SigmaK(4)).score.value);
  CHECK(oracle_best(g, SigmaK(6)).score.census.cycles.at(2) >= 2);
}

TEST_CASE("symmetric square shapes") {
  {
    // 2^h_a - 2^h_b joined in D: D-edge between paralogous corners.
    auto [s, d] = pair_of("[1 2 3]", "[1 2 -2 -1][3][3]");
    const auto g = build_abg(s, d);
    CHECK(symmetric_shape(g, 1) == SymmetricShape::paralogous_d_edge);
  }
  {
    // Both copies of 1^h are D-telomeres.
    auto [s, d] = pair_of("[1 2]", "[-2 1][-2 1]");
    const auto g = build_abg(s, d);
    CHECK(symmetric_shape(g, 0) == SymmetricShape::paralogous_d_telomeres);
  }
  {
    auto [s, d] = pair_of("[1 2]", "[1 2][1 2]");
    const auto g = build_abg(s, d);
    Solution tau(g.square_count());
    fix_two_cycles(g, tau);
    CHECK(fix_symmetric_squares(g, tau).symmetric_squares == 0);
  }
}

TEST_CASE("sigma4 matches the oracle on random instances") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 3000; ++seed) {
    const std::size_t n = 2 + seed % 7;
    const auto g = random_instance(seed, n, seed % 11);
    if (g.square_count() > 16) continue;
    const auto res = solve_sigma4(g);
    const auto best = oracle_best(g, SigmaK(4));
    INFO("seed " << seed);
    CHECK(res.score.value == best.score.value);
    CHECK(induces_all_two_cycles(g, res.solution));
    for (std::size_t i = 0; i < g.square_count(); ++i) CHECK(res.solution.fixed(i));
    ++checked;
  }
  CHECK(checked > 2000);
}

TEST_CASE("symmetric squares are score-neutral") {
  for (std::uint64_t seed = 1; seed <= 1500; ++seed) {
    const auto g = random_instance(seed, 2 + seed % 7, seed % 11);
    if (g.square_count() > 14) continue;
    Solution tau(g.square_count());
    fix_two_cycles(g, tau);
    for (std::size_t i = 0; i < g.square_count(); ++i) {
      if (tau.fixed(i) || symmetric_shape(g, i) == SymmetricShape::none) continue;
      for (int k : {4, 6}) {
        OracleOptions straight, crossed;
        straight.require = [&](const Solution& t) { return t.choice(i) == 0; };
        crossed.require = [&](const Solution& t) { return t.choice(i) == 1; };
        INFO("seed " << seed << " square " << i << " k " << k);
        CHECK(oracle_best(g, SigmaK(k), straight).score.value == oracle_best(g, SigmaK(k), crossed).score.value);
      }
    }
  }
}
