#include <algorithm>
#include <random>
#include <string>

#include "doctest.h"
#include "sdd/breakpoint_graph.hpp"
#include "sdd/error.hpp"
#include "sdd/genome.hpp"

using namespace sdd;

namespace {

// Both genomes are parsed from one file so they share a family table.
std::pair<Genome, Genome> pair_of(const std::string& a, const std::string& b) {
  auto file = parse_genome_file(">A\n" + a + "\n>B\n" + b + "\n");
  return {file[0].genome, file[1].genome};
}

std::string random_singular_text(std::mt19937& rng, int n) {
  std::vector<int> genes(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) genes[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(genes.begin(), genes.end(), rng);
  std::string text;
  std::size_t pos = 0;
  while (pos < genes.size()) {
    const std::size_t len = 1 + rng() % std::min<std::size_t>(genes.size() - pos, 4);
    const bool circ = rng() % 2 == 0;
    text += circ ? "(" : "[";
    for (std::size_t i = 0; i < len; ++i) text += (rng() % 2 ? " -" : " ") + std::to_string(genes[pos + i]);
    text += circ ? ")" : "]";
    pos += len;
  }
  return text;
}

}  // namespace

TEST_CASE("SigmaK validation") {
  CHECK(SigmaK(2).value() == 2);
  CHECK(SigmaK::parse("inf").is_infinite());
  CHECK(SigmaK::parse("6").value() == 6);
  CHECK_THROWS_AS(SigmaK(3), InputError);
  CHECK_THROWS_AS(SigmaK(0), InputError);
  CHECK_THROWS_AS(SigmaK::parse("x"), InputError);
}

TEST_CASE("figure-2 pair") {
  auto [s1, s2] = pair_of("(1 2)[3 -4]", "(1 -3 2)[4]");
  const auto bg = build_bg(s1, s2);
  CHECK(bg.vertex_count() == 8);
  CHECK(bg.edge_count(0) + bg.edge_count(1) == 6);  // the 2-cycle is a pair of parallel edges
  const Census c = bg.census();
  CHECK(c.cycles == std::map<std::size_t, std::size_t>{{2, 1}});
  CHECK(c.paths == std::map<std::size_t, std::size_t>{{0, 1}, {4, 1}});
  CHECK(c.c_total == 1);
  CHECK(c.p_even_total == 2);
  CHECK(distance(c, 4, SigmaK(2)) == HalfInt::from_halves(5));
  CHECK(distance(c, 4, SigmaK::infinity()) == HalfInt(2));
  CHECK(distance(c, 4, SigmaK(4)) == HalfInt::from_halves(5));
  CHECK(distance(c, 4, SigmaK(6)) == HalfInt(2));
}

TEST_CASE("trivial censuses") {
  auto [a, b] = pair_of("[1 2]", "[1 2]");
  Census c = build_bg(a, b).census();
  CHECK(c.cycles == std::map<std::size_t, std::size_t>{{2, 1}});
  CHECK(c.paths == std::map<std::size_t, std::size_t>{{0, 2}});

  auto [x, y] = pair_of("(1)", "(1)");
  c = build_bg(x, y).census();
  CHECK(c.cycles == std::map<std::size_t, std::size_t>{{2, 1}});
  CHECK(c.paths.empty());
}

TEST_CASE("non-canonical pairs are rejected") {
  auto [a, b] = pair_of("[1 2]", "[1 3]");
  CHECK_THROWS_AS(build_bg(a, b), InputError);
  auto [x, y] = pair_of("[1 2]", "[1 1 2]");
  CHECK_THROWS_AS(build_bg(x, y), InputError);
}

TEST_CASE("random pairs: edge accounting, symmetry, monotonicity, identity") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    auto [s1, s2] = pair_of(random_singular_text(rng, n), random_singular_text(rng, n));
    const auto bg = build_bg(s1, s2);
    const Census c = bg.census();
    CHECK(c.edge_count() == bg.edge_count(0) + bg.edge_count(1));
    CHECK(c.p_even_total % 2 == 0);
    for (auto [len, count] : c.cycles) CHECK(len % 2 == 0);

    const Census rev = build_bg(s2, s1).census();
    HalfInt prev = HalfInt(1'000'000);
    for (int k : {2, 4, 6, 8, 10}) {
      const HalfInt d = distance(c, static_cast<std::size_t>(n), SigmaK(k));
      CHECK(d == distance(rev, static_cast<std::size_t>(n), SigmaK(k)));
      CHECK(d <= prev);
      prev = d;
    }
    CHECK(distance(c, static_cast<std::size_t>(n), SigmaK::infinity()) <= prev);
    CHECK(distance(c, static_cast<std::size_t>(n), SigmaK::infinity()) >= HalfInt(0));

    const Census self = build_bg(s1, s1).census();
    for (int k : {2, 4, 6}) CHECK(distance(self, static_cast<std::size_t>(n), SigmaK(k)) == HalfInt(0));
    CHECK(distance(self, static_cast<std::size_t>(n), SigmaK::infinity()) == HalfInt(0));
  }
}

TEST_CASE("dot export mentions every edge") {
  auto [s1, s2] = pair_of("(1 2)[3 -4]", "(1 -3 2)[4]");
  const std::string dot = build_bg(s1, s2).to_dot();
  std::size_t edges = 0;
  for (std::size_t pos = dot.find(" -- "); pos != std::string::npos; pos = dot.find(" -- ", pos + 1)) ++edges;
  CHECK(edges == 6);
  CHECK(dot.find("label=\"1^h\"") != std::string::npos);
}
