#include "doctest.h"
#include "helpers.hpp"
#include "sdd/double_distance.hpp"
#include "sdd/error.hpp"
#include "sdd/instance_gen.hpp"

using namespace sdd;

TEST_CASE("splitmix64 reference values") {
  // Published outputs of SplitMix64 seeded with 0.
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xe220a8397b1dcdafULL);
  CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
  CHECK(rng.next() == 0x06c45d188009454fULL);
}

TEST_CASE("random singular genome shape and determinism") {
  GenSpec spec;
  spec.seed = 1;
  spec.n_star = 4;
  spec.linear_chroms = 1;
  spec.circular_chroms = 1;
  const Genome g = random_singular(spec);
  CHECK(classify(g) == GenomeClass::singular);
  CHECK(g.gene_count() == 4);
  CHECK(g.circular_count() == 1);
  CHECK(g.chromosomes().size() == 2);
  CHECK(serialize_genome(g) == serialize_genome(random_singular(spec)));
  spec.seed = 2;
  bool differs = false;
  for (std::uint64_t seed = 2; seed < 20 && !differs; ++seed) {
    spec.seed = seed;
    differs = serialize_genome(random_singular(spec)) != serialize_genome(g);
  }
  CHECK(differs);
}

TEST_CASE("single family genome") {
  GenSpec spec;
  spec.n_star = 1;
  spec.linear_chroms = 1;
  const Genome g = random_singular(spec);
  REQUIRE(g.chromosomes().size() == 1);
  REQUIRE(g.chromosomes()[0].genes.size() == 1);
  CHECK(g.chromosomes()[0].shape == Shape::linear);
}

TEST_CASE("infeasible specs are rejected") {
  GenSpec spec;
  spec.n_star = 2;
  spec.linear_chroms = 2;
  spec.circular_chroms = 1;
  CHECK_THROWS_AS(random_singular(spec), InputError);
  spec.linear_chroms = 0;
  spec.circular_chroms = 0;
  CHECK_THROWS_AS(random_singular(spec), InputError);
}

TEST_CASE("dcj between two adjacencies is an inversion") {
  const Genome g = parse_genome("[1 2 3 4]");
  const Genome r = apply_dcj(g, DcjCut{0, End::head}, DcjCut{2, End::head}, 0);
  CHECK(serialize_genome(r) == serialize_genome(parse_genome("[1 -3 -2 4]")));
}

TEST_CASE("scrambled doubles are duplicated and deterministic") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto [s, d] = test::random_pair(seed, 1 + seed % 9, seed % 12);
    // A doubled genome is the special case of a duplicated one that is free of breakpoints.
    const GenomeClass c = classify(d);
    CHECK((c == GenomeClass::duplicated || c == GenomeClass::doubled));
    CHECK(serialize_genome(d) == serialize_genome(test::random_pair(seed, 1 + seed % 9, seed % 12).second));
  }
}

TEST_CASE("no DCJ gives a doubled genome at distance zero") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto [s, d] = test::random_pair(seed, 1 + seed % 9, 0);
    CHECK(classify(d) == GenomeClass::doubled);
    CHECK(adjacencies_and_telomeres(d) == double_adjacencies(s));
    for (int k : {2, 4, 6}) CHECK(double_distance(s, d, SigmaK(k)).distance == HalfInt(0));
  }
}

TEST_CASE("one DCJ moves the distance by at most one") {
  DoubleDistanceOptions oracle;
  oracle.use_oracle = true;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    auto [s, d] = test::random_pair(seed, 1 + seed % 8, 1);
    INFO("seed " << seed);
    CHECK(double_distance(s, d, SigmaK(6)).distance <= HalfInt(1));
    CHECK(double_distance(s, d, SigmaK::infinity(), oracle).distance <= HalfInt(1));
  }
}

TEST_CASE("dcj distance never exceeds the number of DCJs applied") {
  DoubleDistanceOptions oracle;
  oracle.use_oracle = true;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const std::size_t j = seed % 8;
    auto [s, d] = test::random_pair(seed, 2 + seed % 7, j);
    INFO("seed " << seed);
    CHECK(double_distance(s, d, SigmaK::infinity(), oracle).distance <= HalfInt(static_cast<std::int64_t>(j)));
  }
}
