#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <utility>

#include "sdd/ambiguous_graph.hpp"
#include "sdd/genome.hpp"
#include "sdd/instance_gen.hpp"

namespace sdd::test {

inline std::pair<Genome, Genome> pair_of(const std::string& a, const std::string& b) {
  auto file = parse_genome_file(">S\n" + a + "\n>D\n" + b + "\n");
  return {file[0].genome, file[1].genome};
}

/// Random singular genome with up to two linear and two circular chromosomes, and a
/// doubled genome j DCJs away from its perfect doubling.
inline std::pair<Genome, Genome> random_pair(std::uint64_t seed, std::size_t n, std::size_t j) {
  SplitMix64 rng(seed);
  GenSpec spec;
  spec.seed = rng.next();
  spec.n_star = n;
  spec.linear_chroms = rng.uniform_below(3);
  spec.circular_chroms = rng.uniform_below(3);
  if (spec.linear_chroms + spec.circular_chroms == 0) spec.linear_chroms = 1;
  while (spec.linear_chroms + spec.circular_chroms > n) {
    if (spec.circular_chroms > 0) --spec.circular_chroms; else --spec.linear_chroms;
  }
  Genome s = random_singular(spec);
  Genome d = scrambled_double(s, j, rng.next());
  return {std::move(s), std::move(d)};
}

inline AmbiguousBreakpointGraph random_instance(std::uint64_t seed, std::size_t n, std::size_t j) {
  auto [s, d] = random_pair(seed, n, j);
  return build_abg(s, d);
}

}  // namespace sdd::test

namespace sdd::test {

/// Same genome written differently: chromosomes reordered, reversed and rotated at random.
/// For a duplicated genome this changes which copy of a family is tagged `a`.
inline Genome rewritten(const Genome& g, SplitMix64& rng) {
  std::vector<Chromosome> chroms = g.chromosomes();
  for (std::size_t i = chroms.size(); i > 1; --i) std::swap(chroms[i - 1], chroms[rng.uniform_below(i)]);
  for (auto& c : chroms) {
    if (rng.uniform_below(2) == 1) {
      std::reverse(c.genes.begin(), c.genes.end());
      for (auto& gene : c.genes)
        gene.orientation = gene.orientation == Orientation::forward ? Orientation::reverse : Orientation::forward;
    }
    if (c.shape == Shape::circular && !c.genes.empty())
      std::rotate(c.genes.begin(), c.genes.begin() + static_cast<std::ptrdiff_t>(rng.uniform_below(c.genes.size())),
                  c.genes.end());
  }
  return Genome(std::move(chroms), g.family_table());
}

}  // namespace sdd::test

namespace sdd::test {

/// Disjoint union of pairs: family f of block b is renamed to (offset of b) + f.
inline std::pair<Genome, Genome> concatenated(const std::vector<std::pair<Genome, Genome>>& blocks) {
  std::vector<std::string> names;
  std::vector<Chromosome> s_chroms;
  std::vector<Chromosome> d_chroms;
  for (const auto& [s, d] : blocks) {
    const auto offset = static_cast<FamilyId>(names.size());
    const auto& table = s.families();
    for (std::size_t f = 0; f < table.size(); ++f) names.push_back(std::to_string(names.size() + 1));
    const Genome d_aligned = align_families(d, s);
    for (const auto* g : {&s, &d_aligned}) {
      auto& out = g == &s ? s_chroms : d_chroms;
      for (auto c : g->chromosomes()) {
        for (auto& gene : c.genes) gene.family += offset;
        out.push_back(std::move(c));
      }
    }
  }
  auto table = std::make_shared<const FamilyTable>(std::move(names));
  return {Genome(std::move(s_chroms), table), Genome(std::move(d_chroms), table)};
}

}  // namespace sdd::test
