#pragma once

// Seeded instance generation: random singular genomes, and duplicated genomes obtained
// from a doubled layout by random DCJ operations.

#include <cstdint>
#include <string>

#include "sdd/genome.hpp"

namespace sdd {

/// SplitMix64. Stable across platforms; the same seed always yields the same stream.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound);
  /// A new generator seeded from this one's stream.
  SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

struct GenSpec {
  std::uint64_t seed = 1;
  std::size_t n_star = 1;
  std::size_t linear_chroms = 1;
  std::size_t circular_chroms = 0;
  std::size_t dcj_ops = 0;
};

/// Throws InputError unless n_star >= linear + circular >= 1.
void validate(const GenSpec& spec);

/// Families are named "1".."n_star". The first `linear_chroms` chromosomes are linear.
Genome random_singular(const GenSpec& spec);

/// Doubles every chromosome of s (two consecutive copies) and applies j uniformly random DCJs.
Genome scrambled_double(const Genome& s, std::size_t j, std::uint64_t seed);

/// A cut point of a DCJ: the adjacency or telomere at an extremity of a gene occurrence.
/// Occurrences are numbered in chromosome scan order; extremity 2*occurrence + end.
struct DcjCut {
  std::size_t occurrence = 0;
  End end = End::tail;
};

/// Applies one DCJ cutting at the adjacencies/telomeres holding the two given extremities.
/// `rejoin` selects among the valid rejoinings (0 or 1; a telomere pair has only one).
/// Throws InputError if both cuts name the same adjacency or telomere.
Genome apply_dcj(const Genome& g, DcjCut first, DcjCut second, int rejoin);

}  // namespace sdd
