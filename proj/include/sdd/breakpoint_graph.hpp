#pragma once

// Breakpoint graph of a canonical pair, its cycle/path census and the sigma_k distances.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sdd/genome.hpp"
#include "sdd/half_int.hpp"

namespace sdd {

/// The k of a sigma_k distance: an even integer >= 2, or infinity.
class SigmaK {
 public:
  /// Throws InputError unless k is even and >= 2.
  explicit SigmaK(int k);
  static SigmaK infinity() { return SigmaK(); }
  /// Accepts "2", "4", ..., "inf" or "infinity".
  static SigmaK parse(std::string_view text);

  bool is_infinite() const { return k_ == 0; }
  /// The finite k. Undefined for infinity.
  int value() const { return k_; }
  /// True when a component of `length` edges counts: cycles up to k, paths up to k-2.
  bool counts_cycle(std::size_t length) const { return is_infinite() || length <= static_cast<std::size_t>(k_); }
  bool counts_path(std::size_t length) const {
    return length % 2 == 0 && (is_infinite() || length + 2 <= static_cast<std::size_t>(k_));
  }

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(k_); }

  friend bool operator==(SigmaK, SigmaK) = default;

 private:
  SigmaK() = default;
  int k_ = 0;
};

/// Cycle and path counts of a graph whose vertices have degree at most 2.
struct Census {
  std::map<std::size_t, std::size_t> cycles;  // length -> count
  std::map<std::size_t, std::size_t> paths;   // length -> count
  std::size_t c_total = 0;
  std::size_t p_even_total = 0;

  /// Sum of lengths over all components, i.e. the number of edges.
  std::size_t edge_count() const;
  /// sigma_k: cycles of length <= k plus half the even paths of length <= k-2.
  HalfInt score(SigmaK k) const;

  void add_cycle(std::size_t length);
  void add_path(std::size_t length);

  friend bool operator==(const Census&, const Census&) = default;
};

/// n - sigma_k.
HalfInt distance(const Census& census, std::size_t n, SigmaK k);

/// Two perfect-or-partial matchings on the same vertex set. mate(g, v) is the vertex
/// adjacent to v in genome g (0 or 1), or -1 when v is a telomere of that genome.
///
/// Vertices are extremities. In an untagged graph vertex 2f+end is family f; in a tagged
/// graph (induced from an ambiguous graph) vertex 4f+2end+p is family f, paralog p.
class BreakpointGraph {
 public:
  BreakpointGraph() = default;
  BreakpointGraph(std::array<std::vector<std::int32_t>, 2> mates, std::vector<FamilyId> families,
                  std::shared_ptr<const FamilyTable> table, bool tagged);

  std::size_t vertex_count() const { return mates_[0].size(); }
  std::int32_t mate(int genome, std::int32_t v) const { return mates_[genome][static_cast<std::size_t>(v)]; }
  bool is_telomere(int genome, std::int32_t v) const { return mate(genome, v) < 0; }
  std::size_t edge_count(int genome) const;

  /// Number of families the graph is built over (n_* for a canonical pair).
  std::size_t family_count() const { return families_.size(); }
  bool tagged() const { return tagged_; }
  Extremity extremity(std::int32_t v) const;
  std::string label(std::int32_t v) const;

  Census census() const;

  /// Graphviz rendering. Genome 0 edges blue, genome 1 edges black.
  std::string to_dot(std::string_view name = "breakpoint_graph") const;

 private:
  std::array<std::vector<std::int32_t>, 2> mates_;
  std::vector<FamilyId> families_;  // local family index -> table id
  std::shared_ptr<const FamilyTable> table_;
  bool tagged_ = false;
};

/// Throws InputError unless s1 and s2 are singular over the same families.
BreakpointGraph build_bg(const Genome& s1, const Genome& s2);

/// Walks every component of a degree <= 2 graph given as two mate arrays.
/// Iterative; linear in the vertex count.
Census census_of(const std::vector<std::int32_t>& mate0, const std::vector<std::int32_t>& mate1);

}  // namespace sdd
