#pragma once

// Genome model: chromosomes of oriented genes over interned families, the text
// format, adjacency/telomere extraction, doubling and paralog singularization.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sdd {

using FamilyId = std::int32_t;

/// Interned gene family names with dense ids 0..size()-1.
class FamilyTable {
 public:
  FamilyTable() = default;
  explicit FamilyTable(std::vector<std::string> names);

  /// Returns the id of `name`, adding it if absent.
  FamilyId intern(std::string_view name);
  std::optional<FamilyId> find(std::string_view name) const;

  const std::string& name(FamilyId id) const { return names_.at(static_cast<std::size_t>(id)); }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }

  friend bool operator==(const FamilyTable& a, const FamilyTable& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, FamilyId> index_;
};

enum class Orientation : std::uint8_t { forward, reverse };
enum class End : std::uint8_t { tail = 0, head = 1 };
enum class Paralog : std::uint8_t { none = 0, a = 1, b = 2 };
enum class Shape : std::uint8_t { linear, circular };

struct Gene {
  FamilyId family = 0;
  Orientation orientation = Orientation::forward;
  Paralog paralog = Paralog::none;

  friend bool operator==(const Gene&, const Gene&) = default;
};

struct Chromosome {
  std::vector<Gene> genes;
  Shape shape = Shape::linear;

  friend bool operator==(const Chromosome&, const Chromosome&) = default;
};

class Genome {
 public:
  Genome();
  Genome(std::vector<Chromosome> chromosomes, std::shared_ptr<const FamilyTable> families);

  const std::vector<Chromosome>& chromosomes() const { return chromosomes_; }
  const FamilyTable& families() const { return *families_; }
  const std::shared_ptr<const FamilyTable>& family_table() const { return families_; }

  /// Number of linear chromosomes.
  std::size_t kappa() const;
  /// Number of circular chromosomes.
  std::size_t circular_count() const;
  std::size_t gene_count() const;
  /// Occurrence count per family id.
  std::vector<std::size_t> family_counts() const;
  /// True when at least one gene carries a paralog tag.
  bool is_singularized() const;

 private:
  std::vector<Chromosome> chromosomes_;
  std::shared_ptr<const FamilyTable> families_;
};

struct NamedGenome {
  std::string name;
  Genome genome;
};

/// One end of a gene. Ordered by (family, end, paralog).
struct Extremity {
  FamilyId family = 0;
  End end = End::tail;
  Paralog paralog = Paralog::none;

  /// Dense id for untagged extremities: 2*family + end.
  std::int32_t id() const { return 2 * family + static_cast<std::int32_t>(end); }

  friend auto operator<=>(const Extremity&, const Extremity&) = default;
};

/// Unordered pair stored with the smaller extremity first.
using Adjacency = std::pair<Extremity, Extremity>;

Adjacency make_adjacency(Extremity x, Extremity y);

/// Sorted multisets of adjacencies and telomeres.
struct AdjacencySet {
  std::vector<Adjacency> adjacencies;
  std::vector<Extremity> telomeres;

  friend bool operator==(const AdjacencySet&, const AdjacencySet&) = default;
};

enum class GenomeClass { singular, duplicated, doubled, other };

std::string_view to_string(GenomeClass c);

/// Parses a single genome. Blank lines and `#` comments are ignored; a `>` header is optional.
Genome parse_genome(std::string_view text);
/// Parses a single genome against a closed family table; unknown names are errors.
Genome parse_genome(std::string_view text, const FamilyTable& closed);
/// Parses every `>`-section of a file. All genomes share one family table.
std::vector<NamedGenome> parse_genome_file(std::string_view text);

/// Canonical text: one chromosome per line, `( ... )` circular, `[ ... ]` linear.
std::string serialize_genome(const Genome& g, std::string_view name = {});

/// Extremity names as used in labels: "3^h", "3^t", "3_a^h" etc.
std::string extremity_label(const FamilyTable& families, Extremity x);

/// With `sorted` false, adjacencies come in chromosome scan order (circular wrap last per
/// chromosome) and telomeres left end first.
AdjacencySet adjacencies_and_telomeres(const Genome& g, bool sorted = true);

GenomeClass classify(const Genome& g);

/// Multisets of every genome in the doubling of a singular genome (each element twice).
AdjacencySet double_adjacencies(const Genome& s);

/// Number of distinct doubled layouts, 2^r for r circular chromosomes.
std::uint64_t doubling_layout_count(const Genome& s);

/// Tags the first occurrence of every family (chromosome/position scan order) with `a`,
/// the second with `b`.
Genome singularize(const Genome& d);

/// Re-expresses `g` over the family table of `reference`. Throws InputError if the
/// family sets differ.
Genome align_families(const Genome& g, const Genome& reference);

}  // namespace sdd
