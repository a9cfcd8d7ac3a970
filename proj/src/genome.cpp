#include "sdd/genome.hpp"

#include <algorithm>

#include "sdd/error.hpp"

namespace sdd {

FamilyTable::FamilyTable(std::vector<std::string> names) {
  for (auto& n : names) {
    if (index_.count(n) != 0) throw InputError("duplicate family name '" + n + "'");
    intern(n);
  }
}

FamilyId FamilyTable::intern(std::string_view name) {
  std::string key(name);
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  const auto id = static_cast<FamilyId>(names_.size());
  names_.push_back(key);
  index_.emplace(std::move(key), id);
  return id;
}

std::optional<FamilyId> FamilyTable::find(std::string_view name) const {
  if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
  return std::nullopt;
}

Genome::Genome() : families_(std::make_shared<FamilyTable>()) {}

Genome::Genome(std::vector<Chromosome> chromosomes, std::shared_ptr<const FamilyTable> families)
    : chromosomes_(std::move(chromosomes)), families_(std::move(families)) {
  if (!families_) families_ = std::make_shared<FamilyTable>();
  for (const auto& c : chromosomes_) {
    if (c.genes.empty()) throw InputError("empty chromosome");
    for (const auto& g : c.genes) {
      if (g.family < 0 || static_cast<std::size_t>(g.family) >= families_->size())
        throw InputError("gene family id out of range");
    }
  }
}

std::size_t Genome::kappa() const {
  return static_cast<std::size_t>(std::count_if(chromosomes_.begin(), chromosomes_.end(),
                                                [](const Chromosome& c) { return c.shape == Shape::linear; }));
}

std::size_t Genome::circular_count() const { return chromosomes_.size() - kappa(); }

std::size_t Genome::gene_count() const {
  std::size_t n = 0;
  for (const auto& c : chromosomes_) n += c.genes.size();
  return n;
}

std::vector<std::size_t> Genome::family_counts() const {
  std::vector<std::size_t> counts(families_->size(), 0);
  for (const auto& c : chromosomes_)
    for (const auto& g : c.genes) ++counts[static_cast<std::size_t>(g.family)];
  return counts;
}

bool Genome::is_singularized() const {
  for (const auto& c : chromosomes_)
    for (const auto& g : c.genes)
      if (g.paralog != Paralog::none) return true;
  return false;
}

Adjacency make_adjacency(Extremity x, Extremity y) { return x <= y ? Adjacency{x, y} : Adjacency{y, x}; }

std::string_view to_string(GenomeClass c) {
  switch (c) {
    case GenomeClass::singular: return "singular";
    case GenomeClass::duplicated: return "duplicated";
    case GenomeClass::doubled: return "doubled";
    case GenomeClass::other: return "other";
  }
  return "other";
}

// ---------------------------------------------------------------------------
// Text format

namespace {

struct RawSection {
  std::string name;
  std::size_t line = 0;
  struct RawChromosome {
    Shape shape;
    std::vector<std::pair<std::string, Orientation>> genes;
    std::size_t line, column;
  };
  std::vector<RawChromosome> chromosomes;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }
bool is_bracket(char c) { return c == '(' || c == ')' || c == '[' || c == ']'; }

std::vector<RawSection> tokenize(std::string_view text) {
  std::vector<RawSection> sections;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    pos = eol + 1;

    std::size_t first = 0;
    while (first < line.size() && is_space(line[first])) ++first;
    if (first == line.size() || line[first] == '#') {
      if (eol == text.size()) break;
      continue;
    }
    if (line[first] == '>') {
      std::string_view name = line.substr(first + 1);
      while (!name.empty() && is_space(name.front())) name.remove_prefix(1);
      while (!name.empty() && is_space(name.back())) name.remove_suffix(1);
      sections.push_back(RawSection{std::string(name), line_no, {}});
      if (eol == text.size()) break;
      continue;
    }
    if (sections.empty()) sections.push_back(RawSection{"", line_no, {}});
    auto& section = sections.back();

    std::optional<RawSection::RawChromosome> open;
    std::size_t i = first;
    while (i < line.size()) {
      const char c = line[i];
      const std::size_t column = i + 1;
      if (is_space(c)) {
        ++i;
        continue;
      }
      if (c == '(' || c == '[') {
        if (open) throw ParseError("nested chromosome opening", line_no, column);
        open = RawSection::RawChromosome{c == '(' ? Shape::circular : Shape::linear, {}, line_no, column};
        ++i;
        continue;
      }
      if (c == ')' || c == ']') {
        if (!open) throw ParseError(std::string("unexpected '") + c + "'", line_no, column);
        const Shape closing = c == ')' ? Shape::circular : Shape::linear;
        if (closing != open->shape) throw ParseError("mismatched chromosome brackets", line_no, column);
        if (open->genes.empty()) throw ParseError("empty chromosome", line_no, column);
        section.chromosomes.push_back(std::move(*open));
        open.reset();
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !is_space(line[j]) && !is_bracket(line[j])) ++j;
      std::string_view token = line.substr(i, j - i);
      if (!open) throw ParseError("gene '" + std::string(token) + "' outside a chromosome", line_no, column);
      Orientation o = Orientation::forward;
      if (token.front() == '-') {
        o = Orientation::reverse;
        token.remove_prefix(1);
      }
      if (token.empty()) throw ParseError("missing family name after '-'", line_no, column);
      open->genes.emplace_back(std::string(token), o);
      i = j;
    }
    if (open) throw ParseError("unterminated chromosome", open->line, open->column);
    if (eol == text.size()) break;
  }
  return sections;
}

std::vector<Chromosome> resolve(const RawSection& section, FamilyTable& table, bool closed) {
  std::vector<Chromosome> out;
  out.reserve(section.chromosomes.size());
  for (const auto& raw : section.chromosomes) {
    Chromosome c;
    c.shape = raw.shape;
    for (const auto& [name, orientation] : raw.genes) {
      FamilyId id;
      if (closed) {
        auto found = table.find(name);
        if (!found) throw ParseError("unknown family '" + name + "'", raw.line, raw.column);
        id = *found;
      } else {
        id = table.intern(name);
      }
      c.genes.push_back(Gene{id, orientation, Paralog::none});
    }
    out.push_back(std::move(c));
  }
  return out;
}

Genome parse_single(std::string_view text, FamilyTable table, bool closed) {
  auto sections = tokenize(text);
  if (sections.size() > 1) throw ParseError("expected a single genome, found several sections", sections[1].line, 1);
  std::vector<Chromosome> chromosomes;
  if (!sections.empty()) chromosomes = resolve(sections.front(), table, closed);
  return Genome(std::move(chromosomes), std::make_shared<const FamilyTable>(std::move(table)));
}

Extremity left_end(const Gene& g) {
  return Extremity{g.family, g.orientation == Orientation::forward ? End::tail : End::head, g.paralog};
}

Extremity right_end(const Gene& g) {
  return Extremity{g.family, g.orientation == Orientation::forward ? End::head : End::tail, g.paralog};
}

std::string_view paralog_suffix(Paralog p) {
  switch (p) {
    case Paralog::a: return "_a";
    case Paralog::b: return "_b";
    case Paralog::none: break;
  }
  return "";
}

}  // namespace

Genome parse_genome(std::string_view text) { return parse_single(text, FamilyTable{}, false); }

Genome parse_genome(std::string_view text, const FamilyTable& closed) { return parse_single(text, closed, true); }

std::vector<NamedGenome> parse_genome_file(std::string_view text) {
  auto sections = tokenize(text);
  auto table = std::make_shared<FamilyTable>();
  std::vector<std::vector<Chromosome>> resolved;
  resolved.reserve(sections.size());
  for (const auto& s : sections) resolved.push_back(resolve(s, *table, false));
  std::shared_ptr<const FamilyTable> shared = table;
  std::vector<NamedGenome> out;
  for (std::size_t i = 0; i < sections.size(); ++i)
    out.push_back(NamedGenome{sections[i].name, Genome(std::move(resolved[i]), shared)});
  return out;
}

std::string serialize_genome(const Genome& g, std::string_view name) {
  std::string out;
  if (!name.empty()) {
    out += '>';
    out += name;
    out += '\n';
  }
  for (const auto& c : g.chromosomes()) {
    out += c.shape == Shape::circular ? '(' : '[';
    for (const auto& gene : c.genes) {
      out += ' ';
      if (gene.orientation == Orientation::reverse) out += '-';
      out += g.families().name(gene.family);
      out += paralog_suffix(gene.paralog);
    }
    out += ' ';
    out += c.shape == Shape::circular ? ')' : ']';
    out += '\n';
  }
  return out;
}

std::string extremity_label(const FamilyTable& families, Extremity x) {
  std::string s = families.name(x.family);
  s += paralog_suffix(x.paralog);
  s += x.end == End::head ? "^h" : "^t";
  return s;
}

// ---------------------------------------------------------------------------
// Adjacencies, classification, doubling

AdjacencySet adjacencies_and_telomeres(const Genome& g, bool sorted) {
  AdjacencySet out;
  for (const auto& c : g.chromosomes()) {
    const auto& genes = c.genes;
    for (std::size_t i = 0; i + 1 < genes.size(); ++i)
      out.adjacencies.push_back(make_adjacency(right_end(genes[i]), left_end(genes[i + 1])));
    if (c.shape == Shape::circular) {
      out.adjacencies.push_back(make_adjacency(right_end(genes.back()), left_end(genes.front())));
    } else {
      out.telomeres.push_back(left_end(genes.front()));
      out.telomeres.push_back(right_end(genes.back()));
    }
  }
  if (sorted) {
    std::sort(out.adjacencies.begin(), out.adjacencies.end());
    std::sort(out.telomeres.begin(), out.telomeres.end());
  }
  return out;
}

GenomeClass classify(const Genome& g) {
  // Occurrence counts per (family, paralog tag).
  std::vector<std::size_t> counts(3 * g.families().size(), 0);
  for (const auto& c : g.chromosomes())
    for (const auto& gene : c.genes) ++counts[3 * static_cast<std::size_t>(gene.family) + static_cast<std::size_t>(gene.paralog)];
  bool all_once = true;
  bool all_twice = true;
  for (auto n : counts) {
    if (n == 0) continue;
    all_once = all_once && n == 1;
    all_twice = all_twice && n == 2;
  }
  if (all_once) return GenomeClass::singular;
  if (!all_twice) return GenomeClass::other;

  // Doubled when every adjacency and telomere occurs an even number of times.
  const auto sets = adjacencies_and_telomeres(g, false);
  auto key = [](const Extremity& x) {
    return static_cast<std::uint64_t>(3 * static_cast<std::uint64_t>(x.id()) + static_cast<std::uint64_t>(x.paralog));
  };
  std::vector<std::uint64_t> adj;
  adj.reserve(sets.adjacencies.size());
  for (const auto& [x, y] : sets.adjacencies) adj.push_back(std::min(key(x), key(y)) << 32 | std::max(key(x), key(y)));
  std::vector<std::uint64_t> tel;
  tel.reserve(sets.telomeres.size());
  for (const auto& x : sets.telomeres) tel.push_back(key(x));
  auto even_runs = [](std::vector<std::uint64_t>& keys) {
    std::sort(keys.begin(), keys.end());
    for (std::size_t i = 0; i < keys.size();) {
      std::size_t j = i;
      while (j < keys.size() && keys[j] == keys[i]) ++j;
      if ((j - i) % 2 != 0) return false;
      i = j;
    }
    return true;
  };
  if (even_runs(adj) && even_runs(tel)) return GenomeClass::doubled;
  return GenomeClass::duplicated;
}

AdjacencySet double_adjacencies(const Genome& s) {
  if (classify(s) != GenomeClass::singular) throw InputError("genome is not singular");
  AdjacencySet single = adjacencies_and_telomeres(s);
  AdjacencySet out;
  for (const auto& a : single.adjacencies) {
    out.adjacencies.push_back(a);
    out.adjacencies.push_back(a);
  }
  for (const auto& t : single.telomeres) {
    out.telomeres.push_back(t);
    out.telomeres.push_back(t);
  }
  return out;
}

std::uint64_t doubling_layout_count(const Genome& s) {
  if (classify(s) != GenomeClass::singular) throw InputError("genome is not singular");
  const std::size_t r = s.circular_count();
  if (r >= 64) throw InputError("layout count 2^" + std::to_string(r) + " does not fit in 64 bits");
  return std::uint64_t{1} << r;
}

Genome singularize(const Genome& d) {
  if (d.is_singularized()) throw InputError("genome is already singularized");
  const GenomeClass cls = classify(d);
  if (cls != GenomeClass::duplicated && cls != GenomeClass::doubled) throw InputError("genome is not duplicated");
  std::vector<std::uint8_t> seen(d.families().size(), 0);
  std::vector<Chromosome> out = d.chromosomes();
  for (auto& c : out) {
    for (auto& g : c.genes) {
      auto& n = seen[static_cast<std::size_t>(g.family)];
      g.paralog = n == 0 ? Paralog::a : Paralog::b;
      ++n;
    }
  }
  return Genome(std::move(out), d.family_table());
}

Genome align_families(const Genome& g, const Genome& reference) {
  const auto counts = g.family_counts();
  const auto ref_counts = reference.family_counts();
  const bool same_table =
      g.family_table() == reference.family_table() || g.families() == reference.families();
  // Translation of g's family ids into the reference table.
  std::vector<FamilyId> to_ref(counts.size(), 0);
  std::size_t matched = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) continue;
    const auto f = same_table ? std::optional<FamilyId>(static_cast<FamilyId>(i))
                              : reference.families().find(g.families().name(static_cast<FamilyId>(i)));
    if (!f || static_cast<std::size_t>(*f) >= ref_counts.size() || ref_counts[static_cast<std::size_t>(*f)] == 0)
      throw InputError("genomes are not over the same gene families");
    to_ref[i] = *f;
    ++matched;
  }
  const auto ref_occurring =
      static_cast<std::size_t>(std::count_if(ref_counts.begin(), ref_counts.end(), [](std::size_t n) { return n != 0; }));
  if (matched != ref_occurring) throw InputError("genomes are not over the same gene families");
  if (same_table) return g;
  std::vector<Chromosome> out = g.chromosomes();
  for (auto& c : out)
    for (auto& gene : c.genes) gene.family = to_ref[static_cast<std::size_t>(gene.family)];
  return Genome(std::move(out), reference.family_table());
}

}  // namespace sdd
