#include "sdd/breakpoint_graph.hpp"

#include <sstream>

#include "sdd/error.hpp"

namespace sdd {

SigmaK::SigmaK(int k) : k_(k) {
  if (k < 2 || k % 2 != 0) throw InputError("k must be an even integer >= 2 or inf, got " + std::to_string(k));
}

SigmaK SigmaK::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "dcj") return infinity();
  int k = 0;
  if (text.empty() || text.size() > 6) throw InputError("invalid k '" + std::string(text) + "'");
  for (char c : text) {
    if (c < '0' || c > '9') throw InputError("invalid k '" + std::string(text) + "'");
    k = 10 * k + (c - '0');
  }
  return SigmaK(k);
}

std::size_t Census::edge_count() const {
  std::size_t n = 0;
  for (auto [len, count] : cycles) n += len * count;
  for (auto [len, count] : paths) n += len * count;
  return n;
}

HalfInt Census::score(SigmaK k) const {
  std::int64_t halves = 0;
  for (auto [len, count] : cycles)
    if (k.counts_cycle(len)) halves += 2 * static_cast<std::int64_t>(count);
  for (auto [len, count] : paths)
    if (k.counts_path(len)) halves += static_cast<std::int64_t>(count);
  return HalfInt::from_halves(halves);
}

void Census::add_cycle(std::size_t length) {
  ++cycles[length];
  ++c_total;
}

void Census::add_path(std::size_t length) {
  ++paths[length];
  if (length % 2 == 0) ++p_even_total;
}

HalfInt distance(const Census& census, std::size_t n, SigmaK k) {
  return HalfInt(static_cast<std::int64_t>(n)) - census.score(k);
}

Census census_of(const std::vector<std::int32_t>& mate0, const std::vector<std::int32_t>& mate1) {
  const std::vector<std::int32_t>* mate[2] = {&mate0, &mate1};
  const std::size_t n = mate0.size();
  std::vector<std::uint8_t> seen(n, 0);
  Census census;

  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    const bool has0 = mate0[start] >= 0;
    const bool has1 = mate1[start] >= 0;
    if (has0 && has1) continue;
    seen[start] = 1;
    std::size_t length = 0;
    if (has0 || has1) {
      int color = has0 ? 0 : 1;
      auto cur = static_cast<std::int32_t>(start);
      while (true) {
        cur = (*mate[color])[static_cast<std::size_t>(cur)];
        seen[static_cast<std::size_t>(cur)] = 1;
        ++length;
        color ^= 1;
        if ((*mate[color])[static_cast<std::size_t>(cur)] < 0) break;
      }
    }
    census.add_path(length);
  }

  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::size_t length = 0;
    int color = 0;
    auto cur = static_cast<std::int32_t>(start);
    do {
      seen[static_cast<std::size_t>(cur)] = 1;
      cur = (*mate[color])[static_cast<std::size_t>(cur)];
      ++length;
      color ^= 1;
    } while (static_cast<std::size_t>(cur) != start);
    census.add_cycle(length);
  }
  return census;
}

BreakpointGraph::BreakpointGraph(std::array<std::vector<std::int32_t>, 2> mates, std::vector<FamilyId> families,
                                 std::shared_ptr<const FamilyTable> table, bool tagged)
    : mates_(std::move(mates)), families_(std::move(families)), table_(std::move(table)), tagged_(tagged) {
  if (mates_[0].size() != mates_[1].size()) throw InvariantViolation("mate arrays differ in size");
  for (int g = 0; g < 2; ++g) {
    for (std::size_t v = 0; v < mates_[g].size(); ++v) {
      const auto m = mates_[g][v];
      if (m < 0) continue;
      if (static_cast<std::size_t>(m) >= mates_[g].size() || mates_[g][static_cast<std::size_t>(m)] != static_cast<std::int32_t>(v) ||
          m == static_cast<std::int32_t>(v))
        throw InvariantViolation("mate arrays are not a matching");
    }
  }
}

std::size_t BreakpointGraph::edge_count(int genome) const {
  std::size_t n = 0;
  for (auto m : mates_[genome]) n += m >= 0 ? 1 : 0;
  return n / 2;
}

Extremity BreakpointGraph::extremity(std::int32_t v) const {
  if (tagged_) {
    return Extremity{families_[static_cast<std::size_t>(v / 4)], static_cast<End>((v >> 1) & 1),
                     (v & 1) != 0 ? Paralog::b : Paralog::a};
  }
  return Extremity{families_[static_cast<std::size_t>(v / 2)], static_cast<End>(v & 1), Paralog::none};
}

std::string BreakpointGraph::label(std::int32_t v) const {
  if (!table_) return std::to_string(v);
  return extremity_label(*table_, extremity(v));
}

Census BreakpointGraph::census() const { return census_of(mates_[0], mates_[1]); }

std::string BreakpointGraph::to_dot(std::string_view name) const {
  std::ostringstream out;
  out << "graph " << name << " {\n  node [shape=circle, style=filled];\n";
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    const auto iv = static_cast<std::int32_t>(v);
    const bool t0 = is_telomere(0, iv);
    const bool t1 = is_telomere(1, iv);
    const char* fill = t0 && t1 ? "gray" : t0 ? "lightblue" : t1 ? "lightgray" : "white";
    out << "  v" << v << " [label=\"" << label(iv) << "\", fillcolor=" << fill << "];\n";
  }
  for (int g = 0; g < 2; ++g) {
    for (std::size_t v = 0; v < vertex_count(); ++v) {
      const auto m = mates_[g][v];
      if (m > static_cast<std::int32_t>(v))
        out << "  v" << v << " -- v" << m << " [color=" << (g == 0 ? "blue" : "black") << ", genome=" << g + 1
            << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

BreakpointGraph build_bg(const Genome& s1, const Genome& s2) {
  if (classify(s1) != GenomeClass::singular || classify(s2) != GenomeClass::singular)
    throw InputError("breakpoint graph needs two singular genomes");
  if (s1.is_singularized() || s2.is_singularized()) throw InputError("breakpoint graph needs untagged genomes");
  const Genome aligned = align_families(s2, s1);

  const auto counts = s1.family_counts();
  std::vector<std::int32_t> local(counts.size(), -1);
  std::vector<FamilyId> families;
  for (std::size_t f = 0; f < counts.size(); ++f) {
    if (counts[f] == 0) continue;
    local[f] = static_cast<std::int32_t>(families.size());
    families.push_back(static_cast<FamilyId>(f));
  }

  const std::size_t n = families.size();
  std::array<std::vector<std::int32_t>, 2> mates{std::vector<std::int32_t>(2 * n, -1),
                                                 std::vector<std::int32_t>(2 * n, -1)};
  auto vertex = [&](const Extremity& x) {
    return 2 * local[static_cast<std::size_t>(x.family)] + static_cast<std::int32_t>(x.end);
  };
  const Genome* genomes[2] = {&s1, &aligned};
  for (int g = 0; g < 2; ++g) {
    for (const auto& [x, y] : adjacencies_and_telomeres(*genomes[g]).adjacencies) {
      const auto u = vertex(x);
      const auto v = vertex(y);
      mates[g][static_cast<std::size_t>(u)] = v;
      mates[g][static_cast<std::size_t>(v)] = u;
    }
  }
  return BreakpointGraph(std::move(mates), std::move(families), s1.family_table(), false);
}

}  // namespace sdd
