#include "sdd/instance_gen.hpp"

#include <algorithm>
#include <numeric>

#include "sdd/error.hpp"

namespace sdd {

std::uint64_t SplitMix64::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw InputError("uniform_below needs a positive bound");
  // Rejection sampling keeps the draw exactly uniform.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

void validate(const GenSpec& spec) {
  const std::size_t chroms = spec.linear_chroms + spec.circular_chroms;
  if (chroms < 1) throw InputError("at least one chromosome is required");
  if (spec.n_star < chroms)
    throw InputError("n_star = " + std::to_string(spec.n_star) + " cannot fill " + std::to_string(chroms) +
                     " chromosomes");
}

Genome random_singular(const GenSpec& spec) {
  validate(spec);
  SplitMix64 rng(spec.seed);
  auto table = std::make_shared<FamilyTable>();
  for (std::size_t f = 1; f <= spec.n_star; ++f) table->intern(std::to_string(f));

  std::vector<FamilyId> order(spec.n_star);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.uniform_below(i)]);

  // Composition of n_star into `chroms` positive parts: distinct cut positions in 1..n_star-1.
  const std::size_t chroms = spec.linear_chroms + spec.circular_chroms;
  std::vector<std::size_t> positions(spec.n_star - 1);
  std::iota(positions.begin(), positions.end(), 1);
  for (std::size_t i = 0; i + 1 < chroms; ++i)
    std::swap(positions[i], positions[i + rng.uniform_below(positions.size() - i)]);
  std::vector<std::size_t> cuts(positions.begin(), positions.begin() + static_cast<std::ptrdiff_t>(chroms - 1));
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(spec.n_star);

  std::vector<Chromosome> chromosomes;
  std::size_t start = 0;
  for (std::size_t c = 0; c < chroms; ++c) {
    Chromosome chrom;
    chrom.shape = c < spec.linear_chroms ? Shape::linear : Shape::circular;
    for (std::size_t i = start; i < cuts[c]; ++i) {
      const auto o = rng.uniform_below(2) == 0 ? Orientation::forward : Orientation::reverse;
      chrom.genes.push_back(Gene{order[i], o, Paralog::none});
    }
    start = cuts[c];
    chromosomes.push_back(std::move(chrom));
  }
  return Genome(std::move(chromosomes), std::move(table));
}

namespace {

// Adjacency representation over gene occurrences: extremity 2*occurrence + end,
// partner[x] the adjacent extremity or -1 for a telomere.
struct Layout {
  std::vector<Gene> genes;
  std::vector<std::int64_t> partner;
  std::shared_ptr<const FamilyTable> table;
};

std::int64_t entry(const Gene& g, std::int64_t occurrence) {
  return 2 * occurrence + (g.orientation == Orientation::forward ? 0 : 1);
}

Layout to_layout(const Genome& g) {
  Layout out;
  out.table = g.family_table();
  for (const auto& c : g.chromosomes()) {
    const auto first = static_cast<std::int64_t>(out.genes.size());
    for (const auto& gene : c.genes) out.genes.push_back(gene);
    out.partner.resize(2 * out.genes.size(), -1);
    const auto last = static_cast<std::int64_t>(out.genes.size()) - 1;
    for (std::int64_t o = first; o < last; ++o) {
      const std::int64_t exit = entry(out.genes[static_cast<std::size_t>(o)], o) ^ 1;
      const std::int64_t next = entry(out.genes[static_cast<std::size_t>(o + 1)], o + 1);
      out.partner[static_cast<std::size_t>(exit)] = next;
      out.partner[static_cast<std::size_t>(next)] = exit;
    }
    if (c.shape == Shape::circular) {
      const std::int64_t exit = entry(out.genes[static_cast<std::size_t>(last)], last) ^ 1;
      const std::int64_t next = entry(out.genes[static_cast<std::size_t>(first)], first);
      out.partner[static_cast<std::size_t>(exit)] = next;
      out.partner[static_cast<std::size_t>(next)] = exit;
    }
  }
  return out;
}

Genome from_layout(const Layout& layout) {
  const std::size_t m = layout.genes.size();
  std::vector<std::uint8_t> seen(m, 0);
  std::vector<Chromosome> chromosomes;
  auto walk = [&](std::int64_t x, Shape shape) {
    Chromosome c;
    c.shape = shape;
    const std::int64_t start = x;
    while (true) {
      const auto o = static_cast<std::size_t>(x / 2);
      seen[o] = 1;
      Gene g = layout.genes[o];
      g.orientation = (x & 1) == 0 ? Orientation::forward : Orientation::reverse;
      c.genes.push_back(g);
      const std::int64_t next = layout.partner[static_cast<std::size_t>(x ^ 1)];
      if (next < 0 || next == start) break;
      x = next;
    }
    chromosomes.push_back(std::move(c));
  };
  for (std::size_t x = 0; x < 2 * m; ++x)
    if (layout.partner[x] < 0 && !seen[x / 2]) walk(static_cast<std::int64_t>(x), Shape::linear);
  for (std::size_t o = 0; o < m; ++o)
    if (!seen[o]) walk(static_cast<std::int64_t>(2 * o), Shape::circular);
  return Genome(std::move(chromosomes), layout.table);
}

void link(Layout& l, std::int64_t x, std::int64_t y) {
  l.partner[static_cast<std::size_t>(x)] = y;
  l.partner[static_cast<std::size_t>(y)] = x;
}

void unlink(Layout& l, std::int64_t x) { l.partner[static_cast<std::size_t>(x)] = -1; }

// Cuts at extremities x1 and x2 (distinct cut points) and rejoins.
void dcj(Layout& l, std::int64_t x1, std::int64_t x2, int rejoin) {
  const std::int64_t y1 = l.partner[static_cast<std::size_t>(x1)];
  const std::int64_t y2 = l.partner[static_cast<std::size_t>(x2)];
  if (x1 == x2 || y1 == x2) throw InputError("a DCJ needs two distinct cut points");
  if (y1 >= 0 && y2 >= 0) {
    if (rejoin == 0) {
      link(l, x1, x2);
      link(l, y1, y2);
    } else {
      link(l, x1, y2);
      link(l, y1, x2);
    }
  } else if (y1 >= 0 || y2 >= 0) {
    // One adjacency {p, q} and one telomere r.
    const std::int64_t p = y1 >= 0 ? x1 : x2;
    const std::int64_t q = y1 >= 0 ? y1 : y2;
    const std::int64_t r = y1 >= 0 ? x2 : x1;
    if (rejoin == 0) {
      link(l, p, r);
      unlink(l, q);
    } else {
      link(l, q, r);
      unlink(l, p);
    }
  } else {
    link(l, x1, x2);
  }
}

}  // namespace

Genome apply_dcj(const Genome& g, DcjCut first, DcjCut second, int rejoin) {
  Layout l = to_layout(g);
  auto layout_ext = [](const DcjCut& c) {
    return static_cast<std::int64_t>(2 * c.occurrence) + (c.end == End::head ? 1 : 0);
  };
  const std::int64_t x1 = layout_ext(first);
  const std::int64_t x2 = layout_ext(second);
  if (static_cast<std::size_t>(std::max(x1, x2)) >= l.partner.size()) throw InputError("DCJ cut outside the genome");
  dcj(l, x1, x2, rejoin);
  return from_layout(l);
}

Genome scrambled_double(const Genome& s, std::size_t j, std::uint64_t seed) {
  if (classify(s) != GenomeClass::singular || s.is_singularized()) throw InputError("genome is not singular");
  std::vector<Chromosome> doubled;
  for (const auto& c : s.chromosomes()) {
    doubled.push_back(c);
    doubled.push_back(c);
  }
  Layout l = to_layout(Genome(std::move(doubled), s.family_table()));
  SplitMix64 rng(seed);
  // Every cut point has one representative extremity: a telomere, or the smaller end of an
  // adjacency. Drawing extremities until a representative comes up is uniform over cut points.
  const std::uint64_t extremities = l.partner.size();
  auto draw = [&]() {
    while (true) {
      const auto x = static_cast<std::int64_t>(rng.uniform_below(extremities));
      const std::int64_t y = l.partner[static_cast<std::size_t>(x)];
      if (y < 0 || x < y) return x;
    }
  };
  for (std::size_t op = 0; op < j; ++op) {
    const std::int64_t x1 = draw();
    std::int64_t x2 = draw();
    while (x2 == x1) x2 = draw();
    const bool both_telomeres = l.partner[static_cast<std::size_t>(x1)] < 0 && l.partner[static_cast<std::size_t>(x2)] < 0;
    const int rejoin = both_telomeres ? 0 : static_cast<int>(rng.uniform_below(2));
    dcj(l, x1, x2, rejoin);
  }
  return from_layout(l);
}

}  // namespace sdd
