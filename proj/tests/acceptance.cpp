// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "sdd/breakpoint_graph.hpp"
#include "sdd/double_distance.hpp"
#include "sdd/error.hpp"
#include "sdd/sigma4.hpp"
#include "sdd/sigma6.hpp"

using namespace sdd;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& check) {
  Outcome o;
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << id << "] " << name << ": " << o.detail << std::endl;
}

Census census_of(std::map<std::size_t, std::size_t> cycles, std::map<std::size_t, std::size_t> paths) {
  Census c;
  for (auto [len, n] : cycles)
    for (std::size_t i = 0; i < n; ++i) c.add_cycle(len);
  for (auto [len, n] : paths)
    for (std::size_t i = 0; i < n; ++i) c.add_path(len);
  return c;
}

bool same_census(const Census& a, const Census& b) { return a.cycles == b.cycles && a.paths == b.paths; }

/// Small-instance corpus: n_* in 1..8, j in 0..10, mixed chromosome shapes.
struct Instance {
  std::uint64_t seed;
  Genome s;
  Genome d;
};

std::vector<Instance> small_corpus(std::size_t count) {
  std::vector<Instance> out;
  for (std::uint64_t seed = 1; out.size() < count; ++seed) {
    const std::size_t n = 1 + seed % 8;
    const std::size_t j = (seed / 8) % 11;
    auto [s, d] = test::random_pair(seed, n, j);
    out.push_back({seed, std::move(s), std::move(d)});
  }
  return out;
}

/// A member of the doubling of s: linear chromosomes copied, each circular chromosome either
/// copied or written once as a circle of twice its length.
Genome random_layout(const Genome& s, SplitMix64& rng) {
  std::vector<Chromosome> out;
  for (const auto& c : s.chromosomes()) {
    if (c.shape == Shape::circular && rng.uniform_below(2) == 1) {
      Chromosome twice = c;
      twice.genes.insert(twice.genes.end(), c.genes.begin(), c.genes.end());
      out.push_back(std::move(twice));
    } else {
      out.push_back(c);
      out.push_back(c);
    }
  }
  return Genome(std::move(out), s.family_table());
}

double best_time(const std::function<void()>& f, int repeats) {
  double best = 1e9;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = Clock::now();
    f();
    best = std::min(best, seconds_since(t0));
  }
  return best;
}

}  // namespace

int main() {
  const auto corpus = small_corpus(1200);
  const std::string fig2_text = ">S1\n(1 -3 2)[4]\n>S2\n(1 2)[3 -4]\n";

  report(1, "breakpoint distance of the two-genome example", [&]() {
    std::vector<double> times;
    HalfInt d;
    for (int r = 0; r < 201; ++r) {
      const auto t0 = Clock::now();
      const auto file = parse_genome_file(fig2_text);
      d = distance(build_bg(file[0].genome, file[1].genome).census(), 4, SigmaK(2));
      times.push_back(seconds_since(t0));
    }
    std::nth_element(times.begin(), times.begin() + 100, times.end());
    const double median_ms = times[100] * 1e3;
    std::ostringstream o;
    o << "d_sigma2 = " << d << " (expected 5/2), median runtime " << median_ms << " ms (limit 1 ms)";
    return Outcome{d == HalfInt::from_halves(5) && median_ms < 1.0, o.str()};
  });

  report(2, "DCJ distance and census of the two-genome example", [&]() {
    const auto file = parse_genome_file(fig2_text);
    const Census c = build_bg(file[0].genome, file[1].genome).census();
    const HalfInt d = distance(c, 4, SigmaK::infinity());
    const bool census_ok = same_census(c, census_of({{2, 1}}, {{0, 1}, {4, 1}}));
    std::ostringstream o;
    o << "d_dcj = " << d << " (expected 2), census " << (census_ok ? "= " : "!= ")
      << "{one 2-cycle, one 0-path, one 4-path}";
    return Outcome{d == HalfInt(2) && census_ok, o.str()};
  });

  report(3, "ambiguous graph of the three-family example", [&]() {
    auto [s, d] = test::pair_of("[1 2 3]", "[1 2 -3 1][-3 2]");
    const auto g = build_abg(s, d);
    Solution tau(g.square_count());
    tau.set(1, 1);
    const Census c = score(g, tau, SigmaK(6)).census;
    const bool census_ok = same_census(c, census_of({{2, 1}}, {{0, 2}, {2, 1}, {4, 1}}));
    std::ostringstream o;
    o << g.square_count() << " squares (expected 2), induced census "
      << (census_ok ? "= " : "!= ") << "{1 two-cycle, 2 zero-paths, 1 two-path, 1 four-path}";
    return Outcome{g.square_count() == 2 && census_ok, o.str()};
  });

  report(4, "triplet scores", [&]() {
    auto score_of = [](const char* s_text, const char* d_text, TripletKind kind, int& halves) {
      auto [s, d] = test::pair_of(s_text, d_text);
      const auto g = build_abg(s, d);
      Solution tau(g.square_count());
      fix_two_cycles(g, tau);
      const auto triplets = detect_and_fix_triplets(g, tau);
      halves = triplets.size() == 1 && triplets[0].kind == kind ? triplets[0].score_halves : -1;
      const HalfInt solver = solve_sigma6(g).score.value;
      return solver == oracle_best(g, SigmaK(6)).score.value ? solver : HalfInt(-1);
    };
    int sat_halves = 0, unsat_halves = 0;
    const HalfInt sat = score_of("(1 2 3)", "(1)(1)(2)(2)(3)(3)", TripletKind::saturated, sat_halves);
    const HalfInt unsat = score_of("(1 4 -2 -3)", "(1 -1 -3 -2 -4 2 3)(4)", TripletKind::unsaturated, unsat_halves);
    std::ostringstream o;
    o << "saturated triplet score " << HalfInt::from_halves(sat_halves) << " (instance sigma6 " << sat
      << "), unsaturated triplet score " << HalfInt::from_halves(unsat_halves) << " (instance sigma6 " << unsat
      << "); expected 2 and 1";
    return Outcome{sat_halves == 4 && unsat_halves == 2 && sat == HalfInt(2) && unsat == HalfInt(1), o.str()};
  });

  std::vector<HalfInt> oracle6(corpus.size());
  report(5, "solver scores equal exhaustive optimum", [&]() {
    const auto t0 = Clock::now();
    std::size_t mismatch4 = 0, mismatch6 = 0, linear = 0, circular = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto g = build_abg(corpus[i].s, corpus[i].d);
      for (const auto& c : corpus[i].s.chromosomes()) ++(c.shape == Shape::linear ? linear : circular);
      if (solve_sigma4(g).score.value != oracle_best(g, SigmaK(4)).score.value) ++mismatch4;
      oracle6[i] = oracle_best(g, SigmaK(6)).score.value;
      if (solve_sigma6(g).score.value != oracle6[i]) ++mismatch6;
    }
    const double secs = seconds_since(t0);
    std::ostringstream o;
    o << corpus.size() << " instances (" << linear << " linear, " << circular << " circular chromosomes), "
      << mismatch4 << " sigma4 and " << mismatch6 << " sigma6 mismatches, " << secs << " s (limit 60 s)";
    return Outcome{corpus.size() >= 1000 && mismatch4 == 0 && mismatch6 == 0 && secs < 60 && linear > 0 && circular > 0,
                   o.str()};
  });

  report(6, "common-adjacency 2-cycles and 0-paths are kept", [&]() {
    std::size_t missing = 0, lowered = 0;
    for (const auto& inst : corpus) {
      const auto g = build_abg(inst.s, inst.d);
      const auto r4 = solve_sigma4(g);
      const auto r6 = solve_sigma6(g);
      for (const auto* r : {&r4.solution, &r6.solution}) {
        const Census c = score(g, *r, SigmaK(6)).census;
        const auto zero = c.paths.count(0) != 0 ? c.paths.at(0) : 0;
        if (!induces_all_two_cycles(g, *r) || zero != g.zero_path_count()) ++missing;
      }
      OracleOptions keep;
      keep.require = [&](const Solution& t) { return induces_all_two_cycles(g, t); };
      for (int k : {4, 6})
        if (oracle_best(g, SigmaK(k), keep).score.value != oracle_best(g, SigmaK(k)).score.value) ++lowered;
    }
    std::ostringstream o;
    o << missing << " solver solutions missing a 2-cycle or 0-path, " << lowered
      << " constrained oracle optima below the unconstrained ones";
    return Outcome{missing == 0 && lowered == 0, o.str()};
  });

  report(7, "sigma_k distances decrease with k", [&]() {
    std::size_t violations = 0, pairs = 0;
    SplitMix64 rng(7);
    for (std::uint64_t seed = 1; pairs < 1500; ++seed) {
      GenSpec spec;
      spec.seed = rng.next();
      spec.n_star = 1 + rng.uniform_below(30);
      spec.linear_chroms = rng.uniform_below(std::min<std::size_t>(spec.n_star, 3) + 1);
      spec.circular_chroms = spec.linear_chroms == 0 ? 1 : spec.linear_chroms < spec.n_star ? rng.uniform_below(2) : 0;
      const Genome a = random_singular(spec);
      Genome b;
      if (seed % 2 == 0) {
        spec.seed = rng.next();
        b = random_singular(spec);
      } else {
        b = a;
        for (std::size_t j = rng.uniform_below(6); j > 0; --j) {
          const std::size_t genes = b.gene_count();
          const DcjCut x{rng.uniform_below(genes), static_cast<End>(rng.uniform_below(2))};
          const DcjCut y{rng.uniform_below(genes), static_cast<End>(rng.uniform_below(2))};
          try {
            b = apply_dcj(b, x, y, static_cast<int>(rng.uniform_below(2)));
          } catch (const InputError&) {
            // Both cuts hit the same adjacency or telomere.
          }
        }
      }
      const Census c = build_bg(a, b).census();
      const std::size_t n = spec.n_star;
      const HalfInt d2 = distance(c, n, SigmaK(2)), d4 = distance(c, n, SigmaK(4)), d6 = distance(c, n, SigmaK(6)),
                    dinf = distance(c, n, SigmaK::infinity());
      if (!(d2 >= d4 && d4 >= d6 && d6 >= dinf)) ++violations;
      ++pairs;
    }
    std::ostringstream o;
    o << pairs << " canonical pairs, " << violations << " violations of d2 >= d4 >= d6 >= d_dcj";
    return Outcome{violations == 0, o.str()};
  });

  report(8, "identity and relabeling invariance", [&]() {
    SplitMix64 rng(8);
    std::size_t nonzero = 0, changed = 0, layouts = 0;
    for (const auto& inst : corpus) {
      const Genome layout = random_layout(inst.s, rng);
      ++layouts;
      for (int k : {2, 4, 6})
        if (double_distance(inst.s, layout, SigmaK(k)).distance != HalfInt(0)) ++nonzero;
      const Genome relabeled = test::rewritten(inst.d, rng);
      for (int k : {2, 4, 6})
        if (double_distance(inst.s, relabeled, SigmaK(k)).distance != double_distance(inst.s, inst.d, SigmaK(k)).distance)
          ++changed;
    }
    std::ostringstream o;
    o << layouts << " doubled layouts with " << nonzero << " non-zero distances, " << changed
      << " distance changes under a/b relabeling";
    return Outcome{nonzero == 0 && changed == 0, o.str()};
  });

  report(9, "pruned-graph formula equals exhaustive optimum", [&]() {
    std::size_t mismatch = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto g = build_abg(corpus[i].s, corpus[i].d);
      if (solve_sigma6(g).stats.formula_score != oracle6[i]) ++mismatch;
    }
    std::ostringstream o;
    o << corpus.size() << " instances, " << mismatch << " mismatches of |C| + |P|/2 + sum of component scores";
    return Outcome{mismatch == 0, o.str()};
  });

  report(10, "linear-time sigma6 double distance", [&]() {
    auto scrambled = [](std::size_t n) {
      GenSpec spec;
      spec.seed = 10;
      spec.n_star = n;
      spec.linear_chroms = 5;
      spec.circular_chroms = 5;
      Genome s = random_singular(spec);
      Genome d = scrambled_double(s, n, 11);
      return std::make_pair(std::move(s), std::move(d));
    };
    // Blocks that keep ambiguous components after pruning, repeated up to n families.
    std::vector<std::pair<Genome, Genome>> hard;
    for (std::uint64_t seed = 1; hard.size() < 100; ++seed) {
      auto p = test::random_pair(seed, 6 + seed % 7, seed % 10);
      if (solve_sigma6(build_abg(p.first, p.second)).stats.ambiguous_components > 0) hard.push_back(std::move(p));
    }
    auto tiled = [&](std::size_t n) {
      std::vector<std::pair<Genome, Genome>> blocks;
      for (std::size_t i = 0, total = 0; total < n; ++i) {
        blocks.push_back(hard[i % hard.size()]);
        total += blocks.back().first.gene_count();
      }
      return test::concatenated(blocks);
    };
    std::ostringstream o;
    bool pass = true;
    for (int workload = 0; workload < 2; ++workload) {
      const auto small = workload == 0 ? scrambled(10000) : tiled(10000);
      const auto large = workload == 0 ? scrambled(100000) : tiled(100000);
      std::size_t components = 0;
      const double t_small = best_time([&]() { double_distance(small.first, small.second, SigmaK(6)); }, 3);
      const double t_large = best_time(
          [&]() { components = double_distance(large.first, large.second, SigmaK(6)).sigma6->ambiguous_components; },
          3);
      const double ratio = t_large / t_small;
      pass = pass && t_large < 5.0 && ratio <= 20.0;
      o << (workload == 0 ? "scrambled" : "tiled") << ": " << t_large << " s at n=100000 (" << components
        << " ambiguous components), ratio " << ratio << (workload == 0 ? "; " : "");
    }
    o << " (limits 5 s, ratio 20)";
    return Outcome{pass, o.str()};
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
