#include "sdd/cli.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "sdd/breakpoint_graph.hpp"
#include "sdd/double_distance.hpp"
#include "sdd/error.hpp"
#include "sdd/genome.hpp"
#include "sdd/instance_gen.hpp"

namespace sdd {
namespace {

using nlohmann::json;

enum class Format { text, json, dot };

struct Common {
  std::vector<std::string> inputs;
  std::string k_text = "6";
  std::string format_text = "text";
  bool dot = false;
  bool decimal = false;
  std::size_t jobs = 1;
  bool verbose = false;

  Format format() const {
    if (dot || format_text == "dot") return Format::dot;
    return format_text == "json" ? Format::json : Format::text;
  }
  SigmaK k() const;
};

/// Flag values that parse but make no sense; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Genome syntax error annotated with its file name; reported with exit code 2.
class FileParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SigmaK Common::k() const {
  try {
    return SigmaK::parse(k_text);
  } catch (const InputError& e) {
    throw UsageError(e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct GenomePair {
  NamedGenome first;
  NamedGenome second;
};

/// Two files with one genome each form one pair; otherwise every file holds consecutive pairs.
std::vector<GenomePair> load_pairs(const std::vector<std::string>& paths) {
  std::vector<std::vector<NamedGenome>> files;
  for (const auto& p : paths) {
    try {
      files.push_back(parse_genome_file(read_file(p)));
    } catch (const ParseError& e) {
      throw FileParseError(p + ": " + e.what());
    }
  }
  std::vector<GenomePair> pairs;
  if (files.size() == 2 && files[0].size() == 1 && files[1].size() == 1) {
    pairs.push_back({files[0][0], files[1][0]});
    return pairs;
  }
  for (std::size_t f = 0; f < files.size(); ++f) {
    if (files[f].size() % 2 != 0 || files[f].empty())
      throw InputError(paths[f] + ": expected pairs of genomes, found " + std::to_string(files[f].size()) +
                       " genome(s)");
    for (std::size_t i = 0; i < files[f].size(); i += 2) pairs.push_back({files[f][i], files[f][i + 1]});
  }
  return pairs;
}

std::string value_text(HalfInt h, bool decimal) { return decimal ? h.to_decimal() : h.to_string(); }

json rational(HalfInt h) { return json{{"num", h.num()}, {"den", h.den()}}; }

json census_json(const Census& c) {
  json cycles = json::object();
  json paths = json::object();
  for (auto [len, n] : c.cycles) cycles[std::to_string(len)] = n;
  for (auto [len, n] : c.paths) paths[std::to_string(len)] = n;
  return json{{"cycles", cycles}, {"paths", paths}};
}

std::string census_text(const Census& c) {
  std::ostringstream out;
  out << "cycles:";
  if (c.cycles.empty()) out << " none";
  for (auto [len, n] : c.cycles) out << " " << len << ":" << n;
  out << "\npaths:";
  if (c.paths.empty()) out << " none";
  for (auto [len, n] : c.paths) out << " " << len << ":" << n;
  out << "\n";
  return out.str();
}

std::string distance_name(SigmaK k, bool doubled) {
  const std::string prefix = doubled ? "d2_" : "d_";
  return prefix + (k.is_infinite() ? std::string("dcj") : "sigma" + k.to_string());
}

std::string solution_bits(const Solution& tau) {
  std::string bits;
  for (std::size_t i = 0; i < tau.size(); ++i) bits.push_back(tau.choice(i) == 0 ? '0' : '1');
  return bits;
}

/// Runs `task` for every index with up to `jobs` threads. Outputs keep index order; the first
/// failing index (in order) has its exception rethrown after everything before it is written.
void run_jobs(std::size_t count, std::size_t jobs, const std::function<std::string(std::size_t)>& task,
              std::ostream& out) {
  std::vector<std::string> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(jobs, count));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out << results[i];
  }
}

void write_json_results(std::vector<json>& items, std::ostream& out) {
  if (items.size() == 1) out << items[0].dump(2) << "\n";
  else out << json(items).dump(2) << "\n";
}

// ---------------------------------------------------------------------------

int cmd_distance(const Common& c, std::ostream& out) {
  const SigmaK k = c.k();
  const auto pairs = load_pairs(c.inputs);
  const Format fmt = c.format();
  if (fmt == Format::dot) throw UsageError("distance has no DOT output; use the graph command");
  std::vector<json> items(pairs.size());
  run_jobs(
      pairs.size(), c.jobs,
      [&](std::size_t i) {
        const auto& p = pairs[i];
        const BreakpointGraph bg = build_bg(p.first.genome, p.second.genome);
        const Census census = bg.census();
        const std::size_t n = bg.family_count();
        const HalfInt d = distance(census, n, k);
        if (fmt == Format::json) {
          items[i] = json{{"genomes", {p.first.name, p.second.name}},
                          {"n_star", n},
                          {"k", k.to_string()},
                          {"census", census_json(census)},
                          {"distance", rational(d)}};
          return std::string();
        }
        std::ostringstream o;
        if (pairs.size() > 1) o << "# " << p.first.name << " vs " << p.second.name << "\n";
        o << "n_* = " << n << "\n" << census_text(census) << distance_name(k, false) << " = " << value_text(d, c.decimal)
          << "\n";
        return o.str();
      },
      out);
  if (fmt == Format::json) write_json_results(items, out);
  return 0;
}

json sigma6_stats_json(const Sigma6Stats& st) {
  json classes = json::object();
  for (std::size_t i = 0; i < st.square_classes.size(); ++i)
    classes[std::string(to_string(static_cast<SquareClass>(i)))] = st.square_classes[i];
  return json{{"saturated_triplets", st.saturated_triplets},
              {"unsaturated_triplets", st.unsaturated_triplets},
              {"preserved_edges", st.preserved_edges},
              {"class_resolved", st.class_resolved},
              {"square_classes", classes},
              {"ambiguous_components", st.ambiguous_components},
              {"resolved_cycles", st.resolved_cycles},
              {"resolved_paths", st.resolved_paths},
              {"bubbles", st.bubbles},
              {"cycle_lines", st.cycle_lines},
              {"unbalanced_bubbles", st.unbalanced_bubbles},
              {"double_lines", st.double_lines},
              {"path_lines", st.path_lines},
              {"max_scope", st.max_scope},
              {"invariant_violations", st.violations.total()},
              {"formula_score", rational(st.formula_score)}};
}

int cmd_double_distance(const Common& c, bool oracle, std::size_t oracle_cap, std::ostream& out) {
  const SigmaK k = c.k();
  const bool linear = !k.is_infinite() && (k.value() == 2 || k.value() == 4 || k.value() == 6);
  if (!linear && !oracle) throw UsageError("k = " + k.to_string() + " needs --oracle");
  const auto pairs = load_pairs(c.inputs);
  const Format fmt = c.format();
  if (fmt == Format::dot) throw UsageError("double-distance has no DOT output; use the graph command");
  std::vector<json> items(pairs.size());
  std::vector<std::uint8_t> disagree(pairs.size(), 0);
  run_jobs(
      pairs.size(), c.jobs,
      [&](std::size_t i) {
        const auto& p = pairs[i];
        DoubleDistanceOptions opt;
        opt.use_oracle = !linear;
        opt.verify_with_oracle = linear && oracle;
        opt.oracle_cap = oracle_cap;
        std::ostringstream trace;
        if (c.verbose && fmt == Format::text) opt.sigma6.trace = &trace;
        const DoubleDistanceResult r = double_distance(p.first.genome, p.second.genome, k, opt);
        const bool checked = r.oracle_score.has_value() && linear;
        if (checked && !r.oracle_agrees()) disagree[i] = 1;

        if (fmt == Format::json) {
          json j{{"genomes", {p.first.name, p.second.name}},
                 {"n_star", r.n_star},
                 {"k", k.to_string()},
                 {"method", std::string(to_string(r.method))},
                 {"distance", rational(r.distance)},
                 {"score", rational(r.score.value)},
                 {"solution", solution_bits(r.solution)},
                 {"census", census_json(r.score.census)}};
          json fixes{{"two_cycles", r.fixes.two_cycles},
                     {"two_cycle_squares", r.fixes.two_cycle_squares},
                     {"zero_paths", r.fixes.zero_paths},
                     {"symmetric_squares", r.fixes.symmetric_squares}};
          json stats{{"fixes", fixes}};
          if (r.sigma4)
            stats["sigma4"] = json{{"two_paths", r.sigma4->two_paths},
                                   {"four_cycles", r.sigma4->four_cycles},
                                   {"leftover_squares", r.sigma4->leftover_squares}};
          if (r.sigma6) stats["sigma6"] = sigma6_stats_json(*r.sigma6);
          j["stats"] = stats;
          if (r.oracle_score) {
            j["oracle"] = json{{"score", rational(r.oracle_score->value)},
                               {"distance", rational(HalfInt(static_cast<std::int64_t>(2 * r.n_star)) -
                                                     r.oracle_score->value)},
                               {"evaluated", r.oracle_evaluated}};
            if (checked) j["oracle"]["agrees"] = r.oracle_agrees();
          }
          items[i] = j;
          return std::string();
        }

        std::ostringstream o;
        if (pairs.size() > 1) o << "# " << p.first.name << " vs " << p.second.name << "\n";
        if (c.verbose) {
          o << trace.str();
          o << "method: " << to_string(r.method) << "\n";
          o << "fixes: " << r.fixes.two_cycles << " two-cycles, " << r.fixes.two_cycle_squares << " squares, "
            << r.fixes.zero_paths << " zero-paths, " << r.fixes.symmetric_squares << " symmetric squares\n";
          if (r.sigma4)
            o << "sigma4: " << r.sigma4->two_paths << " two-paths, " << r.sigma4->four_cycles << " four-cycles, "
              << r.sigma4->leftover_squares << " leftover squares\n";
          if (r.sigma6)
            o << "sigma6: " << r.sigma6->ambiguous_components << " ambiguous components, " << r.sigma6->bubbles
              << " bubbles, " << r.sigma6->double_lines << " double-lines, " << r.sigma6->path_lines
              << " path-lines, widest table " << r.sigma6->max_scope << "\n";
          if (r.oracle_score) o << "oracle: " << r.oracle_evaluated << " solutions evaluated\n";
          o << census_text(r.score.census);
        }
        o << "n_* = " << r.n_star << "\n";
        o << "solution = " << solution_bits(r.solution) << "\n";
        o << distance_name(k, true) << " = " << value_text(r.distance, c.decimal);
        if (checked) {
          if (r.oracle_agrees()) {
            o << " (oracle agrees)";
          } else {
            o << " (oracle disagrees: "
              << value_text(HalfInt(static_cast<std::int64_t>(2 * r.n_star)) - r.oracle_score->value, c.decimal)
              << ")";
          }
        }
        o << "\n";
        return o.str();
      },
      out);
  if (fmt == Format::json) write_json_results(items, out);
  return std::any_of(disagree.begin(), disagree.end(), [](std::uint8_t x) { return x != 0; }) ? 1 : 0;
}

struct GenerateFlags {
  std::uint64_t seed = 1;
  std::size_t n = 0;
  std::size_t linear = 1;
  std::size_t circular = 0;
  std::size_t dcj = 0;
  std::size_t count = 1;
  std::string output;
};

int cmd_generate(const GenerateFlags& f, Format fmt, std::ostream& out) {
  if (f.output.empty() && fmt == Format::dot) throw UsageError("generate has no DOT output");
  std::vector<json> items;
  for (std::size_t i = 0; i < f.count; ++i) {
    GenSpec spec;
    spec.seed = f.seed + i;
    spec.n_star = f.n;
    spec.linear_chroms = f.linear;
    spec.circular_chroms = f.circular;
    spec.dcj_ops = f.dcj;
    try {
      validate(spec);
    } catch (const InputError& e) {
      throw UsageError(e.what());
    }
    const Genome s = random_singular(spec);
    SplitMix64 rng(spec.seed);
    const Genome d = scrambled_double(s, spec.dcj_ops, rng.next());
    const std::string meta = "# seed=" + std::to_string(spec.seed) + " j=" + std::to_string(spec.dcj_ops);
    const std::string text = meta + "\n" + serialize_genome(s, "S") + serialize_genome(d, "D");
    if (!f.output.empty()) {
      std::filesystem::create_directories(f.output);
      char name[32];
      std::snprintf(name, sizeof name, "instance_%04zu.genomes", i);
      std::ofstream file(std::filesystem::path(f.output) / name);
      if (!file) throw InputError("cannot write into " + f.output);
      file << text;
    } else if (fmt == Format::json) {
      items.push_back(json{{"seed", spec.seed}, {"j", spec.dcj_ops}, {"S", serialize_genome(s)}, {"D", serialize_genome(d)}});
    } else {
      if (i > 0) out << "\n";
      out << text;
    }
  }
  if (f.output.empty() && fmt == Format::json) write_json_results(items, out);
  if (!f.output.empty()) out << "wrote " << f.count << " instance(s) to " << f.output << "\n";
  return 0;
}

int cmd_graph(const Common& c, const std::string& stage, std::ostream& out) {
  const auto pairs = load_pairs(c.inputs);
  if (pairs.size() != 1) throw InputError("graph takes exactly one pair of genomes");
  const auto& p = pairs[0];
  const Format fmt = c.format();
  std::string dot;
  json summary{{"stage", stage}};
  if (stage == "bg") {
    const BreakpointGraph bg = build_bg(p.first.genome, p.second.genome);
    dot = bg.to_dot();
    summary["vertices"] = bg.vertex_count();
    summary["edges"] = bg.edge_count(0) + bg.edge_count(1);
    summary["census"] = census_json(bg.census());
  } else {
    const AmbiguousBreakpointGraph g = build_abg(p.first.genome, p.second.genome);
    summary["vertices"] = g.vertex_count();
    summary["squares"] = g.square_count();
    summary["d_edges"] = g.d_edge_count();
    summary["d_telomeres"] = g.d_telomere_count();
    summary["s_telomeres"] = g.s_telomere_count();
    if (stage == "abg") {
      const Sigma6Result r = solve_sigma6(g);
      dot = g.to_dot(&r.solution);
    } else {
      Solution tau(g.square_count());
      fix_two_cycles(g, tau);
      fix_symmetric_squares(g, tau);
      detect_and_fix_triplets(g, tau);
      const PrunedGraph pg = prune(g, tau);
      dot = pg.to_dot(g);
      summary["preserved_edges"] = std::count(pg.preserved.begin(), pg.preserved.end(), 1);
      summary["ambiguous_components"] = pg.ambiguous_count();
      summary["resolved_cycles"] = pg.resolved_cycles;
      summary["resolved_paths"] = pg.resolved_paths;
      summary["zero_paths"] = pg.zero_paths;
    }
  }
  if (fmt == Format::dot) {
    out << dot;
  } else if (fmt == Format::json) {
    out << summary.dump(2) << "\n";
  } else {
    for (const auto& [key, value] : summary.items()) {
      if (value.is_object()) continue;
      out << key << " = " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sigma-k distances of genomes and double distances against duplicated genomes", "sdd"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub, bool with_k) {
    sub->add_option("inputs", common.inputs, "Genome files")->required()->check(CLI::ExistingFile);
    if (with_k) sub->add_option("--k", common.k_text, "Even k >= 2, or inf")->capture_default_str();
    sub->add_option("--format", common.format_text, "Output format")
        ->check(CLI::IsMember({"text", "json", "dot"}))
        ->capture_default_str();
    sub->add_flag("--decimal", common.decimal, "Print distances as decimals");
    sub->add_option("--jobs", common.jobs, "Worker threads over input pairs")->check(CLI::PositiveNumber);
  };

  auto* distance_cmd = app.add_subcommand("distance", "sigma_k distance of canonical pairs");
  add_common(distance_cmd, true);

  bool oracle = false;
  std::size_t oracle_cap = 24;
  auto* dd_cmd = app.add_subcommand("double-distance", "sigma_k double distance of singular/duplicated pairs");
  add_common(dd_cmd, true);
  dd_cmd->add_flag("--oracle", oracle, "Check against (or, beyond k = 6, solve by) exhaustive search");
  dd_cmd->add_option("--oracle-cap", oracle_cap, "Largest square count the oracle accepts")->capture_default_str();
  dd_cmd->add_flag("-v,--verbose", common.verbose, "Per-phase statistics");

  GenerateFlags gen;
  auto* gen_cmd = app.add_subcommand("generate", "Random singular genome and scrambled double");
  gen_cmd->add_option("--seed", gen.seed, "Seed of the first instance")->capture_default_str();
  gen_cmd->add_option("--n", gen.n, "Number of gene families")->required();
  gen_cmd->add_option("--linear", gen.linear, "Linear chromosomes")->capture_default_str();
  gen_cmd->add_option("--circular", gen.circular, "Circular chromosomes")->capture_default_str();
  gen_cmd->add_option("--dcj", gen.dcj, "Random DCJs applied to the doubling")->capture_default_str();
  gen_cmd->add_option("--count", gen.count, "Instances, seeds seed..seed+count-1")->capture_default_str();
  gen_cmd->add_option("-o,--output", gen.output, "Directory for one file per instance");
  gen_cmd->add_option("--format", common.format_text, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string stage = "bg";
  auto* graph_cmd = app.add_subcommand("graph", "Render a breakpoint, ambiguous or pruned graph");
  add_common(graph_cmd, false);
  graph_cmd->add_option("--stage", stage, "bg, abg or pg")->check(CLI::IsMember({"bg", "abg", "pg"}))->capture_default_str();
  graph_cmd->add_flag("--dot", common.dot, "Emit DOT (same as --format dot)");

  std::vector<const char*> argv{"sdd"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*distance_cmd) return cmd_distance(common, out);
    if (*dd_cmd) return cmd_double_distance(common, oracle, oracle_cap, out);
    if (*gen_cmd) return cmd_generate(gen, common.format(), out);
    if (*graph_cmd) return cmd_graph(common, stage, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const FileParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace sdd
