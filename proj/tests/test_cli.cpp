#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "sdd/cli.hpp"

using namespace sdd;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto dir = std::filesystem::temp_directory_path() / "sdd_cli_tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << content;
  return path.string();
}

bool contains(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("cli distance") {
  const auto fig2 = temp_file("fig2.genomes", ">S1\n(1 2)[3 -4]\n>S2\n(1 -3 2)[4]\n");
  auto r = run({"distance", fig2, "--k", "2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "d_sigma2 = 5/2\n"));
  CHECK(contains(r.out, "n_* = 4\n"));
  CHECK(run({"distance", fig2, "--k", "2", "--decimal"}).out.find("d_sigma2 = 2.5") != std::string::npos);
  CHECK(contains(run({"distance", fig2, "--k", "inf"}).out, "d_dcj = 2\n"));

  const auto same = temp_file("same.genomes", ">A\n[1 -2 3](4)\n>B\n[1 -2 3](4)\n");
  CHECK(contains(run({"distance", same, "--k", "4"}).out, "d_sigma4 = 0\n"));

  const auto json_out = nlohmann::json::parse(run({"distance", fig2, "--k", "2", "--format", "json"}).out);
  CHECK(json_out["n_star"] == 4);
  CHECK(json_out["distance"]["num"] == 5);
  CHECK(json_out["distance"]["den"] == 2);
  CHECK(json_out["census"]["cycles"]["2"] == 1);
  CHECK(json_out["census"]["paths"]["0"] == 1);
  CHECK(json_out["census"]["paths"]["4"] == 1);
}

TEST_CASE("cli distance with two files") {
  const auto a = temp_file("a.genomes", ">S1\n(1 2)[3 -4]\n");
  const auto b = temp_file("b.genomes", ">S2\n(1 -3 2)[4]\n");
  CHECK(contains(run({"distance", a, b, "--k", "2"}).out, "d_sigma2 = 5/2"));
}

TEST_CASE("cli double-distance") {
  const auto fig3 = temp_file("fig3.genomes", ">S\n[1 2 3]\n>D\n[1 2 -3 1][-3 2]\n");
  auto r = run({"double-distance", fig3, "--k", "6", "--oracle"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "d2_sigma6 = 3 (oracle agrees)\n"));
  CHECK(contains(r.out, "solution = "));
  CHECK(contains(run({"double-distance", fig3, "--k", "2"}).out, "d2_sigma2 = 4\n"));
  CHECK(contains(run({"double-distance", fig3, "--k", "4", "--decimal"}).out, "d2_sigma4 = 3.5\n"));
  auto verbose = run({"double-distance", fig3, "--k", "6", "-v"});
  CHECK(contains(verbose.out, "prune:"));
  CHECK(contains(verbose.out, "fixes:"));

  const auto identity = temp_file("identity.genomes", ">S\n(1 2)[3 4]\n>D\n(1 2)(1 2)[3 4][3 4]\n");
  CHECK(contains(run({"double-distance", identity, "--k", "4"}).out, "d2_sigma4 = 0\n"));

  auto needs_oracle = run({"double-distance", fig3, "--k", "8"});
  CHECK(needs_oracle.code == 2);
  CHECK(contains(run({"double-distance", fig3, "--k", "8", "--oracle"}).out, "d2_sigma8 = 3\n"));

  const auto j = nlohmann::json::parse(run({"double-distance", fig3, "--k", "6", "--oracle", "--format", "json"}).out);
  CHECK(j["distance"]["num"] == 3);
  CHECK(j["oracle"]["agrees"] == true);
  CHECK(j["oracle"]["evaluated"] == 4);
  CHECK(j["stats"]["sigma6"]["formula_score"]["num"] == 3);
  CHECK(j["stats"]["fixes"]["two_cycles"] == 1);
}

TEST_CASE("cli exit codes") {
  const auto bad = temp_file("bad.genomes", ">S\n[1 2\n");
  auto r = run({"distance", bad});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "line 2, column 1"));

  const auto fig2 = temp_file("fig2.genomes", ">S1\n(1 2)[3 -4]\n>S2\n(1 -3 2)[4]\n");
  CHECK(run({"double-distance", fig2}).code == 3);
  CHECK(run({"distance", fig2, "--k", "3"}).code == 2);
  CHECK(run({"distance", "/nonexistent/file"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);

  const auto mismatch = temp_file("mismatch.genomes", ">A\n[1 2]\n>B\n[1 3]\n");
  CHECK(run({"distance", mismatch}).code == 3);

  const auto fig3 = temp_file("fig3.genomes", ">S\n[1 2 3]\n>D\n[1 2 -3 1][-3 2]\n");
  CHECK(run({"double-distance", fig3, "--k", "8", "--oracle", "--oracle-cap", "1"}).code == 4);
  CHECK(run({"generate", "--n", "1", "--linear", "2"}).code == 2);
}

TEST_CASE("cli generate feeds double-distance") {
  auto g1 = run({"generate", "--n", "7", "--linear", "1", "--circular", "1", "--dcj", "0", "--seed", "5", "--count", "3"});
  REQUIRE(g1.code == 0);
  CHECK(contains(g1.out, "# seed=5 j=0\n"));
  CHECK(contains(g1.out, "# seed=7 j=0\n"));
  CHECK(run({"generate", "--n", "7", "--linear", "1", "--circular", "1", "--dcj", "0", "--seed", "5", "--count", "3"})
            .out == g1.out);
  const auto file = temp_file("generated.genomes", g1.out);
  auto r = run({"double-distance", file, "--k", "6", "--jobs", "2"});
  CHECK(r.code == 0);
  std::size_t zeros = 0;
  for (auto pos = r.out.find("d2_sigma6 = 0\n"); pos != std::string::npos; pos = r.out.find("d2_sigma6 = 0\n", pos + 1))
    ++zeros;
  CHECK(zeros == 3);

  auto scrambled = run({"generate", "--n", "6", "--dcj", "4", "--seed", "9", "--count", "4"});
  const auto f2 = temp_file("scrambled.genomes", scrambled.out);
  CHECK(run({"double-distance", f2, "--k", "6", "--jobs", "3"}).out ==
        run({"double-distance", f2, "--k", "6", "--jobs", "1"}).out);
  CHECK(run({"double-distance", f2, "--k", "6", "--oracle"}).code == 0);
}

TEST_CASE("cli graph") {
  const auto fig2 = temp_file("fig2.genomes", ">S1\n(1 2)[3 -4]\n>S2\n(1 -3 2)[4]\n");
  auto bg = run({"graph", fig2, "--stage", "bg"});
  CHECK(contains(bg.out, "vertices = 8\n"));
  CHECK(contains(bg.out, "edges = 6\n"));
  CHECK(contains(run({"graph", fig2, "--dot"}).out, "graph "));

  const auto fig3 = temp_file("fig3.genomes", ">S\n[1 2 3]\n>D\n[1 2 -3 1][-3 2]\n");
  auto abg = run({"graph", fig3, "--stage", "abg"});
  CHECK(contains(abg.out, "vertices = 12\n"));
  CHECK(contains(abg.out, "squares = 2\n"));
  const std::string abg_dot = run({"graph", fig3, "--stage", "abg", "--dot"}).out;
  const std::string pg_dot = run({"graph", fig3, "--stage", "pg", "--format", "dot"}).out;
  auto count = [](const std::string& s, const std::string& n) {
    std::size_t c = 0;
    for (auto p = s.find(n); p != std::string::npos; p = s.find(n, p + 1)) ++c;
    return c;
  };
  CHECK(count(abg_dot, "color=red") == 8);
  CHECK(count(pg_dot, "color=red") == 4);
}
