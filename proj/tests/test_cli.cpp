#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

// End-to-end checks against the installed command-line binary; the build
// passes its path in CLI_BINARY.

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

const fs::path& scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("orisearch_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

RunResult run_cli(const std::string& args, const std::string& stdin_text) {
  static int counter = 0;
  const fs::path in = scratch_dir() / ("in" + std::to_string(counter));
  const fs::path out = scratch_dir() / ("out" + std::to_string(counter));
  const fs::path err = scratch_dir() / ("err" + std::to_string(counter));
  ++counter;
  spit(in, stdin_text);
  const std::string cmd = std::string("\"") + CLI_BINARY + "\" " + args +
                          " < " + in.string() + " > " + out.string() + " 2> " +
                          err.string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

const char* kTwoGroupClique = R"({
  "kind": "partite_graph",
  "groups": [[0], [1]],
  "edges": [[0, 1]]
})";

const char* kEdgeless = R"({
  "kind": "partite_graph",
  "groups": [[0], [1]],
  "edges": []
})";

// Three groups of two vertices; weight 1 on the triangle (0, 2, 4) and 10
// everywhere else, so the cheapest clique costs 3.
std::string cheap_triangle_json() {
  json weights = json::array();
  for (int gi = 0; gi < 3; ++gi) {
    for (int gj = gi + 1; gj < 3; ++gj) {
      for (int u : {2 * gi, 2 * gi + 1}) {
        for (int v : {2 * gj, 2 * gj + 1}) {
          const bool cheap = u % 2 == 0 && v % 2 == 0;
          weights.push_back(json::array({u, v, cheap ? 1 : 10}));
        }
      }
    }
  }
  json j = {{"kind", "weighted_partite_graph"},
            {"groups", json::array({json::array({0, 1}), json::array({2, 3}),
                                    json::array({4, 5})})},
            {"weights", weights}};
  return j.dump();
}

}  // namespace

TEST_CASE("solve exits 0 on feasible and 1 on infeasible") {
  const auto yes = run_cli("solve -", kTwoGroupClique);
  CHECK(yes.code == 0);
  const json outcome = json::parse(yes.out);
  CHECK(outcome.at("status") == "feasible");
  CHECK(yes.err.empty());

  const auto no = run_cli("solve -", kEdgeless);
  CHECK(no.code == 1);
  CHECK(json::parse(no.out).at("status") == "infeasible");
}

TEST_CASE("the star solver reports the cheap triangle objective") {
  const auto r = run_cli("solve - --solver star", cheap_triangle_json());
  CHECK(r.code == 0);
  const json outcome = json::parse(r.out);
  CHECK(outcome.at("objective").get<std::string>() == "3");
  CHECK(outcome.at("witness").at("picks").at("0") == 0);
}

TEST_CASE("malformed input exits 2 with diagnostics on stderr only") {
  const auto r = run_cli("solve -", "{this is not json");
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("budget overruns exit 3") {
  const auto gen = run_cli("generate metric --n 5 --m 3 --seed 4", "");
  REQUIRE(gen.code == 0);
  const auto r = run_cli("solve - --budget 2", gen.out);
  CHECK(r.code == 3);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("reduce rewrites a graph into cnf on stdout") {
  const auto r = run_cli("reduce - --target twosat", kTwoGroupClique);
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("kind") == "cnf");
}

TEST_CASE("reduce rejects wide groups for the two-sat target") {
  const json wide = {
      {"kind", "partite_graph"},
      {"groups", json::array({json::array({0, 1, 2}), json::array({3, 4, 5})})},
      {"edges", json::array()}};
  const auto r = run_cli("reduce - --target twosat", wide.dump());
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("generate then verify round-trips the planted ground truth") {
  const fs::path inst = scratch_dir() / "planted.json";
  const auto gen = run_cli("generate planted-partite --n 3 --m 2 "
                           "--edge-prob 0.4 --seed 9 --out " +
                               inst.string(),
                           "");
  REQUIRE(gen.code == 0);
  const json doc = json::parse(slurp(inst));
  CHECK(doc.at("kind") == "partite_graph");
  CHECK(doc.contains("ground_truth"));

  const auto verdict = run_cli("verify " + inst.string(), "");
  CHECK(verdict.code == 0);
  CHECK(json::parse(verdict.out).at("accepted") == true);
}

TEST_CASE("verify exits 1 when the witness fails") {
  const fs::path wit = scratch_dir() / "witness.json";
  spit(wit, R"({"kind":"assignment","picks":{"0":0,"1":1}})");
  const auto r = run_cli("verify - --witness " + wit.string(), kEdgeless);
  CHECK(r.code == 1);
  CHECK(json::parse(r.out).at("accepted") == false);
}

TEST_CASE("bench prints the ratio table header") {
  const auto r = run_cli(
      "bench --n-min 3 --n-max 3 --m-min 2 --m-max 2 --seeds 1", "");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n,m,beta,seed,opt,star,ratio,bound,micros\n", 0) == 0);
}

TEST_CASE("usage errors exit 2 and --version exits 0") {
  CHECK(run_cli("conjure", "").code == 2);
  CHECK(run_cli("reduce -", kTwoGroupClique).code == 2);  // missing --target
  const auto v = run_cli("--version", "");
  CHECK(v.code == 0);
  CHECK_FALSE(v.out.empty());
}
