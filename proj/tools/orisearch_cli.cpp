// orisearch CLI: solve | reduce | generate | verify | bench over the shared
// JSON document formats. Exit codes are the machine contract: 0 feasible /
// accepted / done, 1 infeasible / rejected, 2 input error, 3 budget
// exceeded. Human-readable diagnostics go to standard error only.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "orisearch.h"

namespace {

constexpr int kExitFeasible = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

int exit_code(ors_status status) {
  if (status == ORS_OK) return kExitFeasible;
  if (status == ORS_ERR_BUDGET) return kExitBudget;
  return kExitInputError;
}

int report_failure(const char* stage, ors_status status) {
  std::cerr << "orisearch: " << stage << ": " << ors_last_error() << '\n';
  return exit_code(status);
}

struct DocHandle {
  ors_document* doc = nullptr;
  ~DocHandle() { ors_document_free(doc); }
  DocHandle() = default;
  DocHandle(const DocHandle&) = delete;
  DocHandle& operator=(const DocHandle&) = delete;
};

struct StrHandle {
  char* text = nullptr;
  ~StrHandle() { ors_string_free(text); }
  StrHandle() = default;
  StrHandle(const StrHandle&) = delete;
  StrHandle& operator=(const StrHandle&) = delete;
};

bool read_text(const std::string& path, std::string* out) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    *out = buffer.str();
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  *out = buffer.str();
  return true;
}

bool write_text(const std::string& path, std::string text) {
  if (text.empty() || text.back() != '\n') text.push_back('\n');
  if (path.empty() || path == "-") {
    std::cout << text;
    return static_cast<bool>(std::cout);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out);
}

// 0 on success; an exit code (>= 2) on failure.
int load_document(const std::string& path, ors_document** doc) {
  std::string text;
  if (!read_text(path, &text)) {
    std::cerr << "orisearch: cannot read '" << path << "'\n";
    return kExitInputError;
  }
  const ors_status status = ors_document_parse(text.c_str(), doc);
  if (status != ORS_OK) return report_failure("parse", status);
  return 0;
}

int emit_document(const ors_document* doc, const std::string& out_path) {
  StrHandle text;
  const ors_status status = ors_document_to_json(doc, &text.text);
  if (status != ORS_OK) return report_failure("serialize", status);
  if (!write_text(out_path, text.text)) {
    std::cerr << "orisearch: cannot write '" << out_path << "'\n";
    return kExitInputError;
  }
  return 0;
}

int run_solve(const std::string& in, const std::string& solver,
              const ors_options& opts, const std::string& out_path) {
  DocHandle instance;
  if (int rc = load_document(in, &instance.doc)) return rc;
  DocHandle outcome;
  const ors_status status =
      ors_solve(instance.doc, solver.c_str(), &opts, &outcome.doc);
  if (status != ORS_OK) return report_failure("solve", status);
  StrHandle text;
  const ors_status dump = ors_document_to_json(outcome.doc, &text.text);
  if (dump != ORS_OK) return report_failure("serialize", dump);
  if (!write_text(out_path, text.text)) {
    std::cerr << "orisearch: cannot write '" << out_path << "'\n";
    return kExitInputError;
  }
  const auto parsed = nlohmann::json::parse(text.text);
  return parsed.at("status").get<std::string>() == "feasible"
             ? kExitFeasible
             : kExitInfeasible;
}

int run_reduce(const std::string& in, const std::string& target,
               const ors_options& opts, const std::string& out_path) {
  DocHandle instance;
  if (int rc = load_document(in, &instance.doc)) return rc;
  DocHandle reduced;
  const ors_status status =
      ors_reduce(instance.doc, target.c_str(), &opts, &reduced.doc);
  if (status != ORS_OK) return report_failure("reduce", status);
  return emit_document(reduced.doc, out_path);
}

int run_generate(const std::string& kind, const std::string& params,
                 const std::string& out_path) {
  DocHandle generated;
  const ors_status status =
      ors_generate(kind.c_str(), params.c_str(), &generated.doc);
  if (status != ORS_OK) return report_failure("generate", status);
  return emit_document(generated.doc, out_path);
}

int run_verify(const std::string& in, const std::string& witness_path,
               const ors_options& opts, const std::string& out_path) {
  DocHandle instance;
  if (int rc = load_document(in, &instance.doc)) return rc;
  DocHandle witness;
  if (!witness_path.empty()) {
    if (int rc = load_document(witness_path, &witness.doc)) return rc;
  }
  int verdict = 0;
  StrHandle report;
  const ors_status status = ors_verify(instance.doc, witness.doc, &opts,
                                       &verdict, &report.text);
  if (status != ORS_OK) return report_failure("verify", status);
  if (!write_text(out_path, report.text)) {
    std::cerr << "orisearch: cannot write '" << out_path << "'\n";
    return kExitInputError;
  }
  return verdict ? kExitFeasible : kExitInfeasible;
}

int run_bench(const std::string& params, const std::string& out_path) {
  StrHandle csv;
  const ors_status status = ors_bench(params.c_str(), &csv.text);
  if (status != ORS_OK) return report_failure("bench", status);
  if (!write_text(out_path, csv.text)) {
    std::cerr << "orisearch: cannot write '" << out_path << "'\n";
    return kExitInputError;
  }
  return kExitFeasible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Partite-clique solvers, arrangement verifiers, and seeded instance "
      "generators."};
  app.set_version_flag("--version", ors_version());
  app.require_subcommand(1);

  ors_options opts;
  ors_options_init(&opts);
  std::string in = "-";
  std::string out;
  std::string solver = "exact";
  std::string target;
  std::string kind;
  std::string witness;

  auto* solve = app.add_subcommand("solve", "Run a solver on an instance");
  solve->add_option("input", in, "Instance JSON file, or - for stdin");
  solve->add_option("--solver", solver, "exact | star | m2 | partial")
      ->capture_default_str();
  solve->add_option("--budget", opts.budget,
                    "Search-space cap for exact solvers")
      ->capture_default_str();
  solve->add_option("--out", out, "Outcome path (default stdout)");

  auto* reduce = app.add_subcommand("reduce", "Rewrite into another problem");
  reduce->add_option("input", in, "Instance JSON file, or - for stdin");
  reduce
      ->add_option("--target", target,
                   "partite | twosat | wclique | w2sat | gap | lines")
      ->required();
  reduce
      ->add_option("--gap-exponent", opts.gap_exponent,
                   "k of the 2^(n^k) gap weighting")
      ->capture_default_str();
  reduce->add_option("--out", out, "Output path (default stdout)");

  auto* generate = app.add_subcommand("generate", "Build a fresh instance");
  generate
      ->add_option("kind", kind,
                   "planted-circle | planted-partite | metric | "
                   "random-partite | random-cnf | orientations | points")
      ->required();
  int n = 0, m = 0, l = 0, vars = 0, clauses = 0, width = 0, dim = 0,
      power = 0, count = 0;
  double noise = 0, edge_prob = 0;
  generate->add_option("--n", n, "Groups / projections / vertices");
  generate->add_option("--m", m, "Group size (or clause width for cnf)");
  generate->add_option("--l", l, "Allowed points per constrained pair");
  generate->add_option("--noise", noise, "Angle perturbation, radians");
  generate->add_option("--edge-prob", edge_prob, "Cross-pair edge probability");
  generate->add_option("--vars", vars, "Variable count");
  generate->add_option("--clauses", clauses, "Clause count");
  generate->add_option("--width", width, "Clause width");
  generate->add_option("--dim", dim, "Embedding dimension");
  generate->add_option("--power", power, "Distance power (beta = 2^(power-1))");
  generate->add_option("--count", count, "General-position point count");
  generate->add_option("--seed", opts.seed, "Generator seed")
      ->capture_default_str();
  generate->add_option("--out", out, "Output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check a witness");
  verify->add_option("input", in, "Instance JSON file, or - for stdin");
  verify->add_option("--witness", witness,
                     "Witness document (omit to use embedded ground truth)");
  verify->add_option("--tol", opts.tol, "Verification tolerance")
      ->capture_default_str();
  verify->add_option("--q", opts.q, "Arrangement-error exponent")
      ->capture_default_str();
  verify->add_option("--out", out, "Report path (default stdout)");

  auto* bench = app.add_subcommand("bench", "Star-vs-exact ratio sweep (CSV)");
  int n_min = 3, n_max = 8, m_min = 2, m_max = 4, bench_dim = 3,
      bench_power = 1, seeds = 50;
  bench->add_option("--n-min", n_min, "")->capture_default_str();
  bench->add_option("--n-max", n_max, "")->capture_default_str();
  bench->add_option("--m-min", m_min, "")->capture_default_str();
  bench->add_option("--m-max", m_max, "")->capture_default_str();
  bench->add_option("--dim", bench_dim, "")->capture_default_str();
  bench->add_option("--power", bench_power, "")->capture_default_str();
  bench->add_option("--seeds", seeds, "Instances per (n, m) cell")
      ->capture_default_str();
  bench->add_option("--seed", opts.seed, "Sweep base seed")
      ->capture_default_str();
  bench->add_option("--budget", opts.budget, "Exact-solver budget")
      ->capture_default_str();
  bench->add_option("--out", out, "CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Keep --help/--version at 0 but fold usage errors into the input-error
    // exit code so scripts see one value for "bad invocation".
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  if (solve->parsed()) return run_solve(in, solver, opts, out);
  if (reduce->parsed()) return run_reduce(in, target, opts, out);
  if (generate->parsed()) {
    nlohmann::json params = nlohmann::json::object();
    if (generate->count("--n")) params["n"] = n;
    if (generate->count("--m")) params["m"] = m;
    if (generate->count("--l")) params["l"] = l;
    if (generate->count("--noise")) params["noise"] = noise;
    if (generate->count("--edge-prob")) params["edge_prob"] = edge_prob;
    if (generate->count("--vars")) params["vars"] = vars;
    if (generate->count("--clauses")) params["clauses"] = clauses;
    if (generate->count("--width")) params["m"] = width;
    if (generate->count("--dim")) params["dim"] = dim;
    if (generate->count("--power")) params["power"] = power;
    if (generate->count("--count")) params["count"] = count;
    if (generate->count("--seed")) params["seed"] = opts.seed;
    return run_generate(kind, params.dump(), out);
  }
  if (verify->parsed()) return run_verify(in, witness, opts, out);
  if (bench->parsed()) {
    nlohmann::json params = {
        {"n_min", n_min},   {"n_max", n_max}, {"m_min", m_min},
        {"m_max", m_max},   {"dim", bench_dim}, {"power", bench_power},
        {"seeds", seeds},   {"seed", opts.seed}, {"budget", opts.budget}};
    return run_bench(params.dump(), out);
  }
  return kExitInputError;
}
