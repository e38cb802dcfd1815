#include "ors/bench.hpp"

#include <chrono>
#include <sstream>

#include "ors/error.hpp"
#include "ors/generators.hpp"
#include "ors/rng.hpp"
#include "ors/weight_solvers.hpp"

namespace ors {

std::uint64_t bench_cell_seed(std::uint64_t base_seed, int n, int m,
                              int seed_index) {
  std::uint64_t h = SplitRng::mix(base_seed ^ 0x9E3779B97F4A7C15ull);
  h = SplitRng::mix(h ^ static_cast<std::uint64_t>(n));
  h = SplitRng::mix(h ^ static_cast<std::uint64_t>(m));
  return SplitRng::mix(h ^ static_cast<std::uint64_t>(seed_index));
}

std::vector<BenchRow> run_ratio_bench(const BenchParams& params) {
  if (params.n_min < 1 || params.n_max < params.n_min || params.m_min < 1 ||
      params.m_max < params.m_min || params.seeds < 1) {
    fail(Errc::invalid_argument, "bench sweep ranges are empty or invalid");
  }

  std::vector<BenchRow> rows;
  for (int n = params.n_min; n <= params.n_max; ++n) {
    for (int m = params.m_min; m <= params.m_max; ++m) {
      for (int s = 0; s < params.seeds; ++s) {
        BenchRow row;
        row.n = n;
        row.m = m;
        row.seed = bench_cell_seed(params.base_seed, n, m, s);

        const MetricInstance instance =
            metric_weighted_instance(n, m, params.dim, params.power, row.seed);
        row.beta = instance.beta;

        const SolveOutcome exact =
            exact_min_weight_clique(instance.graph, params.budget);
        row.opt = *exact.objective;

        const auto start = std::chrono::steady_clock::now();
        const SolveOutcome star = minimum_weight_star(instance.graph);
        const auto stop = std::chrono::steady_clock::now();
        row.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                         stop - start)
                         .count();
        row.star = *star.objective;

        row.ratio = row.opt > 0
                        ? to_double(Rational(row.star) / Rational(row.opt))
                        : 1.0;
        const Rational bound =
            (Rational(1, n) + 2 * Rational(row.beta) * Rational(n - 1, n)) *
            Rational(row.opt);
        row.bound = to_double(bound);

        const BigInt slack = 2 * BigInt(n) * BigInt(n);
        row.within_bound =
            BigInt(n) * row.star <=
            (1 + 2 * row.beta * (n - 1)) * row.opt + BigInt(n) * slack;
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream csv;
  csv << "n,m,beta,seed,opt,star,ratio,bound,micros\n";
  for (const BenchRow& row : rows) {
    csv << row.n << ',' << row.m << ',' << to_decimal(row.beta) << ','
        << row.seed << ',' << to_decimal(row.opt) << ','
        << to_decimal(row.star) << ',' << row.ratio << ',' << row.bound << ','
        << row.micros << '\n';
  }
  return csv.str();
}

}  // namespace ors
