#include "rreduct/compare.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace rreduct {

std::string_view algo_name(Algo algo) {
  switch (algo) {
    case Algo::rg: return "rg";
    case Algo::mrg: return "mrg";
    case Algo::prg: return "prg";
    case Algo::oracle: return "oracle";
  }
  return "?";
}

Algo algo_from_name(std::string_view name) {
  if (name == "rg") return Algo::rg;
  if (name == "mrg") return Algo::mrg;
  if (name == "prg") return Algo::prg;
  if (name == "oracle") return Algo::oracle;
  throw std::invalid_argument("unknown algorithm '" + std::string(name) +
                              "' (expected rg, mrg, prg or oracle)");
}

ComparisonReport compare(const DecisionTable& table, const std::vector<Algo>& algos,
                         PruneMode prune_mode, const RunOptions& options) {
  ComparisonReport report;
  report.feature_count = table.feature_count();
  report.row_count = table.row_count();
  {
    std::ostringstream hex;
    hex << "fnv1a64:" << std::hex << table.fingerprint();
    report.fingerprint = hex.str();
  }

  for (Algo algo : algos) {
    AlgoRun run;
    run.algo = algo;
    run.prune_mode = prune_mode;
    switch (algo) {
      case Algo::rg: {
        auto r = run_rg(table, options);
        run.rules = std::move(r.rules);
        run.stats = std::move(r.stats);
        break;
      }
      case Algo::mrg: {
        auto r = run_mrg(table, options);
        run.rules = std::move(r.rules);
        run.stats = std::move(r.stats);
        break;
      }
      case Algo::prg: {
        auto r = run_prg(table, prune_mode, options);
        run.rules = std::move(r.rules);
        run.stats = std::move(r.stats);
        break;
      }
      case Algo::oracle: {
        const auto start = std::chrono::steady_clock::now();
        run.rules = run_oracle(table);
        run.stats.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        break;
      }
    }
    run.raw_rules = algo == Algo::oracle ? run.rules.size()
                                         : run.stats.rules_emitted_raw;
    run.rules_by_size = run.rules.count_by_size();
    report.runs.push_back(std::move(run));
  }

  const std::size_t k = report.runs.size();
  report.agreement.assign(k, std::vector<bool>(k, false));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      report.agreement[a][b] = report.runs[a].rules == report.runs[b].rules;
  return report;
}

}  // namespace rreduct
