#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rreduct/algorithms.hpp"
#include "rreduct/decision_table.hpp"

namespace rreduct {

enum class Algo { rg, mrg, prg, oracle };

std::string_view algo_name(Algo algo);
/// Throws std::invalid_argument for unknown names.
Algo algo_from_name(std::string_view name);

struct AlgoRun {
  Algo algo = Algo::rg;
  PruneMode prune_mode = PruneMode::superset;  // meaningful for prg only
  RuleSet rules;
  RunStats stats;
  std::map<int, std::size_t> rules_by_size;
  std::uint64_t raw_rules = 0;
};

struct ComparisonReport {
  int feature_count = 0;
  int row_count = 0;
  std::string fingerprint;  // "fnv1a64:<hex>" of the table content
  std::vector<AlgoRun> runs;
  // runs x runs canonical rule-set equality; symmetric, true diagonal
  std::vector<std::vector<bool>> agreement;
};

/// Run each requested algorithm on the table and assemble the report.
/// Everything except the wall-time fields is a pure function of the inputs.
ComparisonReport compare(const DecisionTable& table,
                         const std::vector<Algo>& algos,
                         PruneMode prune_mode = PruneMode::superset,
                         const RunOptions& options = {});

}  // namespace rreduct
