#pragma once

#include <cstdint>
#include <vector>

#include "rreduct/decision_table.hpp"
#include "rreduct/rules.hpp"

namespace rreduct {

// How the tree search treats a node once a reduct is found.
//
//   superset  - mark all strict supersets pruned; both children of every node
//               are still walked. Reproduces the minimal rule set (default).
//   literal   - same marking, but additionally the right subtree of a node
//               where a reduct was just discovered is skipped outright, the
//               way the published pseudocode reads. Kept as a fidelity
//               artifact: it can miss minimal rules and emit non-minimal
//               ones (see run_prg).
enum class PruneMode { superset, literal };

enum class Verdict { reduct, no, pruned };

struct TraceEntry {
  FeatureSubset subset;
  Verdict verdict;
};

struct ObjectStats {
  std::uint64_t predicate_evaluations = 0;  // is_rule_reduct calls
  std::uint64_t nodes_visited = 0;          // tree walk only
  std::uint64_t nodes_pruned = 0;           // 0->1 key transitions
  std::uint64_t candidates_generated = 0;   // level-wise candidates enumerated
  std::uint64_t rules_emitted_raw = 0;      // pre-dedup contributions
  std::vector<TraceEntry> trace;            // only with RunOptions::collect_trace
};

struct RunStats {
  std::uint64_t predicate_evaluations = 0;
  std::uint64_t nodes_visited = 0;
  std::uint64_t nodes_pruned = 0;
  std::uint64_t candidates_generated = 0;
  std::uint64_t rules_emitted_raw = 0;
  std::vector<ObjectStats> per_object;  // indexed by row; sums to the totals
  double wall_seconds = 0.0;
};

struct RunOptions {
  bool collect_trace = false;
};

struct RunResult {
  RuleSet rules;
  RunStats stats;
};

// All four searches require a merged table (pairwise-distinct rows, hence
// consistent); they throw ConflictError on conflicts and
// std::invalid_argument on duplicate rows.

/// Exhaustive search: every (object, subset) pair with 1 <= |C| <= m-1 that
/// satisfies the reduct predicate is emitted, minimal or not.
RunResult run_rg(const DecisionTable& table, const RunOptions& options = {});

/// Level-wise search over subset sizes 1..m. A candidate C for an object is
/// skipped when an already-found rule applicable to that object has its
/// condition features contained in C, which is what keeps the output minimal.
RunResult run_mrg(const DecisionTable& table, const RunOptions& options = {});

/// Tree search: per object, walk the subset tree in pre-order, evaluating
/// only unpruned nodes; each discovery prunes all strict supersets. Because
/// the pre-order reaches some supersets before their subsets (e.g. {2,3,4}
/// before {2,4}), a discovery also revokes any previously emitted rule of
/// this object that it strictly refines; the surviving output equals the
/// minimal rule set in superset mode. literal mode documents the pseudocode
/// behavior instead and may diverge from the minimal set.
RunResult run_prg(const DecisionTable& table,
                  PruneMode mode = PruneMode::superset,
                  const RunOptions& options = {});

/// Brute-force reference: per object, every non-empty subset by increasing
/// size, kept unless a previously kept subset for the same object is
/// strictly contained in it. Intended for small instances.
RuleSet run_oracle(const DecisionTable& table);

}  // namespace rreduct
