#include "rreduct/algorithms.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "rreduct/subset_tree.hpp"

namespace rreduct {
namespace {

using Clock = std::chrono::steady_clock;

void require_merged(const DecisionTable& table) {
  auto conflicts = find_conflicts(table);
  if (!conflicts.empty())
    throw ConflictError("table is inconsistent; resolve conflicts first",
                        std::move(conflicts));
  if (!table.rows_distinct())
    throw std::invalid_argument("table has duplicate rows; merge it first");
}

// ascending lexicographic enumeration of the size-r subsets of {0..m-1}
template <typename Fn>
void for_each_subset_of_size(int m, int r, Fn&& fn) {
  std::vector<int> idx(static_cast<std::size_t>(r));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    FeatureSubset s;
    for (int f : idx) s = s.with(f);
    fn(s);
    int k = r - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == m - r + k) --k;
    if (k < 0) return;
    ++idx[static_cast<std::size_t>(k)];
    for (int j = k + 1; j < r; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

void sum_totals(RunStats& stats) {
  for (const auto& os : stats.per_object) {
    stats.predicate_evaluations += os.predicate_evaluations;
    stats.nodes_visited += os.nodes_visited;
    stats.nodes_pruned += os.nodes_pruned;
    stats.candidates_generated += os.candidates_generated;
    stats.rules_emitted_raw += os.rules_emitted_raw;
  }
}

void record(ObjectStats& os, bool tracing, FeatureSubset s, Verdict v) {
  if (tracing) os.trace.push_back({s, v});
}

}  // namespace

RunResult run_rg(const DecisionTable& table, const RunOptions& options) {
  require_merged(table);
  const auto start = Clock::now();
  const int n = table.row_count();
  const int m = table.feature_count();

  RunStats stats;
  stats.per_object.resize(static_cast<std::size_t>(n));
  std::vector<Rule> raw;

  for (int i = 0; i < n; ++i) {
    const auto obj = static_cast<ObjectId>(i);
    auto& os = stats.per_object[static_cast<std::size_t>(i)];
    for (int r = 1; r <= m - 1; ++r) {
      for_each_subset_of_size(m, r, [&](FeatureSubset c) {
        ++os.candidates_generated;
        ++os.predicate_evaluations;
        if (is_rule_reduct(table, obj, c)) {
          ++os.rules_emitted_raw;
          raw.push_back(make_rule(table, obj, c));
          record(os, options.collect_trace, c, Verdict::reduct);
        } else {
          record(os, options.collect_trace, c, Verdict::no);
        }
      });
    }
  }

  sum_totals(stats);
  stats.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return {RuleSet::canonicalize(std::move(raw)), std::move(stats)};
}

RunResult run_mrg(const DecisionTable& table, const RunOptions& options) {
  require_merged(table);
  const auto start = Clock::now();
  const int n = table.row_count();
  const int m = table.feature_count();

  // the decision-value sort only fixes discovery order; the canonical
  // output is order-independent
  std::vector<ObjectId> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](ObjectId a, ObjectId b) {
    return table.decision(a) < table.decision(b);
  });

  RunStats stats;
  stats.per_object.resize(static_cast<std::size_t>(n));
  std::vector<Rule> found;

  for (int r = 1; r <= m; ++r) {
    for (ObjectId obj : order) {
      auto& os = stats.per_object[obj];
      for_each_subset_of_size(m, r, [&](FeatureSubset c) {
        ++os.candidates_generated;
        // a found rule applicable to this object and contained in the
        // candidate makes the candidate redundant; this containment check
        // stands in for the cell-marker revision of the table
        for (const Rule& rule : found) {
          if (rule.features.subset_of(c) && matches(table, obj, rule)) {
            record(os, options.collect_trace, c, Verdict::pruned);
            return;
          }
        }
        ++os.predicate_evaluations;
        if (is_rule_reduct(table, obj, c)) {
          ++os.rules_emitted_raw;
          found.push_back(make_rule(table, obj, c));
          record(os, options.collect_trace, c, Verdict::reduct);
        } else {
          record(os, options.collect_trace, c, Verdict::no);
        }
      });
    }
  }

  sum_totals(stats);
  stats.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return {RuleSet::canonicalize(std::move(found)), std::move(stats)};
}

namespace {

struct TreeSearch {
  const DecisionTable& table;
  SubsetTree& tree;
  ObjectId obj;
  PruneMode mode;
  bool tracing;
  ObjectStats& os;
  std::vector<FeatureSubset> emitted;

  void walk(FeatureSubset node) {
    ++os.nodes_visited;
    bool discovered = false;
    if (tree.pruned(node)) {
      record(os, tracing, node, Verdict::pruned);
    } else {
      ++os.predicate_evaluations;
      if (is_rule_reduct(table, obj, node)) {
        emitted.push_back(node);
        tree.set_key(node);
        os.nodes_pruned += tree.prune_supersets(node);
        discovered = true;
        record(os, tracing, node, Verdict::reduct);
      } else {
        record(os, tracing, node, Verdict::no);
      }
    }
    if (const auto l = tree.left_child(node); !l.empty()) walk(l);
    if (const auto r = tree.right_child(node); !r.empty()) {
      // the published pseudocode passes the right child of a node where a
      // reduct was just declared; superset mode walks it anyway
      if (!(mode == PruneMode::literal && discovered)) walk(r);
    }
  }
};

}  // namespace

RunResult run_prg(const DecisionTable& table, PruneMode mode,
                  const RunOptions& options) {
  require_merged(table);
  const auto start = Clock::now();
  const int n = table.row_count();
  const int m = table.feature_count();

  RunStats stats;
  stats.per_object.resize(static_cast<std::size_t>(n));
  std::vector<Rule> raw;
  SubsetTree tree(m);

  for (int i = 0; i < n; ++i) {
    const auto obj = static_cast<ObjectId>(i);
    auto& os = stats.per_object[static_cast<std::size_t>(i)];
    tree.reset_keys();
    TreeSearch search{table, tree, obj, mode, options.collect_trace, os, {}};
    search.walk(tree.root());

    // The pre-order reaches some supersets before their subsets ({2,3,4}
    // precedes {2,4}), so a discovery can predate the smaller reduct that
    // makes it redundant. Such emissions are revoked here; every minimal
    // reduct survives because nothing ever prunes it.
    for (FeatureSubset s : search.emitted) {
      const bool refined = std::any_of(
          search.emitted.begin(), search.emitted.end(),
          [&](FeatureSubset other) { return other.proper_subset_of(s); });
      if (!refined) {
        ++os.rules_emitted_raw;
        raw.push_back(make_rule(table, obj, s));
      }
    }
  }

  sum_totals(stats);
  stats.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return {RuleSet::canonicalize(std::move(raw)), std::move(stats)};
}

RuleSet run_oracle(const DecisionTable& table) {
  require_merged(table);
  const int n = table.row_count();
  const int m = table.feature_count();

  std::vector<Rule> raw;
  for (int i = 0; i < n; ++i) {
    const auto obj = static_cast<ObjectId>(i);
    std::vector<FeatureSubset> kept;
    for (int r = 1; r <= m; ++r) {
      for_each_subset_of_size(m, r, [&](FeatureSubset c) {
        for (FeatureSubset k : kept)
          if (k.proper_subset_of(c)) return;
        if (is_rule_reduct(table, obj, c)) {
          kept.push_back(c);
          raw.push_back(make_rule(table, obj, c));
        }
      });
    }
  }
  return RuleSet::canonicalize(std::move(raw));
}

}  // namespace rreduct
