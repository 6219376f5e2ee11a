#pragma once

#include <string>
#include <string_view>

#include "rreduct/algorithms.hpp"
#include "rreduct/compare.hpp"
#include "rreduct/decision_table.hpp"
#include "rreduct/rules.hpp"

// Rendering and parsing of rule sets, reports, conflicts and traces.
// External text is always decoded (original strings, never codes) and object
// numbers are 1-based; internal indices stay 0-based.

namespace rreduct {

/// {"rules":[{"conditions":{...},"decision":"...","support":[...],"size":k}]}
/// in canonical order. support ids are 1-based rows of the table.
std::string ruleset_to_json(const DecisionTable& table, const RuleSet& rules,
                            int indent = 2);

/// Inverse of ruleset_to_json against the same table. Unknown feature names,
/// value or decision texts and support mismatches raise ParseError.
RuleSet ruleset_from_json(const DecisionTable& table, std::string_view json_text);

/// One row per rule: value text per feature column or NaN when the feature
/// is unconstrained, then the decision, then the 1-based origin object.
///   NaN NaN NaN 3 | 0 | 1
std::string ruleset_to_table(const DecisionTable& table, const RuleSet& rules);

/// Spreadsheet form: feature columns (NaN for unconstrained), decision,
/// origin, semicolon-joined support.
std::string ruleset_to_csv(const DecisionTable& table, const RuleSet& rules);

std::string conflicts_to_text(const DecisionTable& table,
                              const ConflictReport& report);

/// Per object, the visited subsets with their verdicts, e.g. "F3,F4: pruned".
std::string trace_to_text(const DecisionTable& table, const RunStats& stats);

std::string report_to_json(const ComparisonReport& report, int indent = 2);
std::string report_to_text(const ComparisonReport& report);
/// One "algorithm,metric,value" row per metric.
std::string report_to_csv(const ComparisonReport& report);

std::string_view verdict_name(Verdict v);
std::string_view prune_mode_name(PruneMode mode);
PruneMode prune_mode_from_name(std::string_view name);

}  // namespace rreduct
