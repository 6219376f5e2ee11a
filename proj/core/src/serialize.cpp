#include "rreduct/serialize.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "rreduct/generator.hpp"

namespace rreduct {

using json = nlohmann::ordered_json;

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::reduct: return "reduct";
    case Verdict::no: return "no";
    case Verdict::pruned: return "pruned";
  }
  return "?";
}

std::string_view prune_mode_name(PruneMode mode) {
  return mode == PruneMode::superset ? "superset" : "literal";
}

PruneMode prune_mode_from_name(std::string_view name) {
  if (name == "superset") return PruneMode::superset;
  if (name == "literal") return PruneMode::literal;
  throw std::invalid_argument("unknown prune mode '" + std::string(name) +
                              "' (expected superset or literal)");
}

namespace {

std::string subset_names(const DecisionTable& table, FeatureSubset s) {
  std::string out;
  for (int f : s) {
    if (!out.empty()) out += ',';
    out += table.feature_name(f);
  }
  return out;
}

json rule_to_json(const DecisionTable& table, const Rule& rule) {
  json conditions = json::object();
  int pos = 0;
  for (int f : rule.features) {
    conditions[table.feature_name(f)] = table.value_text(f, rule.values[pos]);
    ++pos;
  }
  json support = json::array();
  for (ObjectId o : rule.support) support.push_back(o + 1);
  return json{{"conditions", std::move(conditions)},
              {"decision", table.decision_text(rule.decision)},
              {"support", std::move(support)},
              {"size", rule.size()}};
}

}  // namespace

std::string ruleset_to_json(const DecisionTable& table, const RuleSet& rules,
                            int indent) {
  json doc;
  doc["rules"] = json::array();
  for (const Rule& rule : rules) doc["rules"].push_back(rule_to_json(table, rule));
  return doc.dump(indent) + "\n";
}

namespace {

void parse_rules(const DecisionTable& table, const json& doc,
                 std::vector<Rule>& rules) {
  for (const auto& entry : doc["rules"]) {
    if (!entry.contains("conditions") || !entry["conditions"].is_object() ||
        entry["conditions"].empty())
      throw ParseError("rule without conditions");
    FeatureSubset features;
    std::vector<std::pair<int, Code>> pairs;
    for (const auto& [name, value] : entry["conditions"].items()) {
      const int f = table.feature_index(name);
      if (f < 0) throw ParseError("unknown feature '" + name + "' in rule");
      const int code = table.find_value(f, value.get<std::string>());
      if (code < 0)
        throw ParseError("value '" + value.get<std::string>() +
                         "' never occurs in column '" + name + "'");
      features = features.with(f);
      pairs.emplace_back(f, static_cast<Code>(code));
    }
    std::sort(pairs.begin(), pairs.end());
    const int d = table.find_decision(entry.at("decision").get<std::string>());
    if (d < 0)
      throw ParseError("unknown decision '" +
                       entry.at("decision").get<std::string>() + "'");

    Rule rule;
    rule.features = features;
    for (auto& [f, code] : pairs) rule.values.push_back(code);
    rule.decision = static_cast<Code>(d);
    for (int j = 0; j < table.row_count(); ++j) {
      const auto obj = static_cast<ObjectId>(j);
      if (matches(table, obj, rule.features, rule.values))
        rule.support.push_back(obj);
    }
    if (entry.contains("support")) {
      std::vector<ObjectId> claimed;
      for (const auto& id : entry["support"]) {
        const auto v = id.get<std::int64_t>();
        if (v < 1 || v > table.row_count())
          throw ParseError("support id " + std::to_string(v) + " out of range");
        claimed.push_back(static_cast<ObjectId>(v - 1));
      }
      std::sort(claimed.begin(), claimed.end());
      if (claimed != rule.support)
        throw ParseError("support of a rule does not match the table");
    }
    if (rule.support.empty())
      throw ParseError("rule matches no object of the table");
    rule.origin = rule.support.front();
    rules.push_back(std::move(rule));
  }
}

}  // namespace

RuleSet ruleset_from_json(const DecisionTable& table, std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("rule set is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rules") || !doc["rules"].is_array())
    throw ParseError("rule set document must be {\"rules\": [...]}");

  std::vector<Rule> rules;
  try {
    parse_rules(table, doc, rules);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed rule entry: ") + e.what());
  }
  return RuleSet::canonicalize(std::move(rules));
}

std::string ruleset_to_table(const DecisionTable& table, const RuleSet& rules) {
  std::ostringstream out;
  for (int f = 0; f < table.feature_count(); ++f) {
    if (f) out << ' ';
    out << table.feature_name(f);
  }
  out << " | " << table.decision_column_name() << " | obj\n";
  for (const Rule& rule : rules) {
    for (int f = 0; f < table.feature_count(); ++f) {
      if (f) out << ' ';
      out << (rule.features.contains(f)
                  ? table.value_text(f, rule.value_for(f))
                  : std::string("NaN"));
    }
    out << " | " << table.decision_text(rule.decision) << " | "
        << rule.origin + 1 << '\n';
  }
  return out.str();
}

std::string ruleset_to_csv(const DecisionTable& table, const RuleSet& rules) {
  std::ostringstream out;
  for (int f = 0; f < table.feature_count(); ++f) out << table.feature_name(f) << ',';
  out << table.decision_column_name() << ",obj,support\n";
  for (const Rule& rule : rules) {
    for (int f = 0; f < table.feature_count(); ++f) {
      out << (rule.features.contains(f)
                  ? table.value_text(f, rule.value_for(f))
                  : std::string("NaN"))
          << ',';
    }
    out << table.decision_text(rule.decision) << ',' << rule.origin + 1 << ',';
    for (std::size_t k = 0; k < rule.support.size(); ++k) {
      if (k) out << ';';
      out << rule.support[k] + 1;
    }
    out << '\n';
  }
  return out.str();
}

std::string conflicts_to_text(const DecisionTable& table,
                              const ConflictReport& report) {
  if (report.empty()) return "no conflicts\n";
  std::ostringstream out;
  for (std::size_t g = 0; g < report.groups.size(); ++g) {
    const auto& group = report.groups[g];
    out << "group " << g + 1 << ": objects ";
    for (std::size_t k = 0; k < group.size(); ++k)
      out << (k ? "," : "") << group[k] + 1;
    out << " | values ";
    const ObjectId rep = group.front();
    for (int f = 0; f < table.feature_count(); ++f)
      out << (f ? "," : "") << table.value_text(f, table.code(rep, f));
    out << " | decisions ";
    for (std::size_t k = 0; k < group.size(); ++k)
      out << (k ? "," : "") << table.decision_text(table.decision(group[k]));
    out << '\n';
  }
  return out.str();
}

std::string trace_to_text(const DecisionTable& table, const RunStats& stats) {
  std::ostringstream out;
  for (std::size_t i = 0; i < stats.per_object.size(); ++i) {
    const auto& os = stats.per_object[i];
    out << "object " << i + 1 << " (" << table.decision_column_name() << "="
        << table.decision_text(table.decision(static_cast<ObjectId>(i)))
        << "):\n";
    for (const TraceEntry& entry : os.trace)
      out << "  " << subset_names(table, entry.subset) << ": "
          << verdict_name(entry.verdict) << '\n';
  }
  return out.str();
}

namespace {

json stats_to_json(const RunStats& stats) {
  return json{{"predicate_evaluations", stats.predicate_evaluations},
              {"nodes_visited", stats.nodes_visited},
              {"nodes_pruned", stats.nodes_pruned},
              {"candidates_generated", stats.candidates_generated},
              {"rules_emitted_raw", stats.rules_emitted_raw},
              {"wall_seconds", stats.wall_seconds}};
}

std::string run_label(const AlgoRun& run) {
  std::string label(algo_name(run.algo));
  if (run.algo == Algo::prg)
    label += std::string("(") + std::string(prune_mode_name(run.prune_mode)) + ")";
  return label;
}

}  // namespace

std::string report_to_json(const ComparisonReport& report, int indent) {
  json doc;
  doc["table"] = {{"rows", report.row_count},
                  {"features", report.feature_count},
                  {"fingerprint", report.fingerprint},
                  {"generator_prng", kGeneratorPrng}};
  doc["runs"] = json::array();
  for (const AlgoRun& run : report.runs) {
    json sizes = json::object();
    for (const auto& [size, count] : run.rules_by_size)
      sizes[std::to_string(size)] = count;
    json entry{{"algorithm", algo_name(run.algo)},
               {"rules_canonical", run.rules.size()},
               {"rules_raw", run.raw_rules},
               {"rules_by_size", std::move(sizes)},
               {"stats", stats_to_json(run.stats)}};
    if (run.algo == Algo::prg)
      entry["prune_mode"] = prune_mode_name(run.prune_mode);
    doc["runs"].push_back(std::move(entry));
  }
  json names = json::array();
  for (const AlgoRun& run : report.runs) names.push_back(run_label(run));
  json matrix = json::array();
  for (const auto& row : report.agreement) {
    json jrow = json::array();
    for (bool b : row) jrow.push_back(b);
    matrix.push_back(std::move(jrow));
  }
  doc["agreement"] = {{"algorithms", std::move(names)},
                      {"matrix", std::move(matrix)}};
  return doc.dump(indent) + "\n";
}

std::string report_to_text(const ComparisonReport& report) {
  std::ostringstream out;
  out << "table: " << report.row_count << " objects, " << report.feature_count
      << " features, " << report.fingerprint << "\n\n";

  const char* headers[] = {"algorithm", "rules", "raw",        "evals",
                           "visited",   "pruned", "candidates", "wall_s"};
  std::vector<std::vector<std::string>> rows;
  for (const AlgoRun& run : report.runs) {
    std::ostringstream wall;
    wall << std::fixed << std::setprecision(6) << run.stats.wall_seconds;
    rows.push_back({run_label(run), std::to_string(run.rules.size()),
                    std::to_string(run.raw_rules),
                    std::to_string(run.stats.predicate_evaluations),
                    std::to_string(run.stats.nodes_visited),
                    std::to_string(run.stats.nodes_pruned),
                    std::to_string(run.stats.candidates_generated), wall.str()});
  }
  std::size_t width[8];
  for (int c = 0; c < 8; ++c) {
    width[c] = std::string(headers[c]).size();
    for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
  }
  for (int c = 0; c < 8; ++c)
    out << (c ? "  " : "") << std::left << std::setw(static_cast<int>(width[c]))
        << headers[c];
  out << '\n';
  for (const auto& row : rows) {
    for (int c = 0; c < 8; ++c)
      out << (c ? "  " : "") << std::left << std::setw(static_cast<int>(width[c]))
          << row[c];
    out << '\n';
  }

  out << "\nagreement:\n";
  for (std::size_t a = 0; a < report.runs.size(); ++a)
    for (std::size_t b = a + 1; b < report.runs.size(); ++b)
      out << "  " << run_label(report.runs[a]) << " = "
          << run_label(report.runs[b]) << ": "
          << (report.agreement[a][b] ? "yes" : "no") << '\n';
  return out.str();
}

std::string report_to_csv(const ComparisonReport& report) {
  std::ostringstream out;
  out << "algorithm,metric,value\n";
  for (std::size_t a = 0; a < report.runs.size(); ++a) {
    const AlgoRun& run = report.runs[a];
    const std::string label = run_label(run);
    auto row = [&](std::string_view metric, const auto& value) {
      out << label << ',' << metric << ',' << value << '\n';
    };
    if (run.algo == Algo::prg) row("prune_mode", prune_mode_name(run.prune_mode));
    row("rules_canonical", run.rules.size());
    row("rules_raw", run.raw_rules);
    for (const auto& [size, count] : run.rules_by_size)
      row("rules_size_" + std::to_string(size), count);
    row("predicate_evaluations", run.stats.predicate_evaluations);
    row("nodes_visited", run.stats.nodes_visited);
    row("nodes_pruned", run.stats.nodes_pruned);
    row("candidates_generated", run.stats.candidates_generated);
    {
      std::ostringstream wall;
      wall << std::fixed << std::setprecision(6) << run.stats.wall_seconds;
      row("wall_seconds", wall.str());
    }
    for (std::size_t b = 0; b < report.runs.size(); ++b) {
      if (a == b) continue;
      row("agrees_" + run_label(report.runs[b]), report.agreement[a][b] ? 1 : 0);
    }
  }
  return out.str();
}

}  // namespace rreduct
