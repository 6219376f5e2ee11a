#include "rreduct/rules.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace rreduct {

Code Rule::value_for(int feature) const {
  int pos = 0;
  for (int f : features) {
    if (f == feature) return values[pos];
    ++pos;
  }
  throw std::out_of_range("feature is not constrained by this rule");
}

bool matches(const DecisionTable& table, ObjectId object, FeatureSubset features,
             std::span<const Code> values) {
  int pos = 0;
  for (int f : features) {
    if (table.code(object, f) != values[pos]) return false;
    ++pos;
  }
  return true;
}

bool matches(const DecisionTable& table, ObjectId object, const Rule& rule) {
  return matches(table, object, rule.features, rule.values);
}

bool is_rule_reduct(const DecisionTable& table, ObjectId object, FeatureSubset c) {
  assert(!c.empty());
  const Code d = table.decision(object);
  const int n = table.row_count();
  for (int j = 0; j < n; ++j) {
    const auto other = static_cast<ObjectId>(j);
    if (other == object || table.decision(other) == d) continue;
    bool differs = false;
    for (int f : c) {
      if (table.code(other, f) != table.code(object, f)) {
        differs = true;
        break;
      }
    }
    if (!differs) return false;
  }
  return true;
}

bool is_minimal(const DecisionTable& table, ObjectId object, FeatureSubset c) {
  // walk all non-empty proper submasks
  const std::uint32_t full = c.mask();
  for (std::uint32_t sub = (full - 1) & full; sub != 0; sub = (sub - 1) & full) {
    if (is_rule_reduct(table, object, FeatureSubset::from_mask(sub))) return false;
  }
  return true;
}

Rule make_rule(const DecisionTable& table, ObjectId object, FeatureSubset c) {
  Rule rule;
  rule.features = c;
  rule.values.reserve(static_cast<std::size_t>(c.size()));
  for (int f : c) rule.values.push_back(table.code(object, f));
  rule.decision = table.decision(object);
  rule.origin = object;
  for (int j = 0; j < table.row_count(); ++j) {
    const auto other = static_cast<ObjectId>(j);
    if (matches(table, other, rule.features, rule.values))
      rule.support.push_back(other);
  }
  return rule;
}

namespace {

// canonical order: size, then (feature, value) pairs, then decision
bool rule_less(const Rule& a, const Rule& b) {
  if (a.features.size() != b.features.size())
    return a.features.size() < b.features.size();
  auto ai = a.features.begin();
  auto bi = b.features.begin();
  for (std::size_t k = 0; k < a.values.size() && k < b.values.size(); ++k) {
    if (*ai != *bi) return *ai < *bi;
    if (a.values[k] != b.values[k]) return a.values[k] < b.values[k];
    ++ai;
    ++bi;
  }
  return a.decision < b.decision;
}

bool same_identity(const Rule& a, const Rule& b) {
  return a.features == b.features && a.values == b.values &&
         a.decision == b.decision;
}

}  // namespace

RuleSet RuleSet::canonicalize(std::vector<Rule> rules) {
  std::sort(rules.begin(), rules.end(), rule_less);
  std::vector<Rule> out;
  for (auto& rule : rules) {
    if (!out.empty() && same_identity(out.back(), rule)) {
      Rule& kept = out.back();
      std::vector<ObjectId> merged;
      std::set_union(kept.support.begin(), kept.support.end(),
                     rule.support.begin(), rule.support.end(),
                     std::back_inserter(merged));
      kept.support = std::move(merged);
      kept.origin = std::min(kept.origin, rule.origin);
    } else {
      out.push_back(std::move(rule));
    }
  }
  return RuleSet(std::move(out));
}

const Rule* RuleSet::find(FeatureSubset features, std::span<const Code> values,
                          Code decision) const {
  for (const Rule& r : rules_) {
    if (r.features == features && r.decision == decision &&
        std::equal(r.values.begin(), r.values.end(), values.begin(), values.end()))
      return &r;
  }
  return nullptr;
}

std::map<int, std::size_t> RuleSet::count_by_size() const {
  std::map<int, std::size_t> counts;
  for (const Rule& r : rules_) ++counts[r.size()];
  return counts;
}

bool RuleSet::operator==(const RuleSet& other) const {
  if (rules_.size() != other.rules_.size()) return false;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if (!same_identity(rules_[i], other.rules_[i]) ||
        rules_[i].support != other.rules_[i].support)
      return false;
  }
  return true;
}

CoverageReport validate_ruleset(const DecisionTable& table, const RuleSet& rules) {
  CoverageReport report;
  report.objects.resize(static_cast<std::size_t>(table.row_count()));
  report.complete = true;
  for (int i = 0; i < table.row_count(); ++i) {
    const auto obj = static_cast<ObjectId>(i);
    auto& cov = report.objects[static_cast<std::size_t>(i)];
    for (const Rule& rule : rules) {
      if (!matches(table, obj, rule)) continue;
      ++cov.matched_rules;
      if (rule.decision != table.decision(obj)) cov.agrees = false;
    }
    if (cov.matched_rules == 0) report.complete = false;
    if (!cov.agrees) report.consistent = false;
  }
  return report;
}

}  // namespace rreduct
