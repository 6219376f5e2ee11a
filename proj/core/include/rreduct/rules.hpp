#pragma once

#include <map>
#include <span>
#include <vector>

#include "rreduct/decision_table.hpp"
#include "rreduct/feature_subset.hpp"

namespace rreduct {

// One decision rule: a conjunction of feature=value conditions implying a
// decision. values[] lines up with features.members(). support holds every
// table row matching the conditions; origin is the row the rule was
// generated from (display provenance, not part of rule identity).
struct Rule {
  FeatureSubset features;
  std::vector<Code> values;
  Code decision = 0;
  std::vector<ObjectId> support;
  ObjectId origin = 0;

  int size() const { return features.size(); }
  Code value_for(int feature) const;
};

/// True iff the object's codes equal `values` on every feature of `features`.
/// An empty condition set matches everything.
bool matches(const DecisionTable& table, ObjectId object, FeatureSubset features,
             std::span<const Code> values);
bool matches(const DecisionTable& table, ObjectId object, const Rule& rule);

/// The rule-reduct predicate: subset C is a rule reduct for object i iff every
/// other object either differs from i on some feature of C or shares i's
/// decision. Expects a merged table and non-empty C.
bool is_rule_reduct(const DecisionTable& table, ObjectId object, FeatureSubset c);

/// True iff no non-empty proper subset of C is itself a rule reduct for the
/// object. Callers are expected to have established is_rule_reduct(i, C).
bool is_minimal(const DecisionTable& table, ObjectId object, FeatureSubset c);

/// Build the rule induced by the object's values on C, with computed support.
Rule make_rule(const DecisionTable& table, ObjectId object, FeatureSubset c);

// Deduplicated rules in canonical order: by condition count, then
// lexicographic (feature, value) pairs, then decision. Duplicates by
// (conditions, decision) merge their supports; origin becomes the smallest.
class RuleSet {
 public:
  RuleSet() = default;
  static RuleSet canonicalize(std::vector<Rule> rules);

  std::size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }
  const Rule& operator[](std::size_t i) const { return rules_[i]; }
  auto begin() const { return rules_.begin(); }
  auto end() const { return rules_.end(); }

  const Rule* find(FeatureSubset features, std::span<const Code> values,
                   Code decision) const;
  bool contains(FeatureSubset features, std::span<const Code> values,
                Code decision) const {
    return find(features, values, decision) != nullptr;
  }

  std::map<int, std::size_t> count_by_size() const;

  /// Rule identity is (conditions, decision, support); origin is provenance
  /// and deliberately excluded.
  bool operator==(const RuleSet& other) const;

 private:
  explicit RuleSet(std::vector<Rule> rules) : rules_(std::move(rules)) {}
  std::vector<Rule> rules_;
};

struct CoverageReport {
  struct ObjectCoverage {
    int matched_rules = 0;
    bool agrees = true;  // every matching rule shares the object's decision
  };
  std::vector<ObjectCoverage> objects;
  bool complete = false;   // every object matched at least one rule
  bool consistent = true;  // every match agrees
};

/// Match every rule against every object and report coverage.
CoverageReport validate_ruleset(const DecisionTable& table, const RuleSet& rules);

}  // namespace rreduct
