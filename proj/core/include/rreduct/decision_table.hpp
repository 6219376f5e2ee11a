#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rreduct/feature_subset.hpp"

namespace rreduct {

using Code = std::uint16_t;      // dense per-column value code
using ObjectId = std::uint32_t;  // row index

/// Input or CSV syntax problem; the message names the offending row/column.
class ParseError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Groups of rows that agree on every feature yet carry different decisions.
struct ConflictReport {
  std::vector<std::vector<ObjectId>> groups;
  bool empty() const { return groups.empty(); }
};

class ConflictError : public std::runtime_error {
 public:
  ConflictError(const std::string& message, ConflictReport report)
      : std::runtime_error(message), report_(std::move(report)) {}
  const ConflictReport& report() const { return report_; }

 private:
  ConflictReport report_;
};

/// Equivalence classes of value-agreement on a feature subset.
/// Blocks appear in first-occurrence order, members ascending.
struct Partition {
  FeatureSubset basis;
  std::vector<std::vector<ObjectId>> blocks;
};

/// Raw material for DecisionTable::build. Codes are dense, 0-based and
/// per-column; value_texts[f][code] recovers the original string.
struct TableData {
  std::vector<std::string> feature_names;
  std::string decision_name;
  std::vector<std::vector<std::string>> value_texts;
  std::vector<std::string> decision_texts;
  std::vector<Code> codes;  // row-major, n * m entries
  std::vector<Code> decisions;
  std::vector<std::vector<ObjectId>> object_ids;  // original row labels, 0-based
};

// An encoded categorical decision table: n objects, m feature columns and one
// decision column. Immutable once built; every operation on it is pure, so
// concurrent reads need no synchronization.
class DecisionTable {
 public:
  /// Validates all invariants (dimensions, code ranges, disjoint object ids);
  /// throws std::invalid_argument on violation.
  static DecisionTable build(TableData data);

  int feature_count() const { return m_; }
  int row_count() const { return n_; }

  Code code(ObjectId row, int feature) const {
    return codes_[static_cast<std::size_t>(row) * m_ + feature];
  }
  Code decision(ObjectId row) const { return decisions_[row]; }
  std::span<const Code> row(ObjectId r) const {
    return {codes_.data() + static_cast<std::size_t>(r) * m_,
            static_cast<std::size_t>(m_)};
  }

  const std::vector<std::string>& feature_names() const { return feature_names_; }
  const std::string& feature_name(int f) const { return feature_names_[f]; }
  const std::string& decision_column_name() const { return decision_name_; }
  /// -1 when no such column
  int feature_index(std::string_view name) const;

  int value_count(int feature) const {
    return static_cast<int>(value_texts_[feature].size());
  }
  const std::string& value_text(int feature, Code code) const {
    return value_texts_[feature][code];
  }
  /// -1 when the text never occurs in that column
  int find_value(int feature, std::string_view text) const;

  int decision_count() const { return static_cast<int>(decision_texts_.size()); }
  const std::string& decision_text(Code code) const { return decision_texts_[code]; }
  int find_decision(std::string_view text) const;

  /// Original input rows merged into this row (singleton unless merged).
  const std::vector<ObjectId>& object_ids(ObjectId row) const {
    return object_ids_[row];
  }

  /// True when no two rows share the same full feature vector.
  bool rows_distinct() const;

  /// FNV-1a over the canonical CSV serialization.
  std::uint64_t fingerprint() const;

 private:
  DecisionTable() = default;

  int m_ = 0;
  int n_ = 0;
  std::vector<std::string> feature_names_;
  std::string decision_name_;
  std::vector<std::vector<std::string>> value_texts_;
  std::vector<std::string> decision_texts_;
  std::vector<Code> codes_;
  std::vector<Code> decisions_;
  std::vector<std::vector<ObjectId>> object_ids_;
};

/// Parse comma-separated text with a header row into an encoded table.
/// decision_column selects the decision by name; empty means the last column.
/// Codes are assigned in first-seen order per column. Throws ParseError on
/// ragged rows, empty cells, duplicate or unknown column names.
DecisionTable parse_table(std::string_view csv_text,
                          std::string_view decision_column = {});

/// Decode back to CSV text; parse_table(to_csv(t)) reproduces t exactly.
std::string to_csv(const DecisionTable& table);

/// Equivalence classes of agreement on `basis`. An empty basis yields one
/// block holding every object (the relation is vacuously total). Throws
/// std::invalid_argument when basis contains a feature index >= m.
Partition indiscernibility_partition(const DecisionTable& table,
                                     FeatureSubset basis);

/// All full-feature equivalence classes carrying two or more decisions.
/// An empty report means the table is consistent.
ConflictReport find_conflicts(const DecisionTable& table);

/// Collapse duplicate feature vectors to one row each (object ids unioned,
/// first-occurrence order). Conflicting classes raise ConflictError unless
/// drop_conflicts is set, in which case they are removed entirely.
DecisionTable merge_indiscernible(const DecisionTable& table,
                                  bool drop_conflicts = false);

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace rreduct
