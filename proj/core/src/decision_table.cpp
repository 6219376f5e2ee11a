#include "rreduct/decision_table.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace rreduct {
namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

struct CodeVectorHash {
  std::size_t operator()(const std::vector<Code>& v) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (Code c : v) {
      h ^= c;
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// dense first-seen encoder for one column
class Encoder {
 public:
  Code encode(std::string_view text) {
    auto it = index_.find(std::string(text));
    if (it != index_.end()) return it->second;
    if (texts_.size() > std::numeric_limits<Code>::max())
      throw ParseError("too many distinct values in one column");
    const Code code = static_cast<Code>(texts_.size());
    texts_.emplace_back(text);
    index_.emplace(texts_.back(), code);
    return code;
  }
  std::vector<std::string> take_texts() { return std::move(texts_); }

 private:
  std::vector<std::string> texts_;
  std::unordered_map<std::string, Code> index_;
};

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ull;
  }
  return h;
}

DecisionTable DecisionTable::build(TableData data) {
  const int m = static_cast<int>(data.feature_names.size());
  if (m < 1) throw std::invalid_argument("table needs at least one feature");
  if (m > FeatureSubset::kMaxFeatures)
    throw std::invalid_argument("table exceeds the 32-feature cap");
  const std::size_t n = data.decisions.size();
  if (n < 1) throw std::invalid_argument("table needs at least one row");
  if (data.codes.size() != n * static_cast<std::size_t>(m))
    throw std::invalid_argument("code matrix does not match dimensions");
  if (data.value_texts.size() != static_cast<std::size_t>(m))
    throw std::invalid_argument("one value dictionary per feature required");
  if (data.object_ids.size() != n)
    throw std::invalid_argument("one object-id set per row required");

  for (std::size_t i = 0; i < n; ++i) {
    for (int f = 0; f < m; ++f) {
      if (data.codes[i * m + f] >= data.value_texts[f].size())
        throw std::invalid_argument("feature code out of dictionary range");
    }
    if (data.decisions[i] >= data.decision_texts.size())
      throw std::invalid_argument("decision code out of dictionary range");
    if (data.object_ids[i].empty())
      throw std::invalid_argument("row without object ids");
  }
  std::unordered_set<ObjectId> seen;
  for (const auto& ids : data.object_ids)
    for (ObjectId id : ids)
      if (!seen.insert(id).second)
        throw std::invalid_argument("object ids are not pairwise disjoint");

  DecisionTable t;
  t.m_ = m;
  t.n_ = static_cast<int>(n);
  t.feature_names_ = std::move(data.feature_names);
  t.decision_name_ = std::move(data.decision_name);
  t.value_texts_ = std::move(data.value_texts);
  t.decision_texts_ = std::move(data.decision_texts);
  t.codes_ = std::move(data.codes);
  t.decisions_ = std::move(data.decisions);
  t.object_ids_ = std::move(data.object_ids);
  return t;
}

int DecisionTable::feature_index(std::string_view name) const {
  for (int f = 0; f < m_; ++f)
    if (feature_names_[f] == name) return f;
  return -1;
}

int DecisionTable::find_value(int feature, std::string_view text) const {
  const auto& texts = value_texts_[feature];
  for (std::size_t c = 0; c < texts.size(); ++c)
    if (texts[c] == text) return static_cast<int>(c);
  return -1;
}

int DecisionTable::find_decision(std::string_view text) const {
  for (std::size_t c = 0; c < decision_texts_.size(); ++c)
    if (decision_texts_[c] == text) return static_cast<int>(c);
  return -1;
}

bool DecisionTable::rows_distinct() const {
  std::unordered_set<std::vector<Code>, CodeVectorHash> seen;
  for (int i = 0; i < n_; ++i) {
    auto r = row(static_cast<ObjectId>(i));
    if (!seen.emplace(r.begin(), r.end()).second) return false;
  }
  return true;
}

std::uint64_t DecisionTable::fingerprint() const { return fnv1a64(to_csv(*this)); }

DecisionTable parse_table(std::string_view csv_text,
                          std::string_view decision_column) {
  std::vector<std::string_view> lines;
  {
    std::size_t start = 0;
    while (start <= csv_text.size()) {
      std::size_t pos = csv_text.find('\n', start);
      if (pos == std::string_view::npos) pos = csv_text.size();
      std::string_view line = csv_text.substr(start, pos - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      lines.push_back(line);
      start = pos + 1;
    }
    // a trailing newline leaves one empty tail entry
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
  }
  if (lines.empty()) throw ParseError("empty input: no header row");

  const auto header = split(lines[0], ',');
  const int columns = static_cast<int>(header.size());
  if (columns < 2)
    throw ParseError("header must name at least one feature and a decision");
  {
    std::unordered_set<std::string_view> names;
    for (int c = 0; c < columns; ++c) {
      if (header[c].empty())
        throw ParseError("header column " + std::to_string(c + 1) + " is empty");
      if (!names.insert(header[c]).second)
        throw ParseError("duplicate column name '" + std::string(header[c]) + "'");
    }
  }

  int decision_col = columns - 1;
  if (!decision_column.empty()) {
    decision_col = -1;
    for (int c = 0; c < columns; ++c)
      if (header[c] == decision_column) decision_col = c;
    if (decision_col < 0)
      throw ParseError("decision column '" + std::string(decision_column) +
                       "' not found in header");
  }

  const int m = columns - 1;
  if (m > FeatureSubset::kMaxFeatures)
    throw ParseError("table has " + std::to_string(m) +
                     " features; the supported maximum is " +
                     std::to_string(FeatureSubset::kMaxFeatures));
  if (lines.size() < 2) throw ParseError("no data rows");

  TableData data;
  for (int c = 0; c < columns; ++c)
    if (c != decision_col) data.feature_names.emplace_back(header[c]);
  data.decision_name = std::string(header[decision_col]);

  std::vector<Encoder> encoders(m);
  Encoder decision_encoder;
  const std::size_t n = lines.size() - 1;
  data.codes.reserve(n * m);
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto cells = split(lines[r], ',');
    if (static_cast<int>(cells.size()) != columns)
      throw ParseError("row " + std::to_string(r) + ": expected " +
                       std::to_string(columns) + " fields, got " +
                       std::to_string(cells.size()));
    int f = 0;
    for (int c = 0; c < columns; ++c) {
      if (cells[c].empty())
        throw ParseError("row " + std::to_string(r) + ", column '" +
                         std::string(header[c]) +
                         "': empty cell (missing values are not supported)");
      if (c == decision_col) {
        data.decisions.push_back(decision_encoder.encode(cells[c]));
      } else {
        data.codes.push_back(encoders[f].encode(cells[c]));
        ++f;
      }
    }
    data.object_ids.push_back({static_cast<ObjectId>(r - 1)});
  }

  for (auto& e : encoders) data.value_texts.push_back(e.take_texts());
  data.decision_texts = decision_encoder.take_texts();
  return DecisionTable::build(std::move(data));
}

std::string to_csv(const DecisionTable& table) {
  std::ostringstream out;
  for (int f = 0; f < table.feature_count(); ++f) out << table.feature_name(f) << ',';
  out << table.decision_column_name() << '\n';
  for (int i = 0; i < table.row_count(); ++i) {
    const auto obj = static_cast<ObjectId>(i);
    for (int f = 0; f < table.feature_count(); ++f)
      out << table.value_text(f, table.code(obj, f)) << ',';
    out << table.decision_text(table.decision(obj)) << '\n';
  }
  return out.str();
}

Partition indiscernibility_partition(const DecisionTable& table,
                                     FeatureSubset basis) {
  if (basis.max_member() >= table.feature_count())
    throw std::invalid_argument("basis feature index " +
                                std::to_string(basis.max_member()) +
                                " is out of range");
  Partition p;
  p.basis = basis;
  std::unordered_map<std::vector<Code>, std::size_t, CodeVectorHash> index;
  for (int i = 0; i < table.row_count(); ++i) {
    const auto obj = static_cast<ObjectId>(i);
    std::vector<Code> key;
    key.reserve(static_cast<std::size_t>(basis.size()));
    for (int f : basis) key.push_back(table.code(obj, f));
    auto [it, inserted] = index.emplace(std::move(key), p.blocks.size());
    if (inserted) p.blocks.emplace_back();
    p.blocks[it->second].push_back(obj);
  }
  return p;
}

ConflictReport find_conflicts(const DecisionTable& table) {
  ConflictReport report;
  const auto p =
      indiscernibility_partition(table, FeatureSubset::full(table.feature_count()));
  for (const auto& block : p.blocks) {
    if (block.size() < 2) continue;
    const Code first = table.decision(block.front());
    const bool conflicting = std::any_of(
        block.begin(), block.end(),
        [&](ObjectId o) { return table.decision(o) != first; });
    if (conflicting) report.groups.push_back(block);
  }
  return report;
}

DecisionTable merge_indiscernible(const DecisionTable& table, bool drop_conflicts) {
  const auto conflicts = find_conflicts(table);
  if (!conflicts.empty() && !drop_conflicts)
    throw ConflictError("table is inconsistent: " +
                            std::to_string(conflicts.groups.size()) +
                            " indiscernible group(s) with differing decisions",
                        conflicts);

  const auto p =
      indiscernibility_partition(table, FeatureSubset::full(table.feature_count()));
  TableData data;
  data.feature_names = table.feature_names();
  data.decision_name = table.decision_column_name();
  for (int f = 0; f < table.feature_count(); ++f) {
    std::vector<std::string> texts;
    for (int c = 0; c < table.value_count(f); ++c)
      texts.push_back(table.value_text(f, static_cast<Code>(c)));
    data.value_texts.push_back(std::move(texts));
  }
  for (int c = 0; c < table.decision_count(); ++c)
    data.decision_texts.push_back(table.decision_text(static_cast<Code>(c)));

  for (const auto& block : p.blocks) {
    const Code first = table.decision(block.front());
    const bool conflicting = std::any_of(
        block.begin(), block.end(),
        [&](ObjectId o) { return table.decision(o) != first; });
    if (conflicting) continue;  // only reachable with drop_conflicts
    const auto rep = table.row(block.front());
    data.codes.insert(data.codes.end(), rep.begin(), rep.end());
    data.decisions.push_back(first);
    std::vector<ObjectId> ids;
    for (ObjectId o : block) {
      const auto& src = table.object_ids(o);
      ids.insert(ids.end(), src.begin(), src.end());
    }
    std::sort(ids.begin(), ids.end());
    data.object_ids.push_back(std::move(ids));
  }

  if (data.decisions.empty())
    throw ConflictError("every row belongs to a conflicting group", conflicts);
  return DecisionTable::build(std::move(data));
}

}  // namespace rreduct
