#include "rreduct/generator.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace rreduct {
namespace {

void validate(const GenParams& p) {
  if (p.rows < 1) throw std::invalid_argument("gen: rows must be >= 1");
  if (p.features < 1 || p.features > FeatureSubset::kMaxFeatures)
    throw std::invalid_argument("gen: features must be in 1..32");
  if (p.values_per_feature < 2)
    throw std::invalid_argument("gen: values per feature must be >= 2");
  if (p.decision_classes < 2)
    throw std::invalid_argument("gen: decision classes must be >= 2");
}

}  // namespace

std::string gen_csv(const GenParams& params) {
  validate(params);
  SplitMix64 rng{params.seed};

  const std::size_t n = params.rows;
  const std::size_t m = static_cast<std::size_t>(params.features);
  std::vector<std::uint32_t> cells(n * m);
  for (auto& c : cells)
    c = static_cast<std::uint32_t>(rng.next() %
                                   static_cast<std::uint64_t>(params.values_per_feature));

  std::vector<std::uint32_t> decisions(n);
  if (params.mode == GenMode::force_consistent) {
    // one class per distinct feature vector, drawn at first occurrence
    std::unordered_map<std::string, std::uint32_t> classes;
    for (std::size_t i = 0; i < n; ++i) {
      std::string key;
      for (std::size_t f = 0; f < m; ++f)
        key += std::to_string(cells[i * m + f]) + ',';
      auto it = classes.find(key);
      if (it == classes.end()) {
        const auto cls = static_cast<std::uint32_t>(
            rng.next() % static_cast<std::uint64_t>(params.decision_classes));
        it = classes.emplace(std::move(key), cls).first;
      }
      decisions[i] = it->second;
    }
  } else {
    for (auto& d : decisions)
      d = static_cast<std::uint32_t>(rng.next() %
                                     static_cast<std::uint64_t>(params.decision_classes));
  }

  std::ostringstream out;
  for (std::size_t f = 0; f < m; ++f) out << 'F' << (f + 1) << ',';
  out << "d\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t f = 0; f < m; ++f) out << cells[i * m + f] << ',';
    out << decisions[i] << '\n';
  }
  return out.str();
}

DecisionTable gen_table(const GenParams& params) {
  DecisionTable table = parse_table(gen_csv(params));
  if (params.mode == GenMode::force_consistent)
    return merge_indiscernible(table);
  return table;
}

}  // namespace rreduct
