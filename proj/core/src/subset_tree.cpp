#include "rreduct/subset_tree.hpp"

#include <stdexcept>
#include <string>

namespace rreduct {

SubsetTree::SubsetTree(int feature_count) : m_(feature_count) {
  if (feature_count < 1 || feature_count > kMaxFeatures)
    throw std::invalid_argument("subset tree requires 1 <= m <= " +
                                std::to_string(kMaxFeatures) + ", got " +
                                std::to_string(feature_count));
  keys_.assign(std::uint64_t{1} << m_, 0);
}

FeatureSubset SubsetTree::left_child(FeatureSubset node) const {
  const int j = node.max_member();
  if (j + 1 >= m_) return {};
  if (node.size() == 1) return FeatureSubset::single(j + 1);
  return node.with(j + 1);
}

FeatureSubset SubsetTree::right_child(FeatureSubset node) const {
  const int j = node.max_member();
  if (j + 1 >= m_) return {};
  if (node.size() == 1) return node.with(j + 1);
  return node.without(j).with(j + 1);
}

std::uint64_t SubsetTree::prune_supersets(FeatureSubset s) {
  if (!contains(s))
    throw std::invalid_argument("subset is not a node of this tree");
  // strict supersets of s are s | u for every non-empty subset u of ~s
  const std::uint32_t rest = FeatureSubset::full(m_).mask() & ~s.mask();
  std::uint64_t flipped = 0;
  for (std::uint32_t u = rest; u != 0; u = (u - 1) & rest) {
    const std::uint32_t node = s.mask() | u;
    if (!keys_[node]) {
      keys_[node] = 1;
      ++flipped;
    }
  }
  return flipped;
}

void SubsetTree::reset_keys() { std::fill(keys_.begin(), keys_.end(), 0); }

std::vector<FeatureSubset> SubsetTree::preorder() const {
  std::vector<FeatureSubset> out;
  out.reserve(node_count());
  // explicit stack, right child pushed first so left is walked first
  std::vector<FeatureSubset> stack{root()};
  while (!stack.empty()) {
    const FeatureSubset node = stack.back();
    stack.pop_back();
    out.push_back(node);
    if (const auto r = right_child(node); !r.empty()) stack.push_back(r);
    if (const auto l = left_child(node); !l.empty()) stack.push_back(l);
  }
  return out;
}

}  // namespace rreduct
