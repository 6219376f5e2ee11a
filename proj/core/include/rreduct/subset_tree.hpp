#pragma once

#include <cstdint>
#include <vector>

#include "rreduct/feature_subset.hpp"

namespace rreduct {

// The binary enumeration tree over all non-empty subsets of {0..m-1}:
// 2^m - 1 nodes, each subset exactly once. With 1-based feature ranks and
// j the largest rank in a node S:
//
//   singleton {i}, i < m:      left = {i+1},        right = {i, i+1}
//   non-singleton S, j < m:    left = S + {j+1},    right = S - {j} + {j+1}
//   j = m:                     no children
//
// The root is {1}. Pre-order over this shape is the traversal the search
// algorithms follow, e.g. for m=4:
//   {1} {2} {3} {4} {3,4} {2,3} {2,3,4} {2,4} {1,2} {1,2,3} {1,2,3,4}
//   {1,2,4} {1,3} {1,3,4} {1,4}
//
// Each node carries a prune key (0 = live, 1 = pruned). Keys are the only
// mutable state; one instance belongs to one in-flight per-object search.
class SubsetTree {
 public:
  static constexpr int kMaxFeatures = FeatureSubset::kMaxFeatures;

  /// Builds the tree with all keys 0. Throws std::invalid_argument unless
  /// 1 <= feature_count <= kMaxFeatures. Key storage is O(2^m); anything
  /// beyond ~25 features is impractical and better served by the level-wise
  /// algorithms.
  explicit SubsetTree(int feature_count);

  int feature_count() const { return m_; }
  std::uint64_t node_count() const { return (std::uint64_t{1} << m_) - 1; }

  FeatureSubset root() const { return FeatureSubset::single(0); }
  /// Child links per the shape above; an empty subset means "absent".
  FeatureSubset left_child(FeatureSubset node) const;
  FeatureSubset right_child(FeatureSubset node) const;

  /// Every non-empty subset of {0..m-1} is a node.
  bool contains(FeatureSubset s) const {
    return !s.empty() && s.subset_of(FeatureSubset::full(m_));
  }

  bool pruned(FeatureSubset node) const { return keys_[node.mask()] != 0; }
  void set_key(FeatureSubset node) { keys_[node.mask()] = 1; }

  /// Mark every strict superset of s pruned; returns how many keys flipped
  /// 0 -> 1. s itself, its subsets and incomparable nodes are untouched.
  /// Throws std::invalid_argument when s is not a node.
  std::uint64_t prune_supersets(FeatureSubset s);

  void reset_keys();

  /// The full pre-order subset sequence. Materializes all 2^m - 1 nodes;
  /// meant for small m (dumps, tests).
  std::vector<FeatureSubset> preorder() const;

 private:
  int m_;
  std::vector<std::uint8_t> keys_;  // indexed by subset mask
};

}  // namespace rreduct
