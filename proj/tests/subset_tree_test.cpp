#include <doctest.h>

#include <set>

#include "rreduct/generator.hpp"
#include "rreduct/subset_tree.hpp"

using namespace rreduct;

namespace {

std::vector<std::uint32_t> preorder_masks(int m) {
  std::vector<std::uint32_t> out;
  for (FeatureSubset s : SubsetTree(m).preorder()) out.push_back(s.mask());
  return out;
}

// masks written with 1-based feature ranks: {1}=1, {2}=2, {1,2}=3, ...
constexpr std::uint32_t S(std::initializer_list<int> ranks) {
  std::uint32_t mask = 0;
  for (int r : ranks) mask |= 1u << (r - 1);
  return mask;
}

}  // namespace

TEST_CASE("tree construction enforces the feature-count bounds") {
  CHECK_THROWS_AS(SubsetTree(0), std::invalid_argument);
  CHECK_THROWS_AS(SubsetTree(33), std::invalid_argument);
  CHECK(SubsetTree(1).node_count() == 1);
  CHECK(SubsetTree(4).node_count() == 15);
}

TEST_CASE("single-feature tree is one childless node") {
  const SubsetTree t(1);
  CHECK(t.root() == FeatureSubset::single(0));
  CHECK(t.left_child(t.root()).empty());
  CHECK(t.right_child(t.root()).empty());
  CHECK(t.preorder() == std::vector<FeatureSubset>{t.root()});
}

TEST_CASE("child links follow the largest-rank rules") {
  const SubsetTree t(4);
  CHECK(t.left_child(FeatureSubset::of({1, 2})) == FeatureSubset::of({1, 2, 3}));
  CHECK(t.right_child(FeatureSubset::of({1, 2})) == FeatureSubset::of({1, 3}));
  CHECK(t.left_child(FeatureSubset::of({0})) == FeatureSubset::of({1}));
  CHECK(t.right_child(FeatureSubset::of({0})) == FeatureSubset::of({0, 1}));
  CHECK(t.left_child(FeatureSubset::of({3})).empty());
  CHECK(t.right_child(FeatureSubset::of({2, 3})).empty());
}

TEST_CASE("pre-order sequences are pinned for small trees") {
  CHECK(preorder_masks(2) ==
        std::vector<std::uint32_t>{S({1}), S({2}), S({1, 2})});
  CHECK(preorder_masks(3) ==
        std::vector<std::uint32_t>{S({1}), S({2}), S({3}), S({2, 3}), S({1, 2}),
                                   S({1, 2, 3}), S({1, 3})});
  CHECK(preorder_masks(4) ==
        std::vector<std::uint32_t>{
            S({1}), S({2}), S({3}), S({4}), S({3, 4}), S({2, 3}), S({2, 3, 4}),
            S({2, 4}), S({1, 2}), S({1, 2, 3}), S({1, 2, 3, 4}), S({1, 2, 4}),
            S({1, 3}), S({1, 3, 4}), S({1, 4})});
}

TEST_CASE("pre-order emits every non-empty subset exactly once") {
  for (int m = 1; m <= 10; ++m) {
    const auto seq = preorder_masks(m);
    const std::set<std::uint32_t> unique(seq.begin(), seq.end());
    CHECK(seq.size() == (std::size_t{1} << m) - 1);
    CHECK(unique.size() == seq.size());
    CHECK(*unique.begin() >= 1u);
    CHECK(*unique.rbegin() == (std::uint32_t{1} << m) - 1);
  }
}

TEST_CASE("prune_supersets marks exactly the strict supersets") {
  SubsetTree t(4);
  CHECK(t.prune_supersets(FeatureSubset::of({2})) == 7);  // supersets of {3}
  for (std::uint32_t mask :
       {S({3, 4}), S({2, 3}), S({2, 3, 4}), S({1, 3}), S({1, 2, 3}),
        S({1, 3, 4}), S({1, 2, 3, 4})})
    CHECK(t.pruned(FeatureSubset::from_mask(mask)));
  CHECK_FALSE(t.pruned(FeatureSubset::of({2})));  // never the set itself

  // supersets of {4}: only {2,4}, {1,4}, {1,2,4} are newly marked
  CHECK(t.prune_supersets(FeatureSubset::of({3})) == 3);
  CHECK(t.prune_supersets(FeatureSubset::full(4)) == 0);

  CHECK_THROWS_AS(t.prune_supersets(FeatureSubset{}), std::invalid_argument);
  CHECK_THROWS_AS(t.prune_supersets(FeatureSubset::of({5})), std::invalid_argument);
}

TEST_CASE("keys mark a node iff it strictly contains some pruned set") {
  SplitMix64 rng{41};
  for (int round = 0; round < 20; ++round) {
    const int m = 3 + static_cast<int>(rng.next() % 4);  // 3..6
    SubsetTree t(m);
    std::vector<std::uint32_t> pruned_sets;
    for (int k = 0; k < 4; ++k) {
      const auto mask = 1u + static_cast<std::uint32_t>(
                                 rng.next() % (t.node_count()));
      pruned_sets.push_back(mask);
      t.prune_supersets(FeatureSubset::from_mask(mask));
    }
    for (std::uint32_t node = 1; node <= t.node_count(); ++node) {
      bool expect = false;
      for (std::uint32_t s : pruned_sets)
        if ((node & s) == s && node != s) expect = true;
      CHECK(t.pruned(FeatureSubset::from_mask(node)) == expect);
    }
  }
}

TEST_CASE("reset_keys restores the freshly built state") {
  SubsetTree t(4);
  t.prune_supersets(FeatureSubset::of({2}));
  t.set_key(FeatureSubset::of({2}));
  t.reset_keys();
  for (std::uint32_t node = 1; node <= t.node_count(); ++node)
    CHECK_FALSE(t.pruned(FeatureSubset::from_mask(node)));

  t.reset_keys();  // idempotent
  CHECK(t.prune_supersets(FeatureSubset::of({2})) == 7);
}
