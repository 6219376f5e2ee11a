#include <doctest.h>

#include "rreduct/feature_subset.hpp"

using rreduct::FeatureSubset;

TEST_CASE("subset construction and membership") {
  const auto s = FeatureSubset::of({3, 0, 2});
  CHECK(s.size() == 3);
  CHECK(s.mask() == 0b1101);
  CHECK(s.contains(0));
  CHECK_FALSE(s.contains(1));
  CHECK(s.members() == std::vector<int>{0, 2, 3});
  CHECK(s.min_member() == 0);
  CHECK(s.max_member() == 3);

  CHECK(FeatureSubset{}.empty());
  CHECK(FeatureSubset{}.min_member() == -1);
  CHECK(FeatureSubset::full(4).mask() == 0b1111);
  CHECK(FeatureSubset::full(32).size() == 32);
  CHECK(FeatureSubset::single(5) == FeatureSubset::of({5}));
}

TEST_CASE("with/without leave the original untouched") {
  const auto s = FeatureSubset::of({1});
  CHECK(s.with(4).members() == std::vector<int>{1, 4});
  CHECK(s.with(1) == s);
  CHECK(s.without(1).empty());
  CHECK(s.without(3) == s);
  CHECK(s.size() == 1);
}

TEST_CASE("containment relations") {
  const auto small = FeatureSubset::of({1, 3});
  const auto large = FeatureSubset::of({1, 2, 3});
  CHECK(small.subset_of(large));
  CHECK(small.subset_of(small));
  CHECK(small.proper_subset_of(large));
  CHECK_FALSE(small.proper_subset_of(small));
  CHECK(large.proper_superset_of(small));
  CHECK_FALSE(FeatureSubset::of({0}).subset_of(large));
  CHECK(FeatureSubset{}.subset_of(small));  // vacuous
}

TEST_CASE("iteration ascends through the members") {
  std::vector<int> seen;
  for (int f : FeatureSubset::of({7, 0, 31, 4})) seen.push_back(f);
  CHECK(seen == std::vector<int>{0, 4, 7, 31});
}
