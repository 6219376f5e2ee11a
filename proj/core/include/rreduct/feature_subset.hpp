#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace rreduct {

// A set of feature (column) indices in {0..m-1}, stored as a 32-bit mask.
// Members enumerate in ascending order. The width caps every table at 32
// features; wider data has to be projected before it gets here.
class FeatureSubset {
 public:
  static constexpr int kMaxFeatures = 32;

  constexpr FeatureSubset() = default;

  static constexpr FeatureSubset from_mask(std::uint32_t mask) {
    return FeatureSubset(mask);
  }
  static constexpr FeatureSubset single(int feature) {
    return FeatureSubset(std::uint32_t{1} << feature);
  }
  static constexpr FeatureSubset full(int feature_count) {
    return FeatureSubset(feature_count >= kMaxFeatures
                             ? ~std::uint32_t{0}
                             : (std::uint32_t{1} << feature_count) - 1);
  }
  static FeatureSubset of(std::initializer_list<int> features) {
    FeatureSubset s;
    for (int f : features) s = s.with(f);
    return s;
  }

  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(int feature) const { return (mask_ >> feature) & 1u; }
  constexpr std::uint32_t mask() const { return mask_; }

  // -1 when empty
  constexpr int min_member() const {
    return mask_ ? std::countr_zero(mask_) : -1;
  }
  constexpr int max_member() const {
    return mask_ ? 31 - std::countl_zero(mask_) : -1;
  }

  constexpr FeatureSubset with(int feature) const {
    return FeatureSubset(mask_ | (std::uint32_t{1} << feature));
  }
  constexpr FeatureSubset without(int feature) const {
    return FeatureSubset(mask_ & ~(std::uint32_t{1} << feature));
  }

  constexpr bool subset_of(FeatureSubset other) const {
    return (mask_ & other.mask_) == mask_;
  }
  constexpr bool proper_subset_of(FeatureSubset other) const {
    return subset_of(other) && mask_ != other.mask_;
  }
  constexpr bool proper_superset_of(FeatureSubset other) const {
    return other.proper_subset_of(*this);
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int f : *this) out.push_back(f);
    return out;
  }

  friend constexpr bool operator==(FeatureSubset, FeatureSubset) = default;

  class iterator {
   public:
    constexpr explicit iterator(std::uint32_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr bool operator!=(const iterator& other) const {
      return rest_ != other.rest_;
    }

   private:
    std::uint32_t rest_;
  };
  constexpr iterator begin() const { return iterator(mask_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  constexpr explicit FeatureSubset(std::uint32_t mask) : mask_(mask) {}
  std::uint32_t mask_ = 0;
};

}  // namespace rreduct
