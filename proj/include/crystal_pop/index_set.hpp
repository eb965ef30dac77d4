#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace crystal_pop {

/// Subset of {1, ..., 31} stored as a bitmask. Used both for sets of crystal
/// colors and for sets of simple transpositions s_i.
class IndexSet {
 public:
  static constexpr int kMaxIndex = 31;

  constexpr IndexSet() = default;
  constexpr IndexSet(std::initializer_list<int> indices) {
    for (int i : indices) insert(i);
  }

  static constexpr IndexSet from_mask(std::uint32_t mask) {
    IndexSet s;
    s.mask_ = mask;
    return s;
  }
  /// {1, ..., n}
  static constexpr IndexSet range(int n) {
    return from_mask(n <= 0 ? 0u : static_cast<std::uint32_t>(((std::uint64_t{1} << n) - 1) << 1));
  }

  constexpr bool contains(int i) const {
    return i >= 1 && i <= kMaxIndex && ((mask_ >> i) & 1u) != 0;
  }
  constexpr void insert(int i) { mask_ |= (1u << i); }
  constexpr void erase(int i) { mask_ &= ~(1u << i); }

  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr std::uint32_t mask() const { return mask_; }
  /// Smallest member, or 0 when empty.
  constexpr int first() const { return mask_ == 0 ? 0 : std::countr_zero(mask_); }

  constexpr IndexSet operator&(IndexSet o) const { return from_mask(mask_ & o.mask_); }
  constexpr IndexSet operator|(IndexSet o) const { return from_mask(mask_ | o.mask_); }
  /// Set difference.
  constexpr IndexSet operator-(IndexSet o) const { return from_mask(mask_ & ~o.mask_); }
  constexpr bool is_subset_of(IndexSet o) const { return (mask_ & ~o.mask_) == 0; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  /// "{1,3}"
  std::string to_string() const {
    std::string out = "{";
    bool first_item = true;
    for (int i : to_vector()) {
      if (!first_item) out += ',';
      out += std::to_string(i);
      first_item = false;
    }
    return out + "}";
  }

  friend constexpr bool operator==(IndexSet, IndexSet) = default;

 private:
  std::uint32_t mask_ = 0;
};

using ColorSet = IndexSet;
using GeneratorSet = IndexSet;

}  // namespace crystal_pop
