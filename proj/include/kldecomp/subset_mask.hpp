#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "kldecomp/errors.hpp"

namespace kldecomp {

// Subset-lattice tables are O(2^k); refuse anything beyond this.
inline constexpr int kMaxLatticeDimensions = 20;

// Subset of the k dimensions, bit i set <=> dimension i is a member.
// Dimensions are 0-based here; bit 0 is the first (slowest-varying) axis.
struct SubsetMask {
  std::uint32_t bits = 0;
  int k = 0;

  static SubsetMask full(int k) {
    return SubsetMask{static_cast<std::uint32_t>((std::uint64_t{1} << k) - 1), k};
  }
  static SubsetMask singleton(int dim, int k) {
    return SubsetMask{std::uint32_t{1} << dim, k};
  }

  int order() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }
  bool contains(int dim) const { return (bits >> dim) & 1u; }

  // Member dimensions in ascending order.
  std::vector<int> dimensions() const {
    std::vector<int> dims;
    dims.reserve(static_cast<std::size_t>(order()));
    for (int i = 0; i < k; ++i) {
      if (contains(i)) dims.push_back(i);
    }
    return dims;
  }

  bool operator==(const SubsetMask& other) const = default;
};

// Throws InvalidSubset unless mask is a nonempty subset of [0, k).
inline void require_valid_subset(SubsetMask mask, int k) {
  if (mask.empty()) {
    throw InvalidSubset("subset must be nonempty");
  }
  if (k >= 32 || (mask.bits >> k) != 0) {
    throw InvalidSubset("subset addresses a dimension outside the joint distribution");
  }
}

}  // namespace kldecomp
