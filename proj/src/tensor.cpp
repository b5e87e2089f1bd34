#include "kldecomp/tensor.hpp"

#include <utility>

namespace kldecomp {

std::vector<std::size_t> row_major_strides(std::span<const std::size_t> sizes) {
  std::vector<std::size_t> strides(sizes.size(), 1);
  for (std::size_t d = sizes.size(); d-- > 1;) {
    strides[d - 1] = strides[d] * sizes[d];
  }
  return strides;
}

std::size_t tensor_length(std::span<const std::size_t> sizes) {
  std::size_t n = 1;
  for (std::size_t s : sizes) n *= s;
  return n;
}

std::vector<std::size_t> axis_offsets(std::span<const std::size_t> sizes,
                                      std::span<const std::size_t> strides,
                                      std::span<const int> dims) {
  std::vector<std::size_t> offsets{0};
  for (int d : dims) {
    const std::size_t size = sizes[static_cast<std::size_t>(d)];
    const std::size_t stride = strides[static_cast<std::size_t>(d)];
    std::vector<std::size_t> next;
    next.reserve(offsets.size() * size);
    for (std::size_t base : offsets) {
      for (std::size_t v = 0; v < size; ++v) {
        next.push_back(base + v * stride);
      }
    }
    offsets = std::move(next);
  }
  return offsets;
}

}  // namespace kldecomp
