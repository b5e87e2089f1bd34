#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace kldecomp {

// Row-major strides with dimension 0 as the slowest-varying axis. This is
// the canonical layout for every serialized tensor in the project.
std::vector<std::size_t> row_major_strides(std::span<const std::size_t> sizes);

std::size_t tensor_length(std::span<const std::size_t> sizes);

// Linear offsets of every index combination over `dims` (given as indices
// into sizes/strides), in row-major order: first listed dimension slowest.
// Offsets are relative to the tensor the strides belong to, so base+offset
// addressing works for projections onto dimension subsets.
std::vector<std::size_t> axis_offsets(std::span<const std::size_t> sizes,
                                      std::span<const std::size_t> strides,
                                      std::span<const int> dims);

}  // namespace kldecomp
