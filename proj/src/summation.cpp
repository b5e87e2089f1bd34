#include "kldecomp/summation.hpp"

#include <cstddef>

namespace kldecomp {

namespace {
constexpr std::size_t kLeafSize = 32;
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= kLeafSize) {
    double acc = 0.0;
    for (double v : values) acc += v;
    return acc;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace kldecomp
