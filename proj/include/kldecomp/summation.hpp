#pragma once

#include <span>

namespace kldecomp {

// Pairwise (tree) summation. Keeps rounding error at O(log n) ulps instead
// of O(n), which matters because decomposition residuals are asserted at
// the 1e-12 scale. Deterministic for a fixed input order.
double pairwise_sum(std::span<const double> values);

}  // namespace kldecomp
