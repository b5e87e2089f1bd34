#include "kldecomp/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <utility>

#include "kldecomp/errors.hpp"
#include "kldecomp/summation.hpp"
#include "kldecomp/tensor.hpp"

namespace kldecomp {

namespace {

void require_lattice_dimensions(int k) {
  if (k > kMaxLatticeDimensions) {
    throw DimensionCapExceeded("subset-lattice computation over k=" + std::to_string(k) +
                               " dimensions exceeds the cap of " +
                               std::to_string(kMaxLatticeDimensions) +
                               " (tables grow as 2^k)");
  }
}

// Sums one axis out of a dense row-major tensor with the given per-axis
// sizes. Output keeps the remaining axes in their original order.
std::vector<double> sum_out_axis(const std::vector<double>& tensor,
                                 std::span<const std::size_t> sizes, int axis,
                                 std::vector<double>& fiber_scratch) {
  const std::vector<std::size_t> strides = row_major_strides(sizes);
  std::vector<int> kept;
  kept.reserve(sizes.size() - 1);
  for (int a = 0; a < static_cast<int>(sizes.size()); ++a) {
    if (a != axis) kept.push_back(a);
  }
  const std::vector<std::size_t> cell_bases = axis_offsets(sizes, strides, kept);
  const std::size_t n = sizes[static_cast<std::size_t>(axis)];
  const std::size_t stride = strides[static_cast<std::size_t>(axis)];

  fiber_scratch.resize(n);
  std::vector<double> out(cell_bases.size());
  for (std::size_t m = 0; m < cell_bases.size(); ++m) {
    for (std::size_t v = 0; v < n; ++v) {
      fiber_scratch[v] = tensor[cell_bases[m] + v * stride];
    }
    out[m] = pairwise_sum(fiber_scratch);
  }
  return out;
}

}  // namespace

double shannon_entropy_bits(std::span<const double> probs) {
  std::vector<double> terms;
  terms.reserve(probs.size());
  for (double p : probs) {
    if (p > 0.0) terms.push_back(-p * std::log2(p));
  }
  return pairwise_sum(terms);
}

EntropyTable entropy_table(const JointPmf& joint) {
  const int k = joint.dimension_count();
  require_lattice_dimensions(k);
  const std::uint32_t full = SubsetMask::full(k).bits;
  const std::vector<std::size_t> joint_sizes = joint.dimension_sizes();

  EntropyTable table{k, std::vector<double>(std::size_t{1} << k, 0.0)};

  // Every subset has a unique parent (itself plus its lowest missing
  // dimension), so the subsets form a tree rooted at the full set. Walking
  // it depth-first computes each marginal by summing one dimension out of
  // its parent's tensor and keeps only the current root-to-leaf path in
  // memory, at most k tensors of geometrically shrinking size.
  std::vector<double> fiber_scratch;
  auto descend = [&](auto&& self, std::uint32_t mask,
                     const std::vector<double>& tensor) -> void {
    table.values[mask] = shannon_entropy_bits(tensor);
    std::vector<std::size_t> sizes;
    std::vector<int> dims;
    for (int d = 0; d < k; ++d) {
      if ((mask >> d) & 1u) {
        dims.push_back(d);
        sizes.push_back(joint_sizes[static_cast<std::size_t>(d)]);
      }
    }
    for (std::size_t pos = 0; pos < dims.size(); ++pos) {
      const int d = dims[pos];
      const std::uint32_t child = mask ^ (std::uint32_t{1} << d);
      if (child == 0) continue;
      // Only descend where this node is the child's designated parent,
      // i.e. d is the child's lowest missing dimension.
      if (std::countr_one(child) != d) continue;
      self(self, child, sum_out_axis(tensor, sizes, static_cast<int>(pos), fiber_scratch));
    }
  };
  const std::vector<double> full_tensor(joint.probs().begin(), joint.probs().end());
  descend(descend, full, full_tensor);
  return table;
}

InteractionTable interaction_table_naive(const EntropyTable& h) {
  const std::uint32_t full = SubsetMask::full(h.k).bits;
  InteractionTable table{h.k, std::vector<double>(h.values.size(), 0.0)};
  for (std::uint32_t s = 1; s <= full; ++s) {
    const int order = std::popcount(s);
    double acc = 0.0;
    std::uint32_t t = s;
    while (true) {
      const int sign_exp = order - std::popcount(t);
      acc += (sign_exp & 1) ? -h.values[t] : h.values[t];
      if (t == 0) break;
      t = (t - 1) & s;
    }
    table.values[s] = -acc;
  }
  return table;
}

InteractionTable interaction_table_fast(const EntropyTable& h) {
  InteractionTable table{h.k, std::vector<double>(h.values.size())};
  for (std::size_t s = 0; s < h.values.size(); ++s) {
    table.values[s] = -h.values[s];
  }
  // In-place subset difference (Moebius) transform of the negentropy.
  for (int bit = 0; bit < h.k; ++bit) {
    const std::uint32_t b = std::uint32_t{1} << bit;
    for (std::uint32_t s = 0; s < table.values.size(); ++s) {
      if (s & b) table.values[s] -= table.values[s ^ b];
    }
  }
  table.values[0] = 0.0;
  return table;
}

double mobius_roundtrip_check(const EntropyTable& h) {
  InteractionTable interactions = interaction_table_fast(h);
  std::vector<double> reconstructed = interactions.values;
  // Zeta transform: subset sums of interactions give back the negentropy.
  for (int bit = 0; bit < h.k; ++bit) {
    const std::uint32_t b = std::uint32_t{1} << bit;
    for (std::uint32_t s = 0; s < reconstructed.size(); ++s) {
      if (s & b) reconstructed[s] += reconstructed[s ^ b];
    }
  }
  double worst = 0.0;
  for (std::size_t s = 0; s < reconstructed.size(); ++s) {
    worst = std::max(worst, std::abs(reconstructed[s] + h.values[s]));
  }
  return worst;
}

std::vector<double> total_interaction_by_order(const InteractionTable& t) {
  std::vector<std::vector<double>> groups(static_cast<std::size_t>(t.k) + 1);
  for (std::uint32_t s = 1; s < t.values.size(); ++s) {
    groups[static_cast<std::size_t>(std::popcount(s))].push_back(t.values[s]);
  }
  std::vector<double> totals(static_cast<std::size_t>(t.k) + 1, 0.0);
  for (std::size_t r = 1; r < totals.size(); ++r) {
    totals[r] = pairwise_sum(groups[r]);
  }
  return totals;
}

double total_correlation_entropy(const JointPmf& joint) {
  const int k = joint.dimension_count();
  std::vector<double> singleton_entropies(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    MarginalPmf m = marginalize(joint, SubsetMask::singleton(i, k));
    singleton_entropies[static_cast<std::size_t>(i)] = shannon_entropy_bits(m.probs());
  }
  return pairwise_sum(singleton_entropies) - shannon_entropy_bits(joint.probs());
}

double total_correlation_interactions(const InteractionTable& t) {
  const std::vector<double> totals = total_interaction_by_order(t);
  if (t.k < 2) return 0.0;
  return pairwise_sum(std::span<const double>(totals).subspan(2));
}

}  // namespace kldecomp
