#pragma once

#include <span>
#include <vector>

#include "kldecomp/pmf.hpp"
#include "kldecomp/subset_mask.hpp"

namespace kldecomp {

// Shannon entropy in bits with the 0 log 0 = 0 convention. log2 is applied
// directly; terms are combined with pairwise summation.
double shannon_entropy_bits(std::span<const double> probs);

// Entropy of every subset marginal, indexed by subset bitmask.
// values[0] (the empty set) is 0 by convention.
struct EntropyTable {
  int k = 0;
  std::vector<double> values;
};

// Interaction information per subset, indexed by subset bitmask. The
// empty-set slot is unused and stored as 0; singletons hold -H(X_i), pairs
// the mutual information, higher orders the signed interaction terms.
struct InteractionTable {
  int k = 0;
  std::vector<double> values;
};

// Entropies of all 2^k subset marginals. Marginals are built top-down:
// each subset's tensor is obtained by summing one dimension out of a
// cached superset marginal, layer by layer. Throws DimensionCapExceeded
// for k > kMaxLatticeDimensions.
EntropyTable entropy_table(const JointPmf& joint);

// Alternating-sign subset sum, evaluated literally:
//   I(S) = -sum_{T subseteq S} (-1)^{|S|-|T|} H(X_T).
// O(3^k); kept as the reference implementation for cross-checks.
InteractionTable interaction_table_naive(const EntropyTable& h);

// Same result as the naive form (within rounding), computed by the
// in-place subset difference transform in O(k 2^k) element operations.
InteractionTable interaction_table_fast(const EntropyTable& h);

// Reconstructs -H(X_S) for every S by the subset sum of interactions (the
// zeta transform) and returns the largest absolute reconstruction error.
double mobius_roundtrip_check(const EntropyTable& h);

// Entry r (1-based; index 0 unused) is the sum of I(S) over |S| = r.
std::vector<double> total_interaction_by_order(const InteractionTable& t);

// C(P_k) = sum_i H(X_i) - H(X_[k]), computed directly from singleton
// marginals and the full tensor, independent of the lattice transform.
double total_correlation_entropy(const JointPmf& joint);

// C(P_k) as the sum of order totals for r >= 2.
double total_correlation_interactions(const InteractionTable& t);

}  // namespace kldecomp
