#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kldecomp/lattice.hpp"
#include "kldecomp/pmf.hpp"

namespace kldecomp {

enum class ZeroReferencePolicy {
  // Any zero in the reference is an error (the default).
  kStrict,
  // Zeros are tolerated where P carries no mass; P > 0 against Q = 0 is
  // still an error.
  kAllowMatchedZeros,
};

// KL(p || q) in bits over two probability vectors of equal length, with
// zero-probability terms of p contributing nothing.
double kl_divergence_bits(std::span<const double> p, std::span<const double> q,
                          ZeroReferencePolicy policy = ZeroReferencePolicy::kStrict);

// KL(P_k || prod_i Q_i), evaluated directly on the joint tensor: each
// outcome contributes p (log2 p - sum_i log2 q_i), which avoids forming
// (and underflowing) the product reference for larger k. No decomposition
// shortcut is involved; this is the directly computed total divergence.
double kl_joint_vs_product(const JointPmf& joint, const ReferenceSpec& ref,
                           ZeroReferencePolicy policy = ZeroReferencePolicy::kStrict);

// Entry i is KL(P_i || Q_i) of the i-th single-dimension marginal.
std::vector<double> marginal_kls(const JointPmf& joint, const ReferenceSpec& ref,
                                 ZeroReferencePolicy policy = ZeroReferencePolicy::kStrict);

// |C(P_k) via entropies - C(P_k) via summed interactions|; the two routes
// are algebraically identical and act as mutual cross-checks.
double check_lemma_identity(const JointPmf& joint);

struct DecomposeOptions {
  ZeroReferencePolicy zero_policy = ZeroReferencePolicy::kStrict;
  // Attach the full per-subset interaction and entropy tables.
  bool include_tables = false;
};

// Every output of the decomposition
//   KL(P_k || Q_1 x ... x Q_k) = sum_i KL(P_i || Q_i) + sum_{r>=2} I^(r)
// together with both total-correlation routes and the residuals between
// the directly computed and recomposed quantities.
struct DecompositionReport {
  int k = 0;
  double kl_full = 0.0;
  std::vector<double> marginal_kls;        // size k
  double marginal_kl_sum = 0.0;
  std::vector<double> interaction_totals;  // I^(r) for r = 2..k
  double total_correlation_interactions = 0.0;
  double total_correlation_entropy = 0.0;
  double recomposed_kl = 0.0;          // marginal_kl_sum + sum_{r>=2} I^(r)
  double residual_decomposition = 0.0; // |kl_full - recomposed_kl|
  double residual_lemma = 0.0;         // |C via entropies - C via interactions|
  std::optional<InteractionTable> per_subset_interactions;
  std::optional<EntropyTable> subset_entropies;

  double interaction_total(int r) const {  // r in [2, k]
    return interaction_totals[static_cast<std::size_t>(r - 2)];
  }
};

DecompositionReport decompose(const JointPmf& joint, const ReferenceSpec& ref,
                              const DecomposeOptions& options = {});

}  // namespace kldecomp
