#include "kldecomp/decompose.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "kldecomp/errors.hpp"
#include "kldecomp/summation.hpp"
#include "kldecomp/tensor.hpp"

namespace kldecomp {

namespace {

void require_compatible(const JointPmf& joint, const ReferenceSpec& ref) {
  if (ref.dimension_count() != joint.dimension_count()) {
    throw ArityMismatch("reference covers " + std::to_string(ref.dimension_count()) +
                        " dimensions, joint distribution has " +
                        std::to_string(joint.dimension_count()));
  }
  for (int i = 0; i < joint.dimension_count(); ++i) {
    if (ref.dimension(i).alphabet != joint.alphabet(i)) {
      throw AlphabetMismatch("reference alphabet for dimension " + std::to_string(i + 1) +
                             " does not match the joint distribution");
    }
  }
}

}  // namespace

double kl_divergence_bits(std::span<const double> p, std::span<const double> q,
                          ZeroReferencePolicy policy) {
  if (p.size() != q.size()) {
    throw ArityMismatch("KL divergence needs vectors of equal length (" +
                        std::to_string(p.size()) + " vs " + std::to_string(q.size()) + ")");
  }
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] < 0.0) {
      throw ReferenceNotPositive("reference entry " + std::to_string(i) + " is negative");
    }
    if (q[i] == 0.0 && policy == ZeroReferencePolicy::kStrict) {
      throw ReferenceNotPositive("reference entry " + std::to_string(i) +
                                 " is zero (strict positivity required)");
    }
  }
  std::vector<double> terms;
  terms.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;  // 0 log 0 = 0
    if (q[i] == 0.0) {
      throw AbsoluteContinuityViolated("P places mass " + std::to_string(p[i]) +
                                       " on entry " + std::to_string(i) +
                                       " where the reference is zero");
    }
    terms.push_back(p[i] * std::log2(p[i] / q[i]));
  }
  return pairwise_sum(terms);
}

double kl_joint_vs_product(const JointPmf& joint, const ReferenceSpec& ref,
                           ZeroReferencePolicy policy) {
  require_compatible(joint, ref);
  if (policy == ZeroReferencePolicy::kStrict) {
    ref.require_strictly_positive();
  }
  const int k = joint.dimension_count();
  const std::vector<std::size_t> sizes = joint.dimension_sizes();

  std::vector<std::vector<double>> log_q(static_cast<std::size_t>(k));
  for (int d = 0; d < k; ++d) {
    const std::vector<double>& qd = ref.dimension(d).probs;
    log_q[static_cast<std::size_t>(d)].reserve(qd.size());
    for (double q : qd) {
      log_q[static_cast<std::size_t>(d)].push_back(q > 0.0 ? std::log2(q) : 0.0);
    }
  }

  std::span<const double> probs = joint.probs();
  std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
  std::vector<double> terms;
  terms.reserve(probs.size());
  for (std::size_t lin = 0; lin < probs.size(); ++lin) {
    const double p = probs[lin];
    if (p > 0.0) {
      double log_ref = 0.0;
      for (int d = 0; d < k; ++d) {
        const std::size_t sym = idx[static_cast<std::size_t>(d)];
        if (ref.dimension(d).probs[sym] == 0.0) {
          throw AbsoluteContinuityViolated(
              "P places mass on symbol \"" + joint.alphabet(d).symbol(sym) +
              "\" in dimension " + std::to_string(d + 1) + " where the reference is zero");
        }
        log_ref += log_q[static_cast<std::size_t>(d)][sym];
      }
      terms.push_back(p * (std::log2(p) - log_ref));
    }
    for (std::size_t d = idx.size(); d-- > 0;) {
      if (++idx[d] < sizes[d]) break;
      idx[d] = 0;
    }
  }
  return pairwise_sum(terms);
}

std::vector<double> marginal_kls(const JointPmf& joint, const ReferenceSpec& ref,
                                 ZeroReferencePolicy policy) {
  require_compatible(joint, ref);
  const int k = joint.dimension_count();
  std::vector<double> out(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    MarginalPmf marginal = marginalize(joint, SubsetMask::singleton(i, k));
    out[static_cast<std::size_t>(i)] =
        kl_divergence_bits(marginal.probs(), ref.dimension(i).probs, policy);
  }
  return out;
}

double check_lemma_identity(const JointPmf& joint) {
  const EntropyTable h = entropy_table(joint);
  const InteractionTable t = interaction_table_fast(h);
  return std::abs(total_correlation_entropy(joint) - total_correlation_interactions(t));
}

DecompositionReport decompose(const JointPmf& joint, const ReferenceSpec& ref,
                              const DecomposeOptions& options) {
  require_compatible(joint, ref);
  const int k = joint.dimension_count();

  DecompositionReport report;
  report.k = k;
  report.kl_full = kl_joint_vs_product(joint, ref, options.zero_policy);

  EntropyTable h = entropy_table(joint);
  InteractionTable interactions = interaction_table_fast(h);
  const std::vector<double> order_totals = total_interaction_by_order(interactions);

  report.interaction_totals.assign(order_totals.begin() + 2, order_totals.end());
  report.total_correlation_interactions =
      k >= 2 ? pairwise_sum(std::span<const double>(order_totals).subspan(2)) : 0.0;
  report.total_correlation_entropy = total_correlation_entropy(joint);

  report.marginal_kls = marginal_kls(joint, ref, options.zero_policy);
  report.marginal_kl_sum = pairwise_sum(report.marginal_kls);

  report.recomposed_kl = report.marginal_kl_sum + report.total_correlation_interactions;
  report.residual_decomposition = std::abs(report.kl_full - report.recomposed_kl);
  report.residual_lemma =
      std::abs(report.total_correlation_entropy - report.total_correlation_interactions);

  if (options.include_tables) {
    report.per_subset_interactions = std::move(interactions);
    report.subset_entropies = std::move(h);
  }
  return report;
}

}  // namespace kldecomp
