// Test-only reference implementations, kept deliberately independent of the
// library's computation paths: straight loops, labeled-item enumeration, and
// long-double arithmetic instead of tensors, lattice transforms, and
// pairwise summation.
#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "kldecomp/alphabet.hpp"
#include "kldecomp/pmf.hpp"
#include "kldecomp/rational.hpp"

namespace oracles {

// Exact joint tensor of k ordered draws without replacement, found by
// enumerating every ordered arrangement of individually labeled items.
// Each arrangement has probability 1 / (n (n-1) ... (n-k+1)); arrangements
// are grouped by their symbol tuples. Row-major over the sorted alphabet.
class LabeledDrawEnumeration {
 public:
  LabeledDrawEnumeration(const std::map<std::string, std::uint64_t>& counts, int k)
      : k_(k) {
    for (const auto& [symbol, count] : counts) {
      for (std::uint64_t c = 0; c < count; ++c) items_.push_back(symbol);
    }
    std::vector<std::string> symbols;
    for (const auto& [symbol, count] : counts) symbols.push_back(symbol);
    alphabet_ = std::make_unique<kldecomp::Alphabet>(symbols);

    std::size_t total = 1;
    for (int d = 0; d < k; ++d) total *= alphabet_->size();
    tensor_.assign(total, kldecomp::Rational(0));

    kldecomp::Rational arrangement_probability(1);
    for (int j = 0; j < k; ++j) {
      arrangement_probability /= kldecomp::Rational(
          static_cast<std::int64_t>(items_.size()) - j);
    }
    std::vector<bool> used(items_.size(), false);
    std::vector<std::size_t> tuple;
    enumerate(used, tuple, arrangement_probability);
  }

  const std::vector<kldecomp::Rational>& tensor() const { return tensor_; }
  const kldecomp::Alphabet& alphabet() const { return *alphabet_; }

  kldecomp::Rational tuple_probability(const std::vector<std::string>& draws) const {
    std::size_t lin = 0;
    for (const std::string& s : draws) {
      lin = lin * alphabet_->size() + alphabet_->index_of(s);
    }
    return tensor_[lin];
  }

 private:
  void enumerate(std::vector<bool>& used, std::vector<std::size_t>& tuple,
                 const kldecomp::Rational& arrangement_probability) {
    if (static_cast<int>(tuple.size()) == k_) {
      std::size_t lin = 0;
      for (std::size_t sym : tuple) lin = lin * alphabet_->size() + sym;
      tensor_[lin] += arrangement_probability;
      return;
    }
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      tuple.push_back(alphabet_->index_of(items_[i]));
      enumerate(used, tuple, arrangement_probability);
      tuple.pop_back();
      used[i] = false;
    }
  }

  int k_;
  std::vector<std::string> items_;
  std::unique_ptr<kldecomp::Alphabet> alphabet_;
  std::vector<kldecomp::Rational> tensor_;
};

// KL(p || q) evaluated term by term in long double with a plain left fold.
inline double kl_long_double(const std::vector<double>& p, const std::vector<double>& q) {
  long double acc = 0.0L;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) {
      acc += static_cast<long double>(p[i]) *
             std::log2(static_cast<long double>(p[i]) / static_cast<long double>(q[i]));
    }
  }
  return static_cast<double>(acc);
}

// Mutual information of a 2-D joint from first principles: direct row/column
// sums and a plain double loop.
inline double mutual_information_direct(const std::vector<double>& joint, std::size_t rows,
                                        std::size_t cols) {
  std::vector<double> row_sums(rows, 0.0), col_sums(cols, 0.0);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      row_sums[r] += joint[r * cols + c];
      col_sums[c] += joint[r * cols + c];
    }
  }
  double mi = 0.0;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const double p = joint[r * cols + c];
      if (p > 0.0) mi += p * std::log2(p / (row_sums[r] * col_sums[c]));
    }
  }
  return mi;
}

// Deterministic random PMFs for property tests.
struct RandomPmfs {
  explicit RandomPmfs(std::uint64_t seed) : rng(seed) {}

  std::vector<double> pmf(std::size_t n, bool with_zeros) {
    std::vector<double> out(n);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    double sum = 0.0;
    for (double& v : out) {
      v = -std::log(1.0 - uniform(rng));
      if (with_zeros && uniform(rng) < 0.12) v = 0.0;
      sum += v;
    }
    if (sum == 0.0) {
      out[0] = 1.0;
      sum = 1.0;
    }
    for (double& v : out) v /= sum;
    return out;
  }

  // Strictly positive PMF with entries bounded away from zero.
  std::vector<double> positive_pmf(std::size_t n) {
    std::vector<double> out(n);
    std::uniform_real_distribution<double> uniform(0.05, 1.0);
    double sum = 0.0;
    for (double& v : out) {
      v = uniform(rng);
      sum += v;
    }
    for (double& v : out) v /= sum;
    return out;
  }

  std::vector<std::size_t> alphabet_sizes(int k, std::size_t lo, std::size_t hi) {
    std::uniform_int_distribution<std::size_t> size_dist(lo, hi);
    std::vector<std::size_t> sizes(static_cast<std::size_t>(k));
    for (auto& s : sizes) s = size_dist(rng);
    return sizes;
  }

  std::mt19937_64 rng;
};

// Alphabets "a", "b", ... of the requested sizes (already sorted).
inline std::vector<kldecomp::Alphabet> letter_alphabets(const std::vector<std::size_t>& sizes) {
  std::vector<kldecomp::Alphabet> out;
  for (std::size_t n : sizes) {
    std::vector<std::string> symbols;
    for (std::size_t i = 0; i < n; ++i) symbols.push_back(std::string(1, char('a' + i)));
    out.emplace_back(symbols);
  }
  return out;
}

inline kldecomp::JointPmf random_joint(RandomPmfs& gen, const std::vector<std::size_t>& sizes,
                                       bool with_zeros) {
  std::size_t total = 1;
  for (std::size_t s : sizes) total *= s;
  return kldecomp::JointPmf::from_floats(letter_alphabets(sizes), gen.pmf(total, with_zeros));
}

inline kldecomp::ReferenceSpec random_reference(RandomPmfs& gen,
                                                const std::vector<std::size_t>& sizes) {
  std::vector<kldecomp::DimensionPmf> dims;
  auto alphabets = letter_alphabets(sizes);
  for (std::size_t d = 0; d < sizes.size(); ++d) {
    dims.push_back(
        kldecomp::DimensionPmf::from_floats(alphabets[d], gen.positive_pmf(sizes[d])));
  }
  return kldecomp::ReferenceSpec::per_dimension(std::move(dims));
}

// Reference equal to the joint's own single-dimension marginals.
inline kldecomp::ReferenceSpec own_marginals_reference(const kldecomp::JointPmf& joint) {
  std::vector<kldecomp::DimensionPmf> dims;
  for (int i = 0; i < joint.dimension_count(); ++i) {
    kldecomp::MarginalPmf m = kldecomp::marginalize(
        joint, kldecomp::SubsetMask::singleton(i, joint.dimension_count()));
    dims.push_back(kldecomp::DimensionPmf::from_floats(
        joint.alphabet(i), std::vector<double>(m.probs().begin(), m.probs().end()), 1e-9));
  }
  return kldecomp::ReferenceSpec::per_dimension(std::move(dims), /*allow_zeros=*/true);
}

}  // namespace oracles
