#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kldecomp/alphabet.hpp"
#include "kldecomp/rational.hpp"
#include "kldecomp/subset_mask.hpp"
#include "kldecomp/tensor.hpp"

namespace kldecomp {

inline constexpr double kDefaultNormTolerance = 1e-12;

enum class ArithmeticMode { kFloat64, kRational };

// Dense joint PMF over a product of per-dimension alphabets.
//
// Always carries a float64 tensor; in rational mode it additionally carries
// the exact tensor, and the float64 view is derived from it exactly once at
// construction.
class JointPmf {
 public:
  static JointPmf from_floats(std::vector<Alphabet> alphabets, std::vector<double> probs,
                              double norm_tolerance = kDefaultNormTolerance);
  static JointPmf from_rationals(std::vector<Alphabet> alphabets, std::vector<Rational> probs);
  // Skips invariant checks; pair with validate_pmf() to report violations.
  static JointPmf unchecked(std::vector<Alphabet> alphabets, std::vector<double> probs,
                            std::optional<std::vector<Rational>> rational_probs = std::nullopt);

  int dimension_count() const { return static_cast<int>(alphabets_.size()); }
  const std::vector<Alphabet>& alphabets() const { return alphabets_; }
  const Alphabet& alphabet(int dim) const { return alphabets_[static_cast<std::size_t>(dim)]; }
  std::span<const double> probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }

  ArithmeticMode mode() const {
    return rational_probs_ ? ArithmeticMode::kRational : ArithmeticMode::kFloat64;
  }
  bool is_rational() const { return rational_probs_.has_value(); }
  std::span<const Rational> rational_probs() const;  // throws InvalidPmf in float mode

  std::vector<std::size_t> dimension_sizes() const;

 private:
  JointPmf(std::vector<Alphabet> alphabets, std::vector<double> probs,
           std::optional<std::vector<Rational>> rational_probs);

  std::vector<Alphabet> alphabets_;
  std::vector<double> probs_;
  std::optional<std::vector<Rational>> rational_probs_;
};

// Marginal of a joint PMF over the retained dimensions (ascending order).
class MarginalPmf {
 public:
  MarginalPmf(SubsetMask subset, std::vector<Alphabet> alphabets, std::vector<double> probs,
              std::optional<std::vector<Rational>> rational_probs);

  SubsetMask subset() const { return subset_; }
  const std::vector<Alphabet>& alphabets() const { return alphabets_; }
  std::span<const double> probs() const { return probs_; }
  bool is_rational() const { return rational_probs_.has_value(); }
  std::span<const Rational> rational_probs() const;

 private:
  SubsetMask subset_;
  std::vector<Alphabet> alphabets_;
  std::vector<double> probs_;
  std::optional<std::vector<Rational>> rational_probs_;
};

// PMF of a single dimension, used as one factor of a product reference.
struct DimensionPmf {
  Alphabet alphabet;
  std::vector<double> probs;
  std::optional<std::vector<Rational>> rational_probs;

  static DimensionPmf from_floats(Alphabet alphabet, std::vector<double> probs,
                                  double norm_tolerance = kDefaultNormTolerance);
  static DimensionPmf from_rationals(Alphabet alphabet, std::vector<Rational> probs);

  bool strictly_positive() const;
};

// Product reference: one PMF per dimension. `is_homogeneous()` is computed,
// not declared: true iff every factor (alphabet and probabilities) is
// identical.
//
// Strict positivity of every factor is required by default; passing
// allow_zeros=true defers that check to divergence time, where zeros are
// tolerated only where P carries no mass.
class ReferenceSpec {
 public:
  static ReferenceSpec per_dimension(std::vector<DimensionPmf> dims, bool allow_zeros = false);
  static ReferenceSpec homogeneous(DimensionPmf factor, int k, bool allow_zeros = false);

  int dimension_count() const { return static_cast<int>(dims_.size()); }
  const DimensionPmf& dimension(int i) const { return dims_[static_cast<std::size_t>(i)]; }
  const std::vector<DimensionPmf>& dimensions() const { return dims_; }
  bool is_homogeneous() const { return homogeneous_; }

  bool strictly_positive() const;
  // Throws ReferenceNotPositive naming the offending dimension and symbol.
  void require_strictly_positive() const;

 private:
  explicit ReferenceSpec(std::vector<DimensionPmf> dims);

  std::vector<DimensionPmf> dims_;
  bool homogeneous_ = false;
};

// Sum of the joint over all dropped dimensions. Exact when the joint is in
// rational mode. The full-set marginal is the joint itself, entrywise.
MarginalPmf marginalize(const JointPmf& joint, SubsetMask subset);

// Q(x_1..x_k) = prod_i Q_i(x_i). Rational mode when every factor carries
// exact probabilities.
JointPmf product_reference_pmf(const ReferenceSpec& ref);

struct PmfViolation {
  enum class Kind { kNegativeEntry, kNotNormalized, kLengthMismatch };
  Kind kind;
  std::string message;
};

// Reports invariant violations instead of throwing; empty means valid.
std::vector<PmfViolation> validate_pmf(const JointPmf& pmf,
                                       double norm_tolerance = kDefaultNormTolerance);

}  // namespace kldecomp
