#include "kldecomp/pmf.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "kldecomp/errors.hpp"
#include "kldecomp/summation.hpp"

namespace kldecomp {

namespace {

std::string format_sum_violation(double sum, double tolerance) {
  std::ostringstream os;
  os.precision(17);
  os << "probabilities sum to " << sum << ", expected 1 within " << tolerance;
  return os.str();
}

void check_dimension_pmf(const DimensionPmf& pmf, double norm_tolerance) {
  if (pmf.probs.size() != pmf.alphabet.size()) {
    throw InvalidPmf("dimension PMF length does not match its alphabet");
  }
  for (double p : pmf.probs) {
    if (p < 0.0 || !std::isfinite(p)) {
      throw InvalidPmf("dimension PMF has a negative or non-finite entry");
    }
  }
  if (pmf.rational_probs) {
    Rational sum(0);
    for (const Rational& p : pmf.rational_probs.value()) {
      if (p < 0) throw InvalidPmf("dimension PMF has a negative entry");
      sum += p;
    }
    if (sum != 1) throw InvalidPmf("rational dimension PMF does not sum to exactly 1");
  } else {
    const double sum = pairwise_sum(pmf.probs);
    if (std::abs(sum - 1.0) > norm_tolerance) {
      throw InvalidPmf(format_sum_violation(sum, norm_tolerance));
    }
  }
}

}  // namespace

JointPmf::JointPmf(std::vector<Alphabet> alphabets, std::vector<double> probs,
                   std::optional<std::vector<Rational>> rational_probs)
    : alphabets_(std::move(alphabets)),
      probs_(std::move(probs)),
      rational_probs_(std::move(rational_probs)) {}

std::vector<std::size_t> JointPmf::dimension_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(alphabets_.size());
  for (const Alphabet& a : alphabets_) sizes.push_back(a.size());
  return sizes;
}

std::span<const Rational> JointPmf::rational_probs() const {
  if (!rational_probs_) {
    throw InvalidPmf("joint PMF is in float64 mode; no exact probabilities available");
  }
  return *rational_probs_;
}

JointPmf JointPmf::unchecked(std::vector<Alphabet> alphabets, std::vector<double> probs,
                             std::optional<std::vector<Rational>> rational_probs) {
  return JointPmf(std::move(alphabets), std::move(probs), std::move(rational_probs));
}

JointPmf JointPmf::from_floats(std::vector<Alphabet> alphabets, std::vector<double> probs,
                               double norm_tolerance) {
  if (alphabets.empty()) throw InvalidPmf("joint PMF needs at least one dimension");
  JointPmf pmf(std::move(alphabets), std::move(probs), std::nullopt);
  auto violations = validate_pmf(pmf, norm_tolerance);
  if (!violations.empty()) throw InvalidPmf(violations.front().message);
  return pmf;
}

JointPmf JointPmf::from_rationals(std::vector<Alphabet> alphabets, std::vector<Rational> probs) {
  if (alphabets.empty()) throw InvalidPmf("joint PMF needs at least one dimension");
  std::vector<std::size_t> sizes;
  sizes.reserve(alphabets.size());
  for (const Alphabet& a : alphabets) sizes.push_back(a.size());
  if (probs.size() != tensor_length(sizes)) {
    throw InvalidPmf("tensor length does not match the product of alphabet sizes");
  }
  Rational sum(0);
  for (const Rational& p : probs) {
    if (p < 0) throw InvalidPmf("joint PMF has a negative entry");
    sum += p;
  }
  if (sum != 1) throw InvalidPmf("rational joint PMF does not sum to exactly 1");

  std::vector<double> floats;
  floats.reserve(probs.size());
  for (const Rational& p : probs) floats.push_back(to_double(p));
  return JointPmf(std::move(alphabets), std::move(floats), std::move(probs));
}

MarginalPmf::MarginalPmf(SubsetMask subset, std::vector<Alphabet> alphabets,
                         std::vector<double> probs,
                         std::optional<std::vector<Rational>> rational_probs)
    : subset_(subset),
      alphabets_(std::move(alphabets)),
      probs_(std::move(probs)),
      rational_probs_(std::move(rational_probs)) {}

std::span<const Rational> MarginalPmf::rational_probs() const {
  if (!rational_probs_) {
    throw InvalidPmf("marginal PMF is in float64 mode; no exact probabilities available");
  }
  return *rational_probs_;
}

DimensionPmf DimensionPmf::from_floats(Alphabet alphabet, std::vector<double> probs,
                                       double norm_tolerance) {
  DimensionPmf pmf{std::move(alphabet), std::move(probs), std::nullopt};
  check_dimension_pmf(pmf, norm_tolerance);
  return pmf;
}

DimensionPmf DimensionPmf::from_rationals(Alphabet alphabet, std::vector<Rational> probs) {
  std::vector<double> floats;
  floats.reserve(probs.size());
  for (const Rational& p : probs) floats.push_back(to_double(p));
  DimensionPmf pmf{std::move(alphabet), std::move(floats), std::move(probs)};
  check_dimension_pmf(pmf, kDefaultNormTolerance);
  return pmf;
}

bool DimensionPmf::strictly_positive() const {
  if (rational_probs) {
    for (const Rational& p : *rational_probs) {
      if (p <= 0) return false;
    }
    return true;
  }
  for (double p : probs) {
    if (p <= 0.0) return false;
  }
  return true;
}

ReferenceSpec::ReferenceSpec(std::vector<DimensionPmf> dims) : dims_(std::move(dims)) {
  homogeneous_ = true;
  for (const DimensionPmf& d : dims_) {
    if (d.alphabet != dims_.front().alphabet || d.probs != dims_.front().probs) {
      homogeneous_ = false;
      break;
    }
  }
}

ReferenceSpec ReferenceSpec::per_dimension(std::vector<DimensionPmf> dims, bool allow_zeros) {
  if (dims.empty()) throw InvalidPmf("reference needs at least one dimension");
  ReferenceSpec ref(std::move(dims));
  if (!allow_zeros) ref.require_strictly_positive();
  return ref;
}

ReferenceSpec ReferenceSpec::homogeneous(DimensionPmf factor, int k, bool allow_zeros) {
  if (k < 1) throw InvalidPmf("reference needs at least one dimension");
  std::vector<DimensionPmf> dims(static_cast<std::size_t>(k), factor);
  return per_dimension(std::move(dims), allow_zeros);
}

bool ReferenceSpec::strictly_positive() const {
  for (const DimensionPmf& d : dims_) {
    if (!d.strictly_positive()) return false;
  }
  return true;
}

void ReferenceSpec::require_strictly_positive() const {
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    const DimensionPmf& d = dims_[i];
    for (std::size_t s = 0; s < d.probs.size(); ++s) {
      const bool zero = d.rational_probs ? (*d.rational_probs)[s] <= 0 : d.probs[s] <= 0.0;
      if (zero) {
        throw ReferenceNotPositive("reference probability for symbol \"" +
                                   d.alphabet.symbol(s) + "\" in dimension " +
                                   std::to_string(i + 1) + " is not strictly positive");
      }
    }
  }
}

MarginalPmf marginalize(const JointPmf& joint, SubsetMask subset) {
  const int k = joint.dimension_count();
  require_valid_subset(subset, k);
  subset.k = k;

  const std::vector<std::size_t> sizes = joint.dimension_sizes();
  const std::vector<std::size_t> strides = row_major_strides(sizes);

  const std::vector<int> retained = subset.dimensions();
  std::vector<int> dropped;
  for (int d = 0; d < k; ++d) {
    if (!subset.contains(d)) dropped.push_back(d);
  }

  const std::vector<std::size_t> cell_bases = axis_offsets(sizes, strides, retained);
  const std::vector<std::size_t> fiber_offsets = axis_offsets(sizes, strides, dropped);

  std::vector<Alphabet> marginal_alphabets;
  marginal_alphabets.reserve(retained.size());
  for (int d : retained) marginal_alphabets.push_back(joint.alphabet(d));

  if (joint.is_rational()) {
    std::span<const Rational> exact = joint.rational_probs();
    std::vector<Rational> sums(cell_bases.size(), Rational(0));
    std::vector<double> floats(cell_bases.size());
    for (std::size_t m = 0; m < cell_bases.size(); ++m) {
      for (std::size_t off : fiber_offsets) {
        sums[m] += exact[cell_bases[m] + off];
      }
      floats[m] = to_double(sums[m]);
    }
    return MarginalPmf(subset, std::move(marginal_alphabets), std::move(floats),
                       std::move(sums));
  }

  std::span<const double> probs = joint.probs();
  std::vector<double> out(cell_bases.size());
  std::vector<double> fiber(fiber_offsets.size());
  for (std::size_t m = 0; m < cell_bases.size(); ++m) {
    for (std::size_t t = 0; t < fiber_offsets.size(); ++t) {
      fiber[t] = probs[cell_bases[m] + fiber_offsets[t]];
    }
    out[m] = pairwise_sum(fiber);
  }
  return MarginalPmf(subset, std::move(marginal_alphabets), std::move(out), std::nullopt);
}

JointPmf product_reference_pmf(const ReferenceSpec& ref) {
  const int k = ref.dimension_count();
  std::vector<Alphabet> alphabets;
  std::vector<std::size_t> sizes;
  alphabets.reserve(static_cast<std::size_t>(k));
  bool all_rational = true;
  for (int i = 0; i < k; ++i) {
    alphabets.push_back(ref.dimension(i).alphabet);
    sizes.push_back(ref.dimension(i).alphabet.size());
    all_rational = all_rational && ref.dimension(i).rational_probs.has_value();
  }
  const std::size_t total = tensor_length(sizes);

  std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
  auto advance = [&]() {
    for (std::size_t d = idx.size(); d-- > 0;) {
      if (++idx[d] < sizes[d]) return;
      idx[d] = 0;
    }
  };

  if (all_rational) {
    std::vector<Rational> exact(total);
    std::vector<double> floats(total);
    for (std::size_t lin = 0; lin < total; ++lin, advance()) {
      Rational p(1);
      for (int d = 0; d < k; ++d) {
        p *= (*ref.dimension(d).rational_probs)[idx[static_cast<std::size_t>(d)]];
      }
      exact[lin] = p;
      floats[lin] = to_double(p);
    }
    return JointPmf::unchecked(std::move(alphabets), std::move(floats), std::move(exact));
  }

  std::vector<double> floats(total);
  for (std::size_t lin = 0; lin < total; ++lin, advance()) {
    double p = 1.0;
    for (int d = 0; d < k; ++d) {
      p *= ref.dimension(d).probs[idx[static_cast<std::size_t>(d)]];
    }
    floats[lin] = p;
  }
  return JointPmf::unchecked(std::move(alphabets), std::move(floats), std::nullopt);
}

std::vector<PmfViolation> validate_pmf(const JointPmf& pmf, double norm_tolerance) {
  std::vector<PmfViolation> out;
  const std::vector<std::size_t> sizes = pmf.dimension_sizes();
  if (pmf.size() != tensor_length(sizes)) {
    out.push_back({PmfViolation::Kind::kLengthMismatch,
                   "tensor length " + std::to_string(pmf.size()) +
                       " does not match the product of alphabet sizes " +
                       std::to_string(tensor_length(sizes))});
    return out;
  }
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    const double p = pmf.probs()[i];
    if (p < 0.0 || !std::isfinite(p)) {
      std::ostringstream os;
      os.precision(17);
      os << "entry " << i << " is negative or non-finite: " << p;
      out.push_back({PmfViolation::Kind::kNegativeEntry, os.str()});
    }
  }
  if (pmf.is_rational()) {
    Rational sum(0);
    bool negative = false;
    for (const Rational& p : pmf.rational_probs()) {
      if (p < 0) negative = true;
      sum += p;
    }
    if (negative) {
      out.push_back({PmfViolation::Kind::kNegativeEntry, "exact tensor has a negative entry"});
    }
    if (sum != 1) {
      out.push_back({PmfViolation::Kind::kNotNormalized,
                     "exact tensor sums to " + sum.str() + ", expected exactly 1"});
    }
  } else {
    const double sum = pairwise_sum(pmf.probs());
    if (std::abs(sum - 1.0) > norm_tolerance) {
      out.push_back({PmfViolation::Kind::kNotNormalized,
                     format_sum_violation(sum, norm_tolerance)});
    }
  }
  return out;
}

}  // namespace kldecomp
