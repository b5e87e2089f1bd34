#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "kldecomp/pmf.hpp"
#include "kldecomp/rational.hpp"

namespace kldecomp {

// Finite labeled population plus a number of ordered draws without
// replacement. Symbols with zero count are rejected: the derived reference
// Q(s) = count(s)/n must be strictly positive on the declared alphabet.
class PopulationSpec {
 public:
  // Throws InvalidPopulation (empty counts, zero count, k < 1, k > n).
  PopulationSpec(std::map<std::string, std::uint64_t> counts, int draw_count);

  const std::map<std::string, std::uint64_t>& counts() const { return counts_; }
  int draw_count() const { return draw_count_; }
  const BigInt& population_size() const { return population_size_; }
  const Alphabet& alphabet() const { return alphabet_; }

 private:
  std::map<std::string, std::uint64_t> counts_;
  int draw_count_;
  BigInt population_size_;
  Alphabet alphabet_;
};

// Probability of one ordered draw sequence:
//   prod_j (count of draws[j] still in the urn before draw j) / (n - j).
// Exactly zero when a symbol is drawn more often than its count.
Rational sequence_probability(const PopulationSpec& spec, std::span<const std::string> draws);

// Exact joint PMF of the k draws (rational mode). Entries sum to exactly 1
// and every single-dimension marginal equals the population proportions
// exactly, so the marginal divergences against the derived reference vanish
// identically.
JointPmf joint_from_population(const PopulationSpec& spec);

// Homogeneous reference with Q(s) = count(s) / n in exact arithmetic.
ReferenceSpec reference_from_population(const PopulationSpec& spec);

}  // namespace kldecomp
