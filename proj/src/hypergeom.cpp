#include "kldecomp/hypergeom.hpp"

#include <algorithm>
#include <vector>

#include "kldecomp/errors.hpp"
#include "kldecomp/subset_mask.hpp"

namespace kldecomp {

namespace {

std::vector<std::string> sorted_symbols(const std::map<std::string, std::uint64_t>& counts) {
  std::vector<std::string> symbols;
  symbols.reserve(counts.size());
  for (const auto& [symbol, count] : counts) symbols.push_back(symbol);
  return symbols;
}

// Joint tensors are dense; refuse sizes that cannot reasonably be
// materialized. (The subset-lattice cap on k is enforced separately.)
constexpr std::size_t kMaxTensorEntries = std::size_t{1} << 24;

}  // namespace

PopulationSpec::PopulationSpec(std::map<std::string, std::uint64_t> counts, int draw_count)
    : counts_(std::move(counts)),
      draw_count_(draw_count),
      population_size_(0),
      alphabet_(sorted_symbols(counts_)) {
  for (const auto& [symbol, count] : counts_) {
    if (count == 0) {
      throw InvalidPopulation("population count for symbol \"" + symbol +
                              "\" must be at least 1");
    }
    population_size_ += count;
  }
  if (draw_count_ < 1) {
    throw InvalidPopulation("draw count must be at least 1");
  }
  if (BigInt(draw_count_) > population_size_) {
    throw InvalidPopulation("cannot draw " + std::to_string(draw_count_) +
                            " items without replacement from a population of " +
                            population_size_.str());
  }
}

Rational sequence_probability(const PopulationSpec& spec, std::span<const std::string> draws) {
  if (static_cast<int>(draws.size()) != spec.draw_count()) {
    throw ArityMismatch("expected " + std::to_string(spec.draw_count()) +
                        " draws, got " + std::to_string(draws.size()));
  }
  std::map<std::string, std::uint64_t> remaining = spec.counts();
  BigInt urn = spec.population_size();
  Rational p(1);
  for (const std::string& symbol : draws) {
    auto it = remaining.find(symbol);
    if (it == remaining.end()) {
      throw UnknownSymbol("symbol \"" + symbol + "\" is not in the population");
    }
    if (it->second == 0) return Rational(0);  // over-drawn
    p *= Rational(BigInt(it->second), urn);
    --it->second;
    --urn;
  }
  return p;
}

JointPmf joint_from_population(const PopulationSpec& spec) {
  const int k = spec.draw_count();
  if (k > kMaxLatticeDimensions) {
    throw DimensionCapExceeded("draw count " + std::to_string(k) + " exceeds the cap of " +
                               std::to_string(kMaxLatticeDimensions) + " dimensions");
  }
  const Alphabet& alphabet = spec.alphabet();
  const std::size_t m = alphabet.size();

  std::size_t total = 1;
  for (int d = 0; d < k; ++d) {
    if (total > kMaxTensorEntries / m) {
      throw DimensionCapExceeded("joint tensor would exceed " +
                                 std::to_string(kMaxTensorEntries) + " entries");
    }
    total *= m;
  }

  std::vector<std::int64_t> remaining;
  remaining.reserve(m);
  for (std::size_t s = 0; s < m; ++s) {
    remaining.push_back(static_cast<std::int64_t>(spec.counts().at(alphabet.symbol(s))));
  }

  std::vector<Rational> tensor(total, Rational(0));
  // Depth-first over draw positions, updating the running product and the
  // urn in place. Subtrees under a zero-probability branch stay zero.
  BigInt urn = spec.population_size();
  auto build = [&](auto&& self, int depth, std::size_t base, std::size_t block,
                   const Rational& p) -> void {
    if (depth == k) {
      tensor[base] = p;
      return;
    }
    const std::size_t child_block = block / m;
    for (std::size_t s = 0; s < m; ++s) {
      if (remaining[s] == 0) continue;
      Rational child = p * Rational(BigInt(remaining[s]), urn);
      --remaining[s];
      --urn;
      self(self, depth + 1, base + s * child_block, child_block, child);
      ++remaining[s];
      ++urn;
    }
  };
  build(build, 0, 0, total, Rational(1));

  std::vector<Alphabet> alphabets(static_cast<std::size_t>(k), alphabet);
  return JointPmf::from_rationals(std::move(alphabets), std::move(tensor));
}

ReferenceSpec reference_from_population(const PopulationSpec& spec) {
  const Alphabet& alphabet = spec.alphabet();
  std::vector<Rational> q;
  q.reserve(alphabet.size());
  for (std::size_t s = 0; s < alphabet.size(); ++s) {
    q.emplace_back(BigInt(spec.counts().at(alphabet.symbol(s))), spec.population_size());
  }
  return ReferenceSpec::homogeneous(DimensionPmf::from_rationals(alphabet, std::move(q)),
                                    spec.draw_count());
}

}  // namespace kldecomp
