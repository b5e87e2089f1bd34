#include "kldecomp/alphabet.hpp"

#include <algorithm>

#include "kldecomp/errors.hpp"

namespace kldecomp {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) {
    throw InvalidPmf("alphabet must contain at least one symbol");
  }
  std::sort(symbols_.begin(), symbols_.end());
  auto dup = std::adjacent_find(symbols_.begin(), symbols_.end());
  if (dup != symbols_.end()) {
    throw InvalidPmf("duplicate symbol in alphabet: \"" + *dup + "\"");
  }
}

std::optional<std::size_t> Alphabet::find(std::string_view symbol) const {
  auto it = std::lower_bound(symbols_.begin(), symbols_.end(), symbol);
  if (it == symbols_.end() || *it != symbol) return std::nullopt;
  return static_cast<std::size_t>(it - symbols_.begin());
}

std::size_t Alphabet::index_of(std::string_view symbol) const {
  auto idx = find(symbol);
  if (!idx) {
    throw UnknownSymbol("symbol \"" + std::string(symbol) + "\" is not in the alphabet");
  }
  return *idx;
}

}  // namespace kldecomp
