#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kldecomp {

// Ordered set of distinct symbol labels for one dimension. Symbols are
// sorted lexicographically at construction so index <-> symbol is a
// deterministic mapping regardless of input order.
class Alphabet {
 public:
  // Throws InvalidPmf if symbols is empty or contains duplicates.
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbol(std::size_t index) const { return symbols_[index]; }
  const std::vector<std::string>& symbols() const { return symbols_; }

  std::optional<std::size_t> find(std::string_view symbol) const;
  // Throws UnknownSymbol.
  std::size_t index_of(std::string_view symbol) const;

  bool operator==(const Alphabet& other) const = default;

 private:
  std::vector<std::string> symbols_;
};

}  // namespace kldecomp
