#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rigidity/graph.hpp"

namespace rigidity {

inline constexpr std::size_t kDefaultCanonicalBound = 12;

/// Thrown when an exhaustive routine is asked to handle more vertices than its bound.
class SizeBoundError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Byte string equal for two graphs iff they are isomorphic (respecting pin/inner
// kinds and edge multiplicities). Pinned graphs and multigraphs never collide.
struct CanonicalCode {
  std::vector<std::uint8_t> bytes;

  std::string hex() const;
  static CanonicalCode from_hex(const std::string& text);
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
};

struct CanonicalForm {
  CanonicalCode code;
  /// order[k] is the input vertex placed at canonical position k.
  std::vector<Vertex> order;
};

CanonicalForm canonical_form(const Multigraph& m, std::size_t bound = kDefaultCanonicalBound);
CanonicalForm canonical_form(const PinnedGraph& g, std::size_t bound = kDefaultCanonicalBound);
CanonicalCode canonical_code(const Multigraph& m, std::size_t bound = kDefaultCanonicalBound);
CanonicalCode canonical_code(const PinnedGraph& g, std::size_t bound = kDefaultCanonicalBound);

/// Vertex bijection a -> b when the graphs are isomorphic (index v of a maps to result[v]).
std::vector<Vertex> isomorphism(const Multigraph& a, const Multigraph& b,
                                std::size_t bound = kDefaultCanonicalBound);

}  // namespace rigidity
