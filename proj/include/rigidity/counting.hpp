#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rigidity/graph.hpp"

namespace rigidity {

inline constexpr std::size_t kOracleBound = 12;
inline constexpr std::size_t kLinkageOracleBound = 20;

struct Joint {
  std::string id;
  std::vector<std::string> links;
};

// Links (ground included), revolute joints pinning two or more links, and the
// subset of links marked as drivers.
struct LinkageSchema {
  std::vector<std::string> links;
  std::string ground;
  std::vector<Joint> joints;
  std::vector<std::string> drivers;

  /// Throws std::invalid_argument on unknown links, a missing ground, or joints with < 2 links.
  void validate() const;
};

struct DofReport {
  int dof = 0;
  int link_count = 0;
  /// Sum over joints of (links pinned - 1).
  int joint_constraints = 0;
  /// Set when a sub-collection of links has a negative count, making `dof` unreliable.
  bool overbraced = false;
  /// Links of one offending sub-collection when `overbraced`.
  std::vector<std::string> overbraced_links;
  /// False when the linkage was too large for the exhaustive sub-collection scan.
  bool overbrace_checked = false;
};

/// F = 3(L-1) - 2 * sum over joints of (k-1).
DofReport grubler_dof(const LinkageSchema& schema);

/// Deletes each driver link and identifies its two end joints into one joint.
LinkageSchema remove_drivers(const LinkageSchema& schema);

/// 2|V| - 3 - |E|, unclamped.
int bar_joint_dof(const Multigraph& m);

/// Bar-and-joint linkage of m: one link per edge (edge 0 is the ground), one joint per
/// vertex of degree >= 2.
LinkageSchema bar_linkage(const Multigraph& m);

// Exhaustive oracles over vertex subsets, limited to kOracleBound vertices.

bool laman_independent_oracle(const Multigraph& m);
/// Vertex subset whose induced edges exceed 2|U| - 3, if any.
std::optional<std::vector<Vertex>> laman_violation(const Multigraph& m);
bool circuit_oracle(const Multigraph& m);
bool pinned_conditions_oracle(const PinnedGraph& g);
/// Vertex subset violating one of the three pinned subgraph bounds, if any.
std::optional<std::vector<Vertex>> pinned_conditions_violation(const PinnedGraph& g);

}  // namespace rigidity
