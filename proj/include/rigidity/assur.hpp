#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rigidity/graph.hpp"
#include "rigidity/numeric.hpp"

namespace rigidity {

// The four equivalent characterizations of Assur graphs. All of them require a pinned
// isostatic input and treat a graph with an isolated pin as not Assur.

/// Every proper vertex subset induces at most 2|I'| - 1 edges (exhaustive up to 12
/// vertices, else answered through the circuit condition).
bool check_minimality(const PinnedGraph& g);
/// Contracting all pins to one vertex gives a rigidity circuit.
bool check_circuit_condition(const PinnedGraph& g);

struct DeletionOptions {
  MotionOptions motion;
  /// Also delete pins, not only inner vertices.
  bool delete_pins = true;
};

/// The dyad, or every vertex deletion leaves a motion of all remaining inner vertices.
bool check_vertex_deletion(const PinnedGraph& g, const DeletionOptions& options = {});
/// Every edge deletion leaves a motion of all inner vertices.
bool check_edge_deletion(const PinnedGraph& g, const MotionOptions& options = {});

struct AssurMethods {
  bool minimality = true;
  bool circuit = true;
  bool vertex_deletion = true;
  bool edge_deletion = true;
};

struct AssurVerdict {
  std::optional<bool> minimality;
  std::optional<bool> circuit;
  std::optional<bool> vertex_deletion;
  std::optional<bool> edge_deletion;
  /// Always the circuit condition, computed even when not selected.
  bool overall = false;
  /// Some selected check disagrees with another; signals a bug or a sampling failure.
  bool disagreement = false;
  std::string reason;
};

AssurVerdict is_assur(const PinnedGraph& g, const AssurMethods& methods = {},
                      const DeletionOptions& options = {});

struct AssurComponent {
  /// Inner vertices keep the host's names; each pin is named after its host target.
  PinnedGraph graph;
  int level = 1;
  /// Component pin vertex -> host vertex name (a ground pin or an inner vertex of a lower level).
  std::map<Vertex, std::string> pin_targets;
};

struct AssurScheme {
  /// Names of the host's pinned vertices.
  std::vector<std::string> ground;
  std::vector<AssurComponent> components;
  /// Cover relation: (a, b) when component b pins onto an inner vertex of component a.
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  /// Transitive closure of `covers`: (a, b) means a < b.
  std::vector<std::pair<std::size_t, std::size_t>> order;

  bool precedes(std::size_t a, std::size_t b) const;
};

/// Unique decomposition of a pinned isostatic graph into Assur components, level by level.
/// `edge_order` (a permutation of edge indices) only changes the pebble insertion order.
AssurScheme decompose(const PinnedGraph& g, std::span<const std::size_t> edge_order = {});

/// Folds components bottom-up with compose(), starting from the bare ground.
PinnedGraph recompose(const AssurScheme& scheme);

/// Rebuilds covers/order from the components' pin targets.
void rebuild_order(AssurScheme& scheme);

}  // namespace rigidity
