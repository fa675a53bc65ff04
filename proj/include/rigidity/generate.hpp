#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "rigidity/canonical.hpp"
#include "rigidity/graph.hpp"

namespace rigidity {

/// Henneberg 2-valent vertex addition: new vertex joined to u and w.
Multigraph vertex_addition(const Multigraph& m, Vertex u, Vertex w);

/// Removes one copy of edge (u,w) and adds a new vertex joined to u, w and x.
Multigraph edge_split(const Multigraph& m, Vertex u, Vertex w, Vertex x);
/// Same on a pinned graph; the new vertex is inner. Rejects x pinned when (u,w) touches a pin.
PinnedGraph edge_split(const PinnedGraph& g, Vertex u, Vertex w, Vertex x);

/// Glues edge (a1,b1) of c1 onto edge (a2,b2) of c2 (a1~a2, b1~b2, or crossed when
/// `crossed`) and deletes the glued edge. c1 keeps its indices; c2's other vertices are
/// appended in index order.
Multigraph two_sum(const Multigraph& c1, const Multigraph& c2, Vertex a1, Vertex b1, Vertex a2, Vertex b2,
                   bool crossed = false);

struct CheckedTwoSum {
  Multigraph graph;
  /// False when either input failed the circuit test; the sum is still formed.
  bool inputs_are_circuits = true;
};

CheckedTwoSum two_sum_checked(const Multigraph& c1, const Multigraph& c2, Vertex a1, Vertex b1, Vertex a2,
                              Vertex b2, bool crossed = false);

enum class SplitSide : unsigned char { first = 0, second = 1, shared = 2 };

/// Replaces v by v and a new vertex v', joined by an edge. `sides[k]` places the k-th
/// edge of incident_edges(v) on v, on v', or on both; exactly one edge is shared and both
/// halves end with degree >= 3.
Multigraph vertex_split(const Multigraph& m, Vertex v, std::span<const SplitSide> sides);
PinnedGraph vertex_split(const PinnedGraph& g, Vertex v, std::span<const SplitSide> sides);

/// Edges of g that touch a pin, ascending; the order used by pin_rearrangement.
std::vector<std::size_t> pin_edges(const PinnedGraph& g);

/// Reattaches the pin-incident edges (pin_edges order) to a fresh pin set given by labels.
/// Needs >= 2 labels; the pin contraction is unchanged.
PinnedGraph pin_rearrangement(const PinnedGraph& g, std::span<const std::size_t> labels);

/// Representatives of every rigidity circuit class built from K4 by edge-splits and 2-sums,
/// keyed by vertex count (4..n_max). Each list is sorted by canonical code.
std::map<std::size_t, std::vector<Multigraph>> enumerate_circuits(std::size_t n_max);

/// Assur graph classes keyed by total vertex count (3..n_max): the dyad plus every pin
/// split of every enumerated circuit. Each list is sorted by canonical code.
std::map<std::size_t, std::vector<PinnedGraph>> enumerate_assur(std::size_t n_max);

/// All set partitions of {0..n-1} into at least `min_blocks` blocks, as block labels.
std::vector<std::vector<std::size_t>> set_partitions(std::size_t n, std::size_t min_blocks);

}  // namespace rigidity
