#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rigidity/graph.hpp"

namespace rigidity {

// Incremental (2,3)-pebble game. Every vertex starts with two pebbles; an accepted
// edge is oriented away from the vertex whose pebble covers it. Invariant:
// pebbles(v) + outdegree(v) == 2.
class PebbleGame {
 public:
  explicit PebbleGame(std::size_t vertex_count);

  /// Accepts (u,v) iff four pebbles can be gathered on its endpoints.
  bool try_insert(Vertex u, Vertex v);

  std::size_t vertex_count() const { return pebbles_.size(); }
  std::size_t accepted() const { return accepted_; }
  int pebbles(Vertex v) const { return pebbles_.at(v); }
  std::size_t outdegree(Vertex v) const { return out_.at(v).size(); }
  std::size_t free_pebbles() const;
  /// Vertices reachable from the endpoints of the most recently rejected edge.
  const std::vector<Vertex>& last_closure() const { return closure_; }

 private:
  bool pull_pebble(Vertex to, Vertex keep);
  std::vector<Vertex> reach(Vertex a, Vertex b) const;

  std::vector<int> pebbles_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<Vertex> closure_;
  std::size_t accepted_ = 0;
};

struct RankReport {
  std::size_t rank = 0;
  /// Edge indices of a basis of the span, in insertion order.
  std::vector<std::size_t> independent_edges;
  /// Dependent edge indices, in insertion order.
  std::vector<std::size_t> rejected_edges;
};

/// Generic 2D rigidity rank. `edge_order` is a permutation of edge indices (default: as stored).
RankReport pebble_rank(const Multigraph& m, std::span<const std::size_t> edge_order = {});

bool is_independent(const Multigraph& m);
/// Independence of the given edge subset of m.
bool is_independent(const Multigraph& m, std::span<const std::size_t> edge_subset);

/// Unique circuit inside report.independent_edges + {e}. Throws if e was not rejected.
std::vector<std::size_t> fundamental_circuit(const Multigraph& m, const RankReport& report,
                                             std::size_t rejected_edge);

/// |E| = 2|V'| - 2 over the spanned vertices V' and every single-edge deletion is independent.
bool is_circuit(const Multigraph& m);
bool is_isostatic(const Multigraph& m);
int generic_dof(const Multigraph& m);

/// G together with the pin scaffold: a path through the pins plus a fresh apex joined to
/// every pin. Scaffold edges come first; the apex is the last vertex.
Multigraph pin_scaffold(const PinnedGraph& g);

bool pinned_isostatic(const PinnedGraph& g);
int pinned_dof(const PinnedGraph& g);

/// Edges of g (by index) forming a dependent set once the pins are braced; empty if none.
std::vector<std::size_t> pinned_overbraced_witness(const PinnedGraph& g);

}  // namespace rigidity
