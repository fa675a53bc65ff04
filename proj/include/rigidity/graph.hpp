#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace rigidity {

using Vertex = std::size_t;

/// Unordered pair of distinct vertices. Stored as given; use normalized() for comparisons.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge normalized() const { return u <= v ? Edge{u, v} : Edge{v, u}; }
  bool touches(Vertex w) const { return u == w || v == w; }
  Vertex other(Vertex w) const { return u == w ? v : u; }
  friend bool operator==(const Edge& a, const Edge& b) {
    const Edge x = a.normalized(), y = b.normalized();
    return x.u == y.u && x.v == y.v;
  }
  friend bool operator<(const Edge& a, const Edge& b) {
    const Edge x = a.normalized(), y = b.normalized();
    return x.u != y.u ? x.u < y.u : x.v < y.v;
  }
};

enum class VertexKind : std::uint8_t { inner, pinned };

// Unpinned graph with parallel edges allowed. Loops are rejected.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(std::size_t vertex_count);
  Multigraph(std::size_t vertex_count, std::span<const Edge> edges);

  Vertex add_vertex(std::string name = {});
  std::size_t add_edge(Vertex u, Vertex v);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }
  const std::string& name(Vertex v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Vertex> find(const std::string& name) const;

  std::size_t degree(Vertex v) const;
  std::vector<std::size_t> degrees() const;
  /// Edge indices incident to v, ascending.
  std::vector<std::size_t> incident_edges(Vertex v) const;
  std::size_t multiplicity(Vertex u, Vertex v) const;
  /// Vertices with at least one incident edge.
  std::size_t spanned_vertex_count() const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<Edge> edges_;
};

// G(I,P;E): simple graph whose vertices are inner or pinned, every edge touching an inner vertex.
class PinnedGraph {
 public:
  PinnedGraph() = default;

  Vertex add_inner(std::string name = {});
  Vertex add_pin(std::string name = {});
  Vertex add_vertex(VertexKind kind, std::string name = {});
  /// Throws on loops, pin-pin edges, duplicates, or unknown vertices.
  std::size_t add_edge(Vertex u, Vertex v);

  std::size_t vertex_count() const { return kinds_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t inner_count() const;
  std::size_t pin_count() const;
  std::vector<Vertex> inner_vertices() const;
  std::vector<Vertex> pins() const;
  bool is_pin(Vertex v) const { return kinds_.at(v) == VertexKind::pinned; }
  VertexKind kind(Vertex v) const { return kinds_.at(v); }
  const std::vector<VertexKind>& kinds() const { return kinds_; }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }
  bool has_edge(Vertex u, Vertex v) const;
  const std::string& name(Vertex v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Vertex> find(const std::string& name) const;

  std::size_t degree(Vertex v) const;
  std::vector<std::size_t> incident_edges(Vertex v) const;
  /// True when some pin carries no edge.
  bool has_isolated_pin() const;

  /// Same graph with every vertex treated as an ordinary unpinned vertex.
  Multigraph underlying() const;

 private:
  std::vector<VertexKind> kinds_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<Edge> edges_;
};

/// Result of identifying all pins of a pinned graph into one hub vertex p*.
struct Contraction {
  Multigraph graph;
  Vertex hub = 0;
  /// vertex_map[v] is the image of pinned-graph vertex v in `graph`.
  std::vector<Vertex> vertex_map;
};

Contraction contract(const PinnedGraph& g);
/// G* with V* = I + {p*}; edge i of the result is the image of edge i of g.
Multigraph contract_pins(const PinnedGraph& g);

/// Splits vertex v of m into pins. `labels[k]` is the pin label of the k-th edge of
/// m.incident_edges(v). Needs at least two labels, and labels sharing an inner
/// neighbour must differ (pinned graphs are simple).
PinnedGraph split_contracted_vertex(const Multigraph& m, Vertex v,
                                    std::span<const std::size_t> labels);

/// Pins of H (by H vertex index) mapped injectively into vertices of G.
struct CompositionMap {
  std::map<Vertex, Vertex> pin_targets;
};

/// Linkage composition C(H,G): G's vertices keep their indices, H's inner vertices are
/// appended (renamed on name collision), H's pins are identified with their targets.
PinnedGraph compose(const PinnedGraph& h, const PinnedGraph& g, const CompositionMap& map);

/// Removes vertex v and its incident edges; remaining vertices keep their relative order.
PinnedGraph delete_vertex(const PinnedGraph& g, Vertex v);
PinnedGraph delete_edge(const PinnedGraph& g, std::size_t edge_index);
Multigraph delete_edge(const Multigraph& m, std::size_t edge_index);

/// Relabels vertices: vertex v of g becomes perm[v]; edges are reordered by `edge_order` if given.
PinnedGraph permute(const PinnedGraph& g, std::span<const Vertex> perm,
                    std::span<const std::size_t> edge_order = {});
Multigraph permute(const Multigraph& m, std::span<const Vertex> perm,
                   std::span<const std::size_t> edge_order = {});

// Small named graphs used throughout.
namespace graphs {
Multigraph complete(std::size_t n);
Multigraph cycle(std::size_t n);
Multigraph doubled_edge();
PinnedGraph dyad();
/// Triangle a,b,c with one edge from each to its own pin.
PinnedGraph triad();
}  // namespace graphs

}  // namespace rigidity
