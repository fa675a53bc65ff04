#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "rigidity/graph.hpp"
#include "rigidity/linalg.hpp"
#include "rigidity/modp.hpp"

namespace rigidity {

template <class T>
struct Point {
  T x{};
  T y{};
  friend bool operator==(const Point&, const Point&) = default;
};

/// Position of every vertex, indexed by vertex.
template <class T>
using Configuration = std::vector<Point<T>>;

class CoincidentEndpointsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Rows indexed by edges, two columns per vertex that owns velocity variables
// (every vertex for a multigraph, inner vertices only for a pinned graph).
template <class T>
struct RigidityMatrix {
  DenseMatrix<T> entries;
  /// column_vertices[k] owns columns 2k and 2k+1.
  std::vector<Vertex> column_vertices;
};

namespace detail {

template <class T>
RigidityMatrix<T> assemble(std::size_t vertex_count, const std::vector<Edge>& edges,
                           const std::vector<bool>& has_columns, const Configuration<T>& c) {
  if (c.size() != vertex_count) throw std::invalid_argument("configuration does not cover every vertex");
  RigidityMatrix<T> r;
  std::vector<std::size_t> slot(vertex_count, vertex_count);
  for (Vertex v = 0; v < vertex_count; ++v)
    if (has_columns[v]) {
      slot[v] = r.column_vertices.size();
      r.column_vertices.push_back(v);
    }
  r.entries = DenseMatrix<T>(edges.size(), 2 * r.column_vertices.size());
  for (std::size_t row = 0; row < edges.size(); ++row) {
    const Edge& e = edges[row];
    if (c[e.u] == c[e.v]) throw CoincidentEndpointsError("adjacent vertices share a position");
    const T dx = c[e.u].x - c[e.v].x;
    const T dy = c[e.u].y - c[e.v].y;
    if (has_columns[e.u]) {
      r.entries(row, 2 * slot[e.u]) = dx;
      r.entries(row, 2 * slot[e.u] + 1) = dy;
    }
    if (has_columns[e.v]) {
      r.entries(row, 2 * slot[e.v]) = T{} - dx;
      r.entries(row, 2 * slot[e.v] + 1) = T{} - dy;
    }
  }
  return r;
}

}  // namespace detail

template <class T>
RigidityMatrix<T> build_rigidity_matrix(const Multigraph& m, const Configuration<T>& c) {
  return detail::assemble(m.vertex_count(), m.edges(), std::vector<bool>(m.vertex_count(), true), c);
}

/// Pin columns are removed; pins are fixed.
template <class T>
RigidityMatrix<T> build_rigidity_matrix(const PinnedGraph& g, const Configuration<T>& c) {
  std::vector<bool> has_columns(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) has_columns[v] = !g.is_pin(v);
  return detail::assemble(g.vertex_count(), g.edges(), has_columns, c);
}

template <class T>
struct MotionBasis {
  /// Vertices carrying velocities (inner vertices for pinned graphs).
  std::vector<Vertex> vertices;
  /// Each motion assigns velocities[k] to vertices[k].
  std::vector<std::vector<Point<T>>> motions;
  /// Float path only: the elimination met a pivot below 1e-6 of the largest entry.
  bool ill_conditioned = false;

  std::size_t dimension() const { return motions.size(); }
};

namespace detail {

template <class T>
MotionBasis<T> kernel(const RigidityMatrix<T>& r) {
  const auto elim = row_reduce(r.entries);
  MotionBasis<T> out;
  out.vertices = r.column_vertices;
  out.ill_conditioned = elim.smallest_pivot_ratio < 1e-6;
  for (const auto& x : nullspace(elim)) {
    std::vector<Point<T>> motion(r.column_vertices.size());
    for (std::size_t k = 0; k < motion.size(); ++k) motion[k] = {x[2 * k], x[2 * k + 1]};
    out.motions.push_back(std::move(motion));
  }
  return out;
}

}  // namespace detail

/// First-order motions of the pinned framework (pins fixed).
template <class T>
MotionBasis<T> motion_space(const PinnedGraph& g, const Configuration<T>& c) {
  return detail::kernel(build_rigidity_matrix(g, c));
}

/// All first-order motions, trivial ones included.
template <class T>
MotionBasis<T> motion_space(const Multigraph& m, const Configuration<T>& c) {
  return detail::kernel(build_rigidity_matrix(m, c));
}

/// Uniform random configuration over the prime field, adjacent vertices kept distinct.
Configuration<ModP> random_configuration(std::size_t vertex_count, const std::vector<Edge>& edges,
                                         std::mt19937_64& rng);

/// Max over `trials` random exact configurations of the rigidity matrix rank.
std::size_t generic_rank_randomized(const Multigraph& m, std::uint64_t seed, int trials);
/// Rank of the pinned rigidity matrix (inner columns only).
std::size_t generic_rank_randomized(const PinnedGraph& g, std::uint64_t seed, int trials);

struct MotionOptions {
  std::uint64_t seed = 1;
  int trials = 8;
};

/// True if, in some trial, a random combination of the motion basis at a random
/// configuration moves every inner vertex. False when there is no motion at all.
bool all_inner_move(const PinnedGraph& g, const MotionOptions& options = {});

/// Per vertex of g: whether some trial gave it a nonzero velocity (always false for pins).
std::vector<bool> inner_motion_support(const PinnedGraph& g, const MotionOptions& options = {});

}  // namespace rigidity
