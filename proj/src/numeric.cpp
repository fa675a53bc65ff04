#include "rigidity/numeric.hpp"

#include <algorithm>

namespace rigidity {

Configuration<ModP> random_configuration(std::size_t vertex_count, const std::vector<Edge>& edges,
                                         std::mt19937_64& rng) {
  Configuration<ModP> c(vertex_count);
  for (;;) {
    for (auto& p : c) p = {ModP::random(rng), ModP::random(rng)};
    if (std::none_of(edges.begin(), edges.end(), [&](const Edge& e) { return c[e.u] == c[e.v]; })) return c;
  }
}

std::size_t generic_rank_randomized(const Multigraph& m, std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  std::size_t best = 0;
  for (int t = 0; t < std::max(trials, 1); ++t) {
    const auto c = random_configuration(m.vertex_count(), m.edges(), rng);
    best = std::max(best, matrix_rank(build_rigidity_matrix(m, c).entries));
  }
  return best;
}

std::size_t generic_rank_randomized(const PinnedGraph& g, std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  std::size_t best = 0;
  for (int t = 0; t < std::max(trials, 1); ++t) {
    const auto c = random_configuration(g.vertex_count(), g.edges(), rng);
    best = std::max(best, matrix_rank(build_rigidity_matrix(g, c).entries));
  }
  return best;
}

namespace {

// Velocities of one random combination of the basis; empty when there is no motion.
std::vector<Point<ModP>> random_motion(const PinnedGraph& g, std::mt19937_64& rng) {
  const auto c = random_configuration(g.vertex_count(), g.edges(), rng);
  const auto basis = motion_space(g, c);
  if (basis.dimension() == 0) return {};
  std::vector<Point<ModP>> velocity(g.vertex_count());
  for (const auto& motion : basis.motions) {
    const ModP w = ModP::random(rng);
    for (std::size_t k = 0; k < basis.vertices.size(); ++k) {
      velocity[basis.vertices[k]].x += w * motion[k].x;
      velocity[basis.vertices[k]].y += w * motion[k].y;
    }
  }
  return velocity;
}

bool moving(const Point<ModP>& p) { return !p.x.is_zero() || !p.y.is_zero(); }

}  // namespace

bool all_inner_move(const PinnedGraph& g, const MotionOptions& options) {
  const auto inner = g.inner_vertices();
  if (inner.empty()) throw std::invalid_argument("motion check needs an inner vertex");
  std::mt19937_64 rng(options.seed);
  for (int t = 0; t < std::max(options.trials, 1); ++t) {
    const auto velocity = random_motion(g, rng);
    if (velocity.empty()) continue;
    if (std::all_of(inner.begin(), inner.end(), [&](Vertex v) { return moving(velocity[v]); })) return true;
  }
  return false;
}

std::vector<bool> inner_motion_support(const PinnedGraph& g, const MotionOptions& options) {
  std::vector<bool> support(g.vertex_count(), false);
  std::mt19937_64 rng(options.seed);
  for (int t = 0; t < std::max(options.trials, 1); ++t) {
    const auto velocity = random_motion(g, rng);
    for (Vertex v = 0; v < velocity.size(); ++v)
      if (!g.is_pin(v) && moving(velocity[v])) support[v] = true;
  }
  return support;
}

}  // namespace rigidity
