#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "rigidity/graph.hpp"
#include "rigidity/pebble.hpp"

using namespace rigidity;

namespace {

Multigraph triangle_chain(std::size_t triangles) {
  Multigraph m(2);
  m.add_edge(0, 1);
  for (std::size_t k = 0; k < triangles; ++k) {
    const Vertex n = m.vertex_count();
    const Vertex v = m.add_vertex();
    m.add_edge(n - 1, v);
    m.add_edge(n - 2, v);
  }
  return m;
}

}  // namespace

TEST(PebbleGame, InvariantsHold) {
  std::mt19937_64 rng(5);
  const Multigraph m = oracle::random_graph(8, 16, rng);
  PebbleGame game(m.vertex_count());
  for (const Edge& e : m.edges()) {
    game.try_insert(e.u, e.v);
    std::size_t out = 0;
    for (Vertex v = 0; v < m.vertex_count(); ++v) {
      EXPECT_EQ(game.pebbles(v) + static_cast<int>(game.outdegree(v)), 2);
      out += game.outdegree(v);
    }
    EXPECT_EQ(out, game.accepted());
    EXPECT_EQ(game.free_pebbles(), 2 * m.vertex_count() - game.accepted());
  }
}

TEST(PebbleRank, Examples) {
  const RankReport k4 = pebble_rank(graphs::complete(4));
  EXPECT_EQ(k4.rank, 5u);
  EXPECT_EQ(k4.rejected_edges.size(), 1u);
  const RankReport doubled = pebble_rank(graphs::doubled_edge());
  EXPECT_EQ(doubled.rank, 1u);
  EXPECT_EQ(doubled.rejected_edges, std::vector<std::size_t>{1});
  const Multigraph chain = triangle_chain(3);
  const RankReport r = pebble_rank(chain);
  EXPECT_EQ(r.rank, 2 * chain.vertex_count() - 3);
  EXPECT_TRUE(r.rejected_edges.empty());
  EXPECT_TRUE(oracle::laman(chain));
}

TEST(PebbleRank, MatchesOracleRank) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 4 + trial % 4;
    const Multigraph m = oracle::random_graph(n, std::min<std::size_t>(n * (n - 1) / 2, 2 * n - 3 + trial % 4), rng);
    const RankReport r = pebble_rank(m);
    if (m.edge_count() <= 14) ASSERT_EQ(r.rank, oracle::rank(m));
    Multigraph basis(n);
    for (std::size_t i : r.independent_edges) basis.add_edge(m.edge(i).u, m.edge(i).v);
    EXPECT_TRUE(oracle::laman(basis));
  }
}

TEST(FundamentalCircuit, K4AndDoubledEdge) {
  const Multigraph k4 = graphs::complete(4);
  const RankReport r = pebble_rank(k4);
  EXPECT_EQ(fundamental_circuit(k4, r, r.rejected_edges[0]).size(), 6u);
  const Multigraph d = graphs::doubled_edge();
  const RankReport rd = pebble_rank(d);
  EXPECT_EQ(fundamental_circuit(d, rd, 1), (std::vector<std::size_t>{0, 1}));
  EXPECT_THROW(fundamental_circuit(d, rd, 0), std::invalid_argument);
}

TEST(FundamentalCircuit, K4WithPendantPath) {
  Multigraph m = graphs::complete(4);
  const Vertex a = m.add_vertex(), b = m.add_vertex();
  m.add_edge(3, a);
  m.add_edge(a, b);
  // Pendant edges first so the rejection happens late.
  std::vector<std::size_t> order{6, 7, 0, 1, 2, 3, 4, 5};
  const RankReport r = pebble_rank(m, order);
  ASSERT_EQ(r.rejected_edges.size(), 1u);
  const auto c = fundamental_circuit(m, r, r.rejected_edges[0]);
  EXPECT_EQ(c, (std::vector<std::size_t>{0, 1, 2, 3, 4, 5}));
}

TEST(FundamentalCircuit, OracleMinimality) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Multigraph m = oracle::random_graph(7, 13, rng);
    const RankReport r = pebble_rank(m);
    for (std::size_t e : r.rejected_edges) {
      Multigraph c(7);
      for (std::size_t i : fundamental_circuit(m, r, e)) c.add_edge(m.edge(i).u, m.edge(i).v);
      ASSERT_TRUE(oracle::circuit(c));
    }
  }
}

TEST(Isostatic, Examples) {
  EXPECT_TRUE(is_isostatic(graphs::complete(3)));
  EXPECT_FALSE(is_isostatic(graphs::complete(4)));
  EXPECT_FALSE(is_isostatic(graphs::cycle(4)));
  EXPECT_EQ(generic_dof(graphs::cycle(4)), 1);
  EXPECT_EQ(generic_dof(graphs::complete(4)), 0);
  EXPECT_TRUE(is_circuit(graphs::complete(4)));
  EXPECT_TRUE(is_circuit(graphs::doubled_edge()));
}

TEST(PinnedIsostatic, Examples) {
  EXPECT_TRUE(pinned_isostatic(graphs::dyad()));
  EXPECT_TRUE(pinned_isostatic(graphs::triad()));
  const PinnedGraph pendulum = delete_edge(graphs::dyad(), 0);
  EXPECT_FALSE(pinned_isostatic(pendulum));
  EXPECT_EQ(pinned_dof(pendulum), 1);
  PinnedGraph one_pin;
  one_pin.add_edge(one_pin.add_inner(), one_pin.add_pin());
  EXPECT_THROW(pinned_isostatic(one_pin), std::invalid_argument);
}

TEST(PinnedIsostatic, ScaffoldShape) {
  const PinnedGraph g = graphs::triad();
  const Multigraph s = pin_scaffold(g);
  EXPECT_EQ(s.vertex_count(), g.vertex_count() + 1);
  // Path over three pins (2 edges) plus the apex joined to each pin (3 edges).
  EXPECT_EQ(s.edge_count(), g.edge_count() + 5);
}

TEST(PinnedIsostatic, MatchesPinnedConditionsSweep) {
  // Every pinned graph on 5 vertices with |E| = 2|I| and no isolated pin.
  for (std::size_t inner = 1; inner <= 3; ++inner) {
    const std::size_t total = 5;
    std::vector<Edge> cand;
    for (Vertex u = 0; u < inner; ++u)
      for (Vertex v = u + 1; v < total; ++v) cand.push_back({u, v});
    std::vector<bool> pick(cand.size(), false);
    if (2 * inner > cand.size()) continue;
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(2 * inner), pick.end(), true);
    do {
      PinnedGraph g;
      for (std::size_t v = 0; v < inner; ++v) g.add_inner();
      for (std::size_t p = inner; p < total; ++p) g.add_pin();
      for (std::size_t i = 0; i < cand.size(); ++i)
        if (pick[i]) g.add_edge(cand[i].u, cand[i].v);
      ASSERT_EQ(pinned_isostatic(g), oracle::pinned_conditions(g));
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
}

TEST(PinnedDof, ContractionCircuitCount) {
  // Stacked dyads: the contraction is rigid and holds a single circuit, the doubled edge.
  PinnedGraph g;
  const Vertex a = g.add_inner(), b = g.add_inner();
  const Vertex p1 = g.add_pin(), p2 = g.add_pin(), p3 = g.add_pin();
  g.add_edge(a, p1);
  g.add_edge(a, p2);
  g.add_edge(a, b);
  g.add_edge(b, p3);
  EXPECT_EQ(pinned_dof(g), 0);
  const Contraction c = contract(g);
  const RankReport r = pebble_rank(c.graph);
  EXPECT_EQ(c.graph.edge_count() - r.rank, 1u + static_cast<std::size_t>(generic_dof(c.graph)));
  std::vector<std::vector<std::size_t>> circuits;
  for (std::size_t e : r.rejected_edges) circuits.push_back(fundamental_circuit(c.graph, r, e));
  EXPECT_EQ(circuits.size(), 1u);

  // Two dyads side by side: flexible contraction, two circuits sharing only the hub.
  PinnedGraph h;
  const Vertex x = h.add_inner(), y = h.add_inner();
  const Vertex q1 = h.add_pin(), q2 = h.add_pin(), q3 = h.add_pin(), q4 = h.add_pin();
  h.add_edge(x, q1);
  h.add_edge(x, q2);
  h.add_edge(y, q3);
  h.add_edge(y, q4);
  const Contraction ch = contract(h);
  const RankReport rh = pebble_rank(ch.graph);
  EXPECT_EQ(generic_dof(ch.graph), 1);
  ASSERT_EQ(rh.rejected_edges.size(), 2u);
  const auto c1 = fundamental_circuit(ch.graph, rh, rh.rejected_edges[0]);
  const auto c2 = fundamental_circuit(ch.graph, rh, rh.rejected_edges[1]);
  for (std::size_t i : c1) EXPECT_EQ(std::count(c2.begin(), c2.end(), i), 0);
}

TEST(PinnedOverbraced, Witness) {
  PinnedGraph g;
  const Vertex a = g.add_inner(), b = g.add_inner();
  const Vertex p1 = g.add_pin(), p2 = g.add_pin(), p3 = g.add_pin();
  g.add_edge(a, p1);
  g.add_edge(a, p2);
  g.add_edge(a, p3);
  g.add_edge(b, p1);
  EXPECT_FALSE(pinned_isostatic(g));
  const auto w = pinned_overbraced_witness(g);
  EXPECT_EQ(w, (std::vector<std::size_t>{0, 1, 2}));
}
