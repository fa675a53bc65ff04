#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "rigidity/assur.hpp"
#include "rigidity/canonical.hpp"
#include "rigidity/generate.hpp"
#include "rigidity/pebble.hpp"

using namespace rigidity;

namespace {

Multigraph wheel(std::size_t rim) {
  Multigraph m = graphs::cycle(rim);
  const Vertex hub = m.add_vertex();
  for (Vertex v = 0; v < rim; ++v) m.add_edge(hub, v);
  return m;
}

std::vector<SplitSide> sides(std::initializer_list<int> xs) {
  std::vector<SplitSide> out;
  for (int x : xs) out.push_back(static_cast<SplitSide>(x));
  return out;
}

}  // namespace

TEST(VertexAddition, Henneberg) {
  Multigraph edge(2);
  edge.add_edge(0, 1);
  const Multigraph tri = vertex_addition(edge, 0, 1);
  EXPECT_TRUE(oracle::isomorphic(tri, graphs::complete(3)));
  const Multigraph k4_minus = vertex_addition(tri, 0, 1);
  EXPECT_TRUE(is_isostatic(k4_minus));
  EXPECT_THROW(vertex_addition(tri, 1, 1), std::invalid_argument);

  std::mt19937_64 rng(3);
  Multigraph g = edge;
  for (int k = 0; k < 7; ++k) {
    std::uniform_int_distribution<Vertex> pick(0, g.vertex_count() - 1);
    Vertex u = pick(rng), w = pick(rng);
    while (w == u) w = pick(rng);
    g = vertex_addition(g, u, w);
    EXPECT_TRUE(oracle::laman(g));
  }
}

TEST(EdgeSplit, K4ToWheel) {
  const Multigraph w = edge_split(graphs::complete(4), 0, 1, 2);
  EXPECT_TRUE(oracle::circuit(w));
  EXPECT_TRUE(oracle::isomorphic(w, wheel(4)));
  EXPECT_THROW(edge_split(graphs::complete(4), 0, 1, 1), std::invalid_argument);
  EXPECT_THROW(edge_split(graphs::cycle(4), 0, 2, 1), std::invalid_argument);
}

TEST(EdgeSplit, IsostaticTriangle) {
  const Multigraph g = edge_split(graphs::complete(3), 0, 1, 2);
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_TRUE(is_isostatic(g));
}

TEST(EdgeSplit, TriadInnerEdge) {
  const PinnedGraph g = edge_split(graphs::triad(), 0, 1, 2);
  EXPECT_EQ(g.inner_count(), 4u);
  EXPECT_TRUE(is_assur(g).overall);
  EXPECT_TRUE(oracle::minimal(g));
}

TEST(TwoSum, K4PlusK4) {
  const Multigraph s = two_sum(graphs::complete(4), graphs::complete(4), 0, 1, 0, 1);
  EXPECT_EQ(s.vertex_count(), 6u);
  EXPECT_EQ(s.edge_count(), 10u);
  EXPECT_TRUE(oracle::circuit(s));
}

TEST(TwoSum, DoubledEdgeIsNeutral) {
  const Multigraph s = two_sum(graphs::doubled_edge(), graphs::complete(4), 0, 1, 2, 3);
  EXPECT_EQ(canonical_code(s), canonical_code(graphs::complete(4)));
}

TEST(TwoSum, NonCircuitFlagged) {
  const CheckedTwoSum bad = two_sum_checked(graphs::cycle(4), graphs::complete(4), 0, 1, 0, 1);
  EXPECT_FALSE(bad.inputs_are_circuits);
  EXPECT_EQ(bad.graph.vertex_count(), 6u);
  const CheckedTwoSum good = two_sum_checked(graphs::complete(4), wheel(4), 0, 1, 0, 4);
  EXPECT_TRUE(good.inputs_are_circuits);
  EXPECT_TRUE(oracle::circuit(good.graph));
}

TEST(TwoSum, AssurViaCircuitsThenResplit) {
  // Glue the contractions of two triads away from their hubs, then split the hub again.
  const Multigraph s = two_sum(graphs::complete(4), graphs::complete(4), 0, 1, 0, 1);
  const Vertex hub = 3;  // first K4's vertex 3 keeps its index
  std::vector<std::size_t> labels;
  for (std::size_t k = 0; k < s.incident_edges(hub).size(); ++k) labels.push_back(k);
  const PinnedGraph g = split_contracted_vertex(s, hub, labels);
  EXPECT_TRUE(is_assur(g).overall);
  EXPECT_TRUE(oracle::minimal(g));
}

TEST(VertexSplit, WheelHubAndK4) {
  const Multigraph w5 = wheel(5);
  const Vertex hub = 5;
  const Multigraph six = vertex_split(w5, hub, sides({0, 0, 2, 1, 1}));
  EXPECT_EQ(six.vertex_count(), 7u);
  EXPECT_TRUE(oracle::circuit(six));

  const Multigraph five = vertex_split(graphs::complete(4), 0, sides({0, 2, 1}));
  EXPECT_TRUE(oracle::circuit(five));
  EXPECT_EQ(canonical_code(five), canonical_code(wheel(4)));

  EXPECT_THROW(vertex_split(graphs::complete(4), 0, sides({0, 0, 2})), std::invalid_argument);
  EXPECT_THROW(vertex_split(graphs::complete(4), 0, sides({0, 1, 1})), std::invalid_argument);
}

TEST(VertexSplit, TriadInnerVertex) {
  PinnedGraph t = graphs::triad();
  // a has edges ab, ac, a-p1.
  const PinnedGraph g = vertex_split(t, 0, sides({0, 2, 1}));
  EXPECT_EQ(g.inner_count(), 4u);
  EXPECT_TRUE(is_assur(g).overall);
}

TEST(PinRearrangement, Examples) {
  const PinnedGraph triad = graphs::triad();
  const std::vector<std::size_t> merge{0, 0, 1};
  const PinnedGraph two = pin_rearrangement(triad, merge);
  EXPECT_EQ(two.pin_count(), 2u);
  EXPECT_TRUE(is_assur(two).overall);
  EXPECT_EQ(canonical_code(contract_pins(two)), canonical_code(contract_pins(triad)));

  const std::vector<std::size_t> swap{1, 0};
  EXPECT_TRUE(oracle::isomorphic(pin_rearrangement(graphs::dyad(), swap), graphs::dyad()));
  const std::vector<std::size_t> one{0, 0};
  EXPECT_THROW(pin_rearrangement(graphs::dyad(), one), std::invalid_argument);
}

TEST(PinRearrangement, FiveVertexAllAssignments) {
  const std::vector<std::size_t> labels{0, 0, 1};
  const PinnedGraph g = split_contracted_vertex(graphs::complete(4), 3, labels);
  const auto star = canonical_code(contract_pins(g));
  const auto edges = pin_edges(g);
  std::size_t valid = 0;
  for (const auto& p : set_partitions(edges.size(), 2)) {
    PinnedGraph r;
    try {
      r = pin_rearrangement(g, p);
    } catch (const std::invalid_argument&) {
      continue;
    }
    ++valid;
    EXPECT_EQ(canonical_code(contract_pins(r)), star);
    EXPECT_TRUE(is_assur(r).overall);
  }
  EXPECT_EQ(valid, 4u);
}

TEST(SetPartitions, BellNumbers) {
  EXPECT_EQ(set_partitions(4, 1).size(), 15u);
  EXPECT_EQ(set_partitions(5, 1).size(), 52u);
  EXPECT_EQ(set_partitions(3, 2).size(), 4u);
}

TEST(EnumerateCircuits, MatchesOracleSweep) {
  const auto circuits = enumerate_circuits(6);
  ASSERT_EQ(circuits.at(4).size(), 1u);
  EXPECT_TRUE(oracle::isomorphic(circuits.at(4)[0], graphs::complete(4)));
  for (std::size_t n = 4; n <= 6; ++n) {
    const auto reps = oracle::classes(oracle::circuit_sweep(n));
    ASSERT_EQ(circuits.at(n).size(), reps.size()) << "n=" << n;
    for (const auto& r : reps) {
      bool found = false;
      for (const auto& c : circuits.at(n)) found = found || oracle::isomorphic(r, c);
      EXPECT_TRUE(found);
    }
    for (const auto& c : circuits.at(n)) EXPECT_EQ(c.edge_count() % 2, 0u);
  }
  EXPECT_THROW(enumerate_circuits(3), std::invalid_argument);
  EXPECT_THROW(enumerate_circuits(11), std::invalid_argument);
}

TEST(EnumerateAssur, SmallCounts) {
  const auto assur = enumerate_assur(5);
  EXPECT_EQ(assur.at(3).size(), 1u);
  EXPECT_TRUE(oracle::isomorphic(assur.at(3)[0], graphs::dyad()));
  EXPECT_EQ(assur.at(4).size(), 0u);
  const auto sweep = oracle::pinned_isostatic_sweep(5);
  std::vector<PinnedGraph> minimal;
  for (const auto& g : sweep)
    if (oracle::minimal(g)) minimal.push_back(g);
  EXPECT_EQ(assur.at(5).size(), oracle::classes(minimal).size());
  for (const auto& [n, list] : assur)
    for (const auto& g : list) EXPECT_TRUE(is_assur(g).overall);
}
