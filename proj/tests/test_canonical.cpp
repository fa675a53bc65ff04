#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "rigidity/canonical.hpp"
#include "rigidity/graph.hpp"

using namespace rigidity;

namespace {

std::vector<Vertex> shuffled(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST(Canonical, RelabelledDyadSameCode) {
  PinnedGraph g;
  const Vertex p = g.add_pin("x"), v = g.add_inner("y"), q = g.add_pin("z");
  g.add_edge(q, v);
  g.add_edge(v, p);
  EXPECT_EQ(canonical_code(g), canonical_code(graphs::dyad()));
}

TEST(Canonical, DyadDiffersFromDoubledEdge) {
  EXPECT_NE(canonical_code(graphs::dyad()).bytes, canonical_code(graphs::doubled_edge()).bytes);
}

TEST(Canonical, TriadDiffersFromTwoPinSplit) {
  const std::vector<std::size_t> two{0, 0, 1};
  const PinnedGraph five = split_contracted_vertex(graphs::complete(4), 3, two);
  EXPECT_NE(canonical_code(graphs::triad()), canonical_code(five));
}

TEST(Canonical, MultiplicityMatters) {
  Multigraph a(3), b(3);
  a.add_edge(0, 1);
  a.add_edge(0, 1);
  a.add_edge(1, 2);
  b.add_edge(0, 1);
  b.add_edge(1, 2);
  b.add_edge(1, 2);
  Multigraph c(3);
  c.add_edge(0, 1);
  c.add_edge(1, 2);
  c.add_edge(0, 2);
  EXPECT_EQ(canonical_code(a), canonical_code(b));
  EXPECT_NE(canonical_code(a), canonical_code(c));
}

TEST(Canonical, InvariantUnderRandomRelabelling) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 4 + trial % 7;
    const Multigraph m = oracle::random_graph(n, 2 * n - 1, rng);
    const auto perm = shuffled(n, rng);
    EXPECT_EQ(canonical_code(m), canonical_code(permute(m, perm)));
  }
}

TEST(Canonical, DistinguishesAllGraphsOnFiveVertices) {
  // Codes partition graphs exactly as the brute-force isomorphism test does.
  const auto graphs5 = oracle::all_simple_graphs(5);
  const auto reps = oracle::classes(graphs5);
  std::vector<CanonicalCode> codes;
  for (const auto& r : reps) codes.push_back(canonical_code(r));
  std::sort(codes.begin(), codes.end());
  EXPECT_EQ(std::adjacent_find(codes.begin(), codes.end()), codes.end());
  EXPECT_EQ(reps.size(), 34u);
}

TEST(Canonical, AgreesWithOracleOnSixVertices) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Multigraph a = oracle::random_graph(6, 7, rng);
    const Multigraph b = oracle::random_graph(6, 7, rng);
    EXPECT_EQ(canonical_code(a) == canonical_code(b), oracle::isomorphic(a, b));
  }
}

TEST(Canonical, PinnedKindsAreColours) {
  const auto sweep = oracle::pinned_isostatic_sweep(5);
  const auto reps = oracle::classes(sweep);
  std::vector<CanonicalCode> codes;
  for (const auto& r : reps) codes.push_back(canonical_code(r));
  std::sort(codes.begin(), codes.end());
  EXPECT_EQ(std::adjacent_find(codes.begin(), codes.end()), codes.end());
  for (const auto& g : sweep) {
    const auto code = canonical_code(g);
    EXPECT_TRUE(std::binary_search(codes.begin(), codes.end(), code));
  }
}

TEST(Canonical, SizeBound) {
  EXPECT_THROW(canonical_code(graphs::cycle(13)), SizeBoundError);
  EXPECT_NO_THROW(canonical_code(graphs::cycle(13), 13));
}

TEST(Canonical, HexRoundTrip) {
  const auto code = canonical_code(graphs::triad());
  EXPECT_EQ(CanonicalCode::from_hex(code.hex()), code);
}

TEST(Canonical, IsomorphismMapsEdges) {
  std::mt19937_64 rng(3);
  const Multigraph a = oracle::random_graph(7, 11, rng);
  const Multigraph b = permute(a, shuffled(7, rng));
  const auto phi = isomorphism(a, b);
  for (const Edge& e : a.edges()) EXPECT_EQ(a.multiplicity(e.u, e.v), b.multiplicity(phi[e.u], phi[e.v]));
  EXPECT_THROW(isomorphism(graphs::cycle(4), graphs::complete(4)), std::invalid_argument);
}
