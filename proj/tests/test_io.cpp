#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rigidity/assur.hpp"
#include "rigidity/canonical.hpp"
#include "rigidity/io.hpp"

using namespace rigidity;
using rigidity::io::Json;

TEST(GraphFile, ParsesKindsAndPositions) {
  const auto doc = io::parse_graph_text(R"({
    "vertices": [{"id": "v", "kind": "inner", "pos": [0, 1]},
                 {"id": 1, "kind": "pinned", "pos": [-1, 0]},
                 {"id": "p2", "kind": "pinned", "pos": [1, 0]}],
    "edges": [["v", 1], ["v", "p2"]]})");
  EXPECT_TRUE(oracle::isomorphic(doc.graph, graphs::dyad()));
  ASSERT_TRUE(doc.positions);
  EXPECT_EQ((*doc.positions)[1].x, -1.0);
  EXPECT_TRUE(doc.warnings.empty());
  EXPECT_EQ(doc.graph.name(1), "1");
}

TEST(GraphFile, DropsPinPinEdges) {
  const auto doc = io::parse_graph_text(R"({
    "vertices": [{"id": "v", "kind": "inner"}, {"id": "p", "kind": "pinned"}, {"id": "q", "kind": "pinned"}],
    "edges": [["v", "p"], ["p", "q"], ["v", "q"]]})");
  EXPECT_EQ(doc.graph.edge_count(), 2u);
  ASSERT_EQ(doc.warnings.size(), 1u);
  EXPECT_FALSE(doc.positions);
}

TEST(GraphFile, Errors) {
  const char* bad[] = {
      R"({"vertices": [{"id": "v", "kind": "inner"}], "edges": [["v", "v"]]})",
      R"({"vertices": [{"id": "v", "kind": "inner"}, {"id": "w", "kind": "inner"}], "edges": [["v", "w"], ["w", "v"]]})",
      R"({"vertices": [{"id": "v", "kind": "inner"}], "edges": [["v", "x"]]})",
      R"({"vertices": [{"id": "v", "kind": "fixed"}], "edges": []})",
      R"({"vertices": [{"id": "v", "kind": "inner"}, {"id": "v", "kind": "inner"}], "edges": []})",
      R"({"vertices": [)",
  };
  for (const char* text : bad) EXPECT_THROW(io::parse_graph_text(text), io::ParseError) << text;
}

TEST(GraphFile, RoundTrip) {
  const PinnedGraph t = graphs::triad();
  const auto back = io::parse_graph(io::graph_to_json(t));
  EXPECT_EQ(canonical_code(back.graph), canonical_code(t));
}

TEST(LinkageFile, Parses) {
  const LinkageSchema s = io::parse_linkage_text(R"({
    "links": ["0", {"id": "1", "driver": true}, "2", "3"], "ground": "0",
    "joints": [{"id": "A", "incident": ["0", "1"]}, {"incident": ["1", "2"]},
               {"incident": ["2", "3"]}, {"incident": ["3", "0"]}]})");
  EXPECT_EQ(s.links.size(), 4u);
  EXPECT_EQ(s.drivers, std::vector<std::string>{"1"});
  EXPECT_EQ(grubler_dof(s).dof, 1);
  EXPECT_THROW(io::parse_linkage_text(R"({"links": ["0"], "ground": "9", "joints": []})"), io::ParseError);
  EXPECT_THROW(io::parse_linkage_text(R"({"links": ["0", "1"], "ground": "0",
    "joints": [{"incident": ["0"]}]})"),
               io::ParseError);
}

TEST(Configuration, ById) {
  const PinnedGraph d = graphs::dyad();
  Json doc = Json::object();
  for (Vertex v = 0; v < d.vertex_count(); ++v) doc[d.name(v)] = {static_cast<double>(v), 1.0};
  const auto c = io::parse_configuration(doc, d);
  EXPECT_EQ(c[2].x, 2.0);
  doc.erase(d.name(0));
  EXPECT_THROW(io::parse_configuration(doc, d), io::ParseError);
}

TEST(SchemeFile, RoundTripAndDot) {
  PinnedGraph g;
  const Vertex a = g.add_inner("a"), b = g.add_inner("b");
  const Vertex p1 = g.add_pin("p1"), p2 = g.add_pin("p2"), p3 = g.add_pin("p3");
  g.add_edge(a, p1);
  g.add_edge(a, p2);
  g.add_edge(b, a);
  g.add_edge(b, p3);
  const AssurScheme s = decompose(g);
  const AssurScheme back = io::scheme_from_json(io::scheme_to_json(s));
  EXPECT_EQ(back.covers, s.covers);
  EXPECT_EQ(back.order, s.order);
  EXPECT_EQ(back.ground, s.ground);
  EXPECT_EQ(canonical_code(recompose(back)), canonical_code(g));
  const std::string dot = io::scheme_to_dot(s);
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("c0 -> c1"), std::string::npos);
  EXPECT_EQ(dot.find("c1 -> c0"), std::string::npos);
}

TEST(CertificateFile, UnknownKindRejected) {
  Json doc = {{"base", "K4"}, {"steps", Json::array({{{"kind", "teleport"}, {"vertices", {0}}, {"checkpoint", ""}}})},
              {"result", "00"}};
  EXPECT_ANY_THROW(io::certificate_from_json(doc));
}
