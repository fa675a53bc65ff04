#include "rigidity/generate.hpp"
#include "rigidity/pebble.hpp"

#include <algorithm>
#include <iostream>
#include <set>
#include <stdexcept>

namespace rigidity {

namespace {

void check_vertex(std::size_t n, Vertex v) {
  if (v >= n) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

template <class G>
std::size_t find_edge(const G& g, Vertex u, Vertex w) {
  const Edge key{u, w};
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if (g.edge(i) == key) return i;
  throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(w) + " not present");
}

std::string free_name(const Multigraph& m, const std::string& wanted) {
  return m.find(wanted) ? std::string{} : wanted;
}

void check_split_sides(std::size_t degree, std::span<const SplitSide> sides) {
  if (sides.size() != degree) throw std::invalid_argument("vertex split must place every incident edge");
  const auto shared = std::count(sides.begin(), sides.end(), SplitSide::shared);
  const auto first = std::count(sides.begin(), sides.end(), SplitSide::first);
  const auto second = std::count(sides.begin(), sides.end(), SplitSide::second);
  if (shared != 1) throw std::invalid_argument("vertex split shares exactly one edge");
  if (first < 1 || second < 1) throw std::invalid_argument("vertex split leaves a vertex of degree below 3");
}

}  // namespace

Multigraph vertex_addition(const Multigraph& m, Vertex u, Vertex w) {
  check_vertex(m.vertex_count(), u);
  check_vertex(m.vertex_count(), w);
  if (u == w) throw std::invalid_argument("vertex addition needs two distinct attachments");
  Multigraph out = m;
  const Vertex v = out.add_vertex();
  out.add_edge(v, u);
  out.add_edge(v, w);
  return out;
}

Multigraph edge_split(const Multigraph& m, Vertex u, Vertex w, Vertex x) {
  check_vertex(m.vertex_count(), x);
  const std::size_t split = find_edge(m, u, w);
  if (x == u || x == w) throw std::invalid_argument("edge split third attachment coincides with an endpoint");
  Multigraph out;
  for (const auto& n : m.names()) out.add_vertex(n);
  for (std::size_t i = 0; i < m.edge_count(); ++i)
    if (i != split) out.add_edge(m.edge(i).u, m.edge(i).v);
  const Vertex v = out.add_vertex();
  out.add_edge(v, u);
  out.add_edge(v, w);
  out.add_edge(v, x);
  return out;
}

PinnedGraph edge_split(const PinnedGraph& g, Vertex u, Vertex w, Vertex x) {
  check_vertex(g.vertex_count(), x);
  const std::size_t split = find_edge(g, u, w);
  if (x == u || x == w) throw std::invalid_argument("edge split third attachment coincides with an endpoint");
  if (g.is_pin(x) && (g.is_pin(u) || g.is_pin(w)))
    throw std::invalid_argument("edge split would attach the new vertex to two pins of one contraction edge");
  PinnedGraph out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.add_vertex(g.kind(v), g.name(v));
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if (i != split) out.add_edge(g.edge(i).u, g.edge(i).v);
  const Vertex v = out.add_inner();
  out.add_edge(v, u);
  out.add_edge(v, w);
  out.add_edge(v, x);
  return out;
}

Multigraph two_sum(const Multigraph& c1, const Multigraph& c2, Vertex a1, Vertex b1, Vertex a2, Vertex b2,
                   bool crossed) {
  const std::size_t e1 = find_edge(c1, a1, b1);
  const std::size_t e2 = find_edge(c2, a2, b2);
  if (crossed) std::swap(a2, b2);

  Multigraph out;
  for (const auto& n : c1.names()) out.add_vertex(n);
  std::vector<Vertex> image(c2.vertex_count(), 0);
  image[a2] = a1;
  image[b2] = b1;
  for (Vertex v = 0; v < c2.vertex_count(); ++v)
    if (v != a2 && v != b2) image[v] = out.add_vertex(free_name(out, c2.name(v)));
  for (std::size_t i = 0; i < c1.edge_count(); ++i)
    if (i != e1) out.add_edge(c1.edge(i).u, c1.edge(i).v);
  for (std::size_t i = 0; i < c2.edge_count(); ++i)
    if (i != e2) out.add_edge(image[c2.edge(i).u], image[c2.edge(i).v]);
  return out;
}

CheckedTwoSum two_sum_checked(const Multigraph& c1, const Multigraph& c2, Vertex a1, Vertex b1, Vertex a2,
                              Vertex b2, bool crossed) {
  CheckedTwoSum out{two_sum(c1, c2, a1, b1, a2, b2, crossed), is_circuit(c1) && is_circuit(c2)};
  if (!out.inputs_are_circuits) std::cerr << "warning: two-sum of a non-circuit; result need not be a circuit\n";
  return out;
}

Multigraph vertex_split(const Multigraph& m, Vertex v, std::span<const SplitSide> sides) {
  check_vertex(m.vertex_count(), v);
  const auto incident = m.incident_edges(v);
  check_split_sides(incident.size(), sides);
  Multigraph out;
  for (const auto& n : m.names()) out.add_vertex(n);
  const Vertex twin = out.add_vertex();
  std::vector<Edge> tail;
  for (std::size_t i = 0, k = 0; i < m.edge_count(); ++i) {
    const Edge& e = m.edge(i);
    if (!e.touches(v)) {
      out.add_edge(e.u, e.v);
      continue;
    }
    const Vertex u = e.other(v);
    switch (sides[k++]) {
      case SplitSide::first: out.add_edge(u, v); break;
      case SplitSide::second: out.add_edge(u, twin); break;
      case SplitSide::shared:
        out.add_edge(u, v);
        tail.push_back({u, twin});
        break;
    }
  }
  for (const Edge& e : tail) out.add_edge(e.u, e.v);
  out.add_edge(v, twin);
  return out;
}

PinnedGraph vertex_split(const PinnedGraph& g, Vertex v, std::span<const SplitSide> sides) {
  check_vertex(g.vertex_count(), v);
  if (g.is_pin(v)) throw std::invalid_argument("vertex split applies to inner vertices");
  const auto incident = g.incident_edges(v);
  check_split_sides(incident.size(), sides);
  PinnedGraph out;
  for (Vertex w = 0; w < g.vertex_count(); ++w) out.add_vertex(g.kind(w), g.name(w));
  const Vertex twin = out.add_inner();
  std::vector<Edge> tail;
  for (std::size_t i = 0, k = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (!e.touches(v)) {
      out.add_edge(e.u, e.v);
      continue;
    }
    const Vertex u = e.other(v);
    switch (sides[k++]) {
      case SplitSide::first: out.add_edge(u, v); break;
      case SplitSide::second: out.add_edge(u, twin); break;
      case SplitSide::shared:
        out.add_edge(u, v);
        tail.push_back({u, twin});
        break;
    }
  }
  for (const Edge& e : tail) out.add_edge(e.u, e.v);
  out.add_edge(v, twin);
  return out;
}

std::vector<std::size_t> pin_edges(const PinnedGraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if (g.is_pin(g.edge(i).u) || g.is_pin(g.edge(i).v)) out.push_back(i);
  return out;
}

PinnedGraph pin_rearrangement(const PinnedGraph& g, std::span<const std::size_t> labels) {
  const auto touching = pin_edges(g);
  if (labels.size() != touching.size())
    throw std::invalid_argument("pin rearrangement must label every pin edge");
  const std::set<std::size_t> distinct(labels.begin(), labels.end());
  if (distinct.size() < 2) throw std::invalid_argument("pin rearrangement must keep at least two pins");

  PinnedGraph out;
  std::vector<Vertex> image(g.vertex_count(), 0);
  for (Vertex v : g.inner_vertices()) image[v] = out.add_inner(g.name(v));
  std::map<std::size_t, Vertex> pin_of;
  for (std::size_t label : distinct) {
    std::string name = "P" + std::to_string(label);
    pin_of[label] = out.add_pin(out.find(name) ? std::string{} : name);
  }
  for (std::size_t i = 0, k = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (k < touching.size() && touching[k] == i) {
      const Vertex inner = g.is_pin(e.u) ? e.v : e.u;
      out.add_edge(image[inner], pin_of[labels[k++]]);
    } else {
      out.add_edge(image[e.u], image[e.v]);
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> set_partitions(std::size_t n, std::size_t min_blocks) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> labels(n, 0);
  // Restricted growth strings: labels[i] <= 1 + max(labels[0..i-1]).
  auto recurse = [&](auto&& self, std::size_t i, std::size_t blocks) -> void {
    if (i == n) {
      if (blocks >= min_blocks) out.push_back(labels);
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      labels[i] = b;
      self(self, i + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0) {
    if (min_blocks == 0) out.emplace_back();
    return out;
  }
  labels[0] = 0;
  recurse(recurse, 1, 1);
  return out;
}

std::map<std::size_t, std::vector<Multigraph>> enumerate_circuits(std::size_t n_max) {
  if (n_max < 4 || n_max > 10) throw std::invalid_argument("circuit enumeration supports 4 <= n_max <= 10");
  std::map<std::size_t, std::map<CanonicalCode, Multigraph>> found;
  const Multigraph k4 = graphs::complete(4);
  found[4].emplace(canonical_code(k4, n_max), k4);

  for (std::size_t n = 5; n <= n_max; ++n) {
    auto& level = found[n];
    auto keep = [&](Multigraph g) {
      auto code = canonical_code(g, n_max);
      level.try_emplace(std::move(code), std::move(g));
    };
    for (const auto& [code, c] : found[n - 1])
      for (const Edge& e : c.edges())
        for (Vertex x = 0; x < c.vertex_count(); ++x)
          if (x != e.u && x != e.v) keep(edge_split(c, e.u, e.v, x));
    for (std::size_t n1 = 4; n1 + 2 <= n; ++n1) {
      const std::size_t n2 = n + 2 - n1;
      if (n2 < n1 || n2 < 4) continue;
      for (const auto& [code1, c1] : found[n1])
        for (const auto& [code2, c2] : found[n2])
          for (const Edge& e1 : c1.edges())
            for (const Edge& e2 : c2.edges())
              for (bool crossed : {false, true}) keep(two_sum(c1, c2, e1.u, e1.v, e2.u, e2.v, crossed));
    }
  }

  std::map<std::size_t, std::vector<Multigraph>> out;
  for (auto& [n, level] : found)
    for (auto& [code, g] : level) out[n].push_back(std::move(g));
  return out;
}

std::map<std::size_t, std::vector<PinnedGraph>> enumerate_assur(std::size_t n_max) {
  if (n_max < 3 || n_max > 10) throw std::invalid_argument("Assur enumeration supports 3 <= n_max <= 10");
  std::vector<Multigraph> circuits{graphs::doubled_edge()};
  if (n_max - 1 >= 4)
    for (auto& [n, list] : enumerate_circuits(n_max - 1))
      for (auto& c : list) circuits.push_back(std::move(c));

  std::map<std::size_t, std::map<CanonicalCode, PinnedGraph>> found;
  for (const Multigraph& c : circuits) {
    for (Vertex v = 0; v < c.vertex_count(); ++v) {
      const std::size_t degree = c.degree(v);
      for (const auto& labels : set_partitions(degree, 2)) {
        const std::size_t pins = *std::max_element(labels.begin(), labels.end()) + 1;
        const std::size_t total = c.vertex_count() - 1 + pins;
        if (total > n_max) continue;
        PinnedGraph g;
        try {
          g = split_contracted_vertex(c, v, labels);
        } catch (const std::invalid_argument&) {
          continue;  // two parallel edges sent to one pin
        }
        auto code = canonical_code(g, n_max);
        found[total].try_emplace(std::move(code), std::move(g));
      }
    }
  }

  std::map<std::size_t, std::vector<PinnedGraph>> out;
  for (std::size_t n = 3; n <= n_max; ++n) out[n];
  for (auto& [n, level] : found)
    for (auto& [code, g] : level) out[n].push_back(std::move(g));
  return out;
}

}  // namespace rigidity
