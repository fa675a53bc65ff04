#include "rigidity/assur.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

#include "rigidity/canonical.hpp"
#include "rigidity/counting.hpp"
#include "rigidity/pebble.hpp"

namespace rigidity {

namespace {

void require_pinned_isostatic(const PinnedGraph& g) {
  if (g.pin_count() < 2 || !pinned_isostatic(g))
    throw std::invalid_argument("Assur checks need a pinned isostatic graph");
}

bool is_dyad_shape(const PinnedGraph& g) {
  const auto inner = g.inner_vertices();
  return inner.size() == 1 && g.degree(inner.front()) == 2;
}

}  // namespace

bool check_minimality(const PinnedGraph& g) {
  require_pinned_isostatic(g);
  if (g.has_isolated_pin()) return false;
  const std::size_t n = g.vertex_count();
  if (n > kOracleBound) return check_circuit_condition(g);

  std::uint32_t pin_mask = 0;
  for (Vertex p : g.pins()) pin_mask |= 1u << p;
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    std::size_t edges = 0;
    for (const Edge& e : g.edges())
      if ((mask >> e.u & 1u) && (mask >> e.v & 1u)) ++edges;
    if (edges == 0) continue;
    const int inner = std::popcount(mask & ~pin_mask);
    if (static_cast<int>(edges) > 2 * inner - 1) return false;
  }
  return true;
}

bool check_circuit_condition(const PinnedGraph& g) {
  require_pinned_isostatic(g);
  if (g.has_isolated_pin()) return false;
  const Multigraph star = contract_pins(g);
  return star.vertex_count() <= kOracleBound ? circuit_oracle(star) : is_circuit(star);
}

bool check_vertex_deletion(const PinnedGraph& g, const DeletionOptions& options) {
  require_pinned_isostatic(g);
  if (g.has_isolated_pin()) return false;
  if (is_dyad_shape(g)) return true;
  MotionOptions motion = options.motion;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.is_pin(v) && !options.delete_pins) continue;
    const PinnedGraph rest = delete_vertex(g, v);
    motion.seed = options.motion.seed + 7919 * (v + 1);
    if (!all_inner_move(rest, motion)) return false;
  }
  return true;
}

bool check_edge_deletion(const PinnedGraph& g, const MotionOptions& options) {
  require_pinned_isostatic(g);
  if (g.has_isolated_pin()) return false;
  MotionOptions motion = options;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    motion.seed = options.seed + 104729 * (i + 1);
    if (!all_inner_move(delete_edge(g, i), motion)) return false;
  }
  return true;
}

AssurVerdict is_assur(const PinnedGraph& g, const AssurMethods& methods, const DeletionOptions& options) {
  AssurVerdict v;
  if (g.pin_count() < 2) {
    v.reason = "fewer than two pins";
    return v;
  }
  if (!pinned_isostatic(g)) {
    v.reason = "not pinned isostatic (pinned DOF " + std::to_string(pinned_dof(g)) + ")";
    return v;
  }
  if (methods.minimality) v.minimality = check_minimality(g);
  v.circuit = check_circuit_condition(g);
  if (methods.vertex_deletion) v.vertex_deletion = check_vertex_deletion(g, options);
  if (methods.edge_deletion) v.edge_deletion = check_edge_deletion(g, options.motion);
  v.overall = *v.circuit;
  for (const auto& check : {v.minimality, v.vertex_deletion, v.edge_deletion})
    if (check && *check != v.overall) v.disagreement = true;
  if (!methods.circuit) v.circuit.reset();
  if (g.has_isolated_pin())
    v.reason = "isolated pin";
  else if (!v.overall)
    v.reason = "pin contraction is not a rigidity circuit";
  return v;
}

bool AssurScheme::precedes(std::size_t a, std::size_t b) const {
  return std::find(order.begin(), order.end(), std::pair{a, b}) != order.end();
}

void rebuild_order(AssurScheme& scheme) {
  std::map<std::string, std::size_t> owner;
  for (std::size_t k = 0; k < scheme.components.size(); ++k) {
    const auto& c = scheme.components[k].graph;
    for (Vertex v : c.inner_vertices()) owner[c.name(v)] = k;
  }
  std::set<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t b = 0; b < scheme.components.size(); ++b)
    for (const auto& [pin, target] : scheme.components[b].pin_targets)
      if (auto it = owner.find(target); it != owner.end()) covers.insert({it->second, b});

  const std::size_t n = scheme.components.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (const auto& [a, b] : covers) reach[a][b] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  scheme.covers.assign(covers.begin(), covers.end());
  scheme.order.clear();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (reach[i][j]) scheme.order.emplace_back(i, j);
}

AssurScheme decompose(const PinnedGraph& g, std::span<const std::size_t> edge_order) {
  if (g.pin_count() < 2 || !pinned_isostatic(g))
    throw std::invalid_argument("decomposition needs a pinned isostatic graph");

  std::vector<std::size_t> order(g.edge_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (!edge_order.empty()) {
    if (edge_order.size() != order.size()) throw std::invalid_argument("edge order has wrong length");
    order.assign(edge_order.begin(), edge_order.end());
  }

  AssurScheme scheme;
  for (Vertex p : g.pins()) scheme.ground.push_back(g.name(p));

  std::vector<bool> grounded(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) grounded[v] = g.is_pin(v);
  std::vector<bool> consumed(g.edge_count(), false);

  for (int level = 1; std::find(grounded.begin(), grounded.end(), false) != grounded.end(); ++level) {
    // Contract everything grounded so far into a single hub.
    Multigraph star;
    std::vector<Vertex> local(g.vertex_count(), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (!grounded[v]) local[v] = star.add_vertex(g.name(v));
    std::string hub_name = "p*";
    while (star.find(hub_name)) hub_name += "*";
    const Vertex hub = star.add_vertex(hub_name);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (grounded[v]) local[v] = hub;
    std::vector<std::size_t> source;
    for (std::size_t i : order) {
      if (consumed[i]) continue;
      star.add_edge(local[g.edge(i).u], local[g.edge(i).v]);
      source.push_back(i);
    }

    const RankReport report = pebble_rank(star);
    if (report.rejected_edges.empty())
      throw std::logic_error("no circuit left in contraction; input was not pinned isostatic");

    std::vector<AssurComponent> found;
    std::vector<bool> claimed(star.edge_count(), false);
    for (std::size_t r : report.rejected_edges) {
      std::vector<std::size_t> host_edges;
      for (std::size_t i : fundamental_circuit(star, report, r)) {
        if (claimed[i]) throw std::logic_error("circuits of a pin contraction overlap");
        claimed[i] = true;
        host_edges.push_back(source[i]);
      }
      std::sort(host_edges.begin(), host_edges.end());
      std::set<Vertex> inner, pins;
      for (std::size_t i : host_edges)
        for (Vertex w : {g.edge(i).u, g.edge(i).v}) (grounded[w] ? pins : inner).insert(w);

      AssurComponent c;
      c.level = level;
      std::map<Vertex, Vertex> image;
      for (Vertex w : inner) image[w] = c.graph.add_inner(g.name(w));
      for (Vertex w : pins) {
        image[w] = c.graph.add_pin(g.name(w));
        c.pin_targets[image[w]] = g.name(w);
      }
      for (std::size_t i : host_edges) c.graph.add_edge(image[g.edge(i).u], image[g.edge(i).v]);
      found.push_back(std::move(c));
    }

    auto key = [](const AssurComponent& c) {
      std::vector<std::string> names;
      for (Vertex v : c.graph.inner_vertices()) names.push_back(c.graph.name(v));
      std::sort(names.begin(), names.end());
      return names;
    };
    std::sort(found.begin(), found.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });

    for (auto& c : found) {
      for (Vertex v : c.graph.inner_vertices()) grounded[*g.find(c.graph.name(v))] = true;
      scheme.components.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < g.edge_count(); ++i)
      if (grounded[g.edge(i).u] && grounded[g.edge(i).v]) consumed[i] = true;
  }

  rebuild_order(scheme);
  return scheme;
}

PinnedGraph recompose(const AssurScheme& scheme) {
  PinnedGraph host;
  for (const auto& name : scheme.ground) host.add_pin(name);

  std::vector<std::size_t> by_level(scheme.components.size());
  std::iota(by_level.begin(), by_level.end(), std::size_t{0});
  std::stable_sort(by_level.begin(), by_level.end(), [&](std::size_t a, std::size_t b) {
    return scheme.components[a].level < scheme.components[b].level;
  });

  for (std::size_t k : by_level) {
    const auto& c = scheme.components[k];
    CompositionMap map;
    for (Vertex p : c.graph.pins()) {
      auto it = c.pin_targets.find(p);
      if (it == c.pin_targets.end())
        throw std::invalid_argument("component pin " + c.graph.name(p) + " has no identification");
      auto target = host.find(it->second);
      if (!target) throw std::invalid_argument("dangling pin identification '" + it->second + "'");
      map.pin_targets[p] = *target;
    }
    host = compose(c.graph, host, map);
  }
  return host;
}

}  // namespace rigidity
