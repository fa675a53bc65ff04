#include "rigidity/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rigidity {

namespace {

std::string unique_name(const std::unordered_map<std::string, Vertex>& index, std::string base) {
  if (!index.contains(base)) return base;
  for (std::size_t k = 1;; ++k) {
    std::string candidate = base + "'" + std::to_string(k);
    if (!index.contains(candidate)) return candidate;
  }
}

void check_vertex(std::size_t n, Vertex v) {
  if (v >= n) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

// ---------------------------------------------------------------- Multigraph

Multigraph::Multigraph(std::size_t vertex_count) {
  for (std::size_t i = 0; i < vertex_count; ++i) add_vertex();
}

Multigraph::Multigraph(std::size_t vertex_count, std::span<const Edge> edges)
    : Multigraph(vertex_count) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

Vertex Multigraph::add_vertex(std::string name) {
  const Vertex v = names_.size();
  if (name.empty()) name = unique_name(index_, "v" + std::to_string(v));
  if (index_.contains(name)) throw std::invalid_argument("duplicate vertex name '" + name + "'");
  index_.emplace(name, v);
  names_.push_back(std::move(name));
  return v;
}

std::size_t Multigraph::add_edge(Vertex u, Vertex v) {
  check_vertex(vertex_count(), u);
  check_vertex(vertex_count(), v);
  if (u == v) throw std::invalid_argument("loop at vertex " + names_[u]);
  edges_.push_back({u, v});
  return edges_.size() - 1;
}

std::optional<Vertex> Multigraph::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Multigraph::degree(Vertex v) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.touches(v); }));
}

std::vector<std::size_t> Multigraph::degrees() const {
  std::vector<std::size_t> d(vertex_count(), 0);
  for (const Edge& e : edges_) {
    ++d[e.u];
    ++d[e.v];
  }
  return d;
}

std::vector<std::size_t> Multigraph::incident_edges(Vertex v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].touches(v)) out.push_back(i);
  return out;
}

std::size_t Multigraph::multiplicity(Vertex u, Vertex v) const {
  const Edge key{u, v};
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [&](const Edge& e) { return e == key; }));
}

std::size_t Multigraph::spanned_vertex_count() const {
  const auto d = degrees();
  return static_cast<std::size_t>(std::count_if(d.begin(), d.end(), [](auto x) { return x > 0; }));
}

// ---------------------------------------------------------------- PinnedGraph

Vertex PinnedGraph::add_vertex(VertexKind kind, std::string name) {
  const Vertex v = kinds_.size();
  if (name.empty()) name = unique_name(index_, (kind == VertexKind::inner ? "i" : "p") + std::to_string(v));
  if (index_.contains(name)) throw std::invalid_argument("duplicate vertex name '" + name + "'");
  index_.emplace(name, v);
  names_.push_back(std::move(name));
  kinds_.push_back(kind);
  return v;
}

Vertex PinnedGraph::add_inner(std::string name) { return add_vertex(VertexKind::inner, std::move(name)); }
Vertex PinnedGraph::add_pin(std::string name) { return add_vertex(VertexKind::pinned, std::move(name)); }

std::size_t PinnedGraph::add_edge(Vertex u, Vertex v) {
  check_vertex(vertex_count(), u);
  check_vertex(vertex_count(), v);
  if (u == v) throw std::invalid_argument("loop at vertex " + names_[u]);
  if (is_pin(u) && is_pin(v))
    throw std::invalid_argument("edge between pins " + names_[u] + " and " + names_[v]);
  if (has_edge(u, v))
    throw std::invalid_argument("parallel edge " + names_[u] + "-" + names_[v]);
  edges_.push_back({u, v});
  return edges_.size() - 1;
}

std::size_t PinnedGraph::inner_count() const {
  return static_cast<std::size_t>(std::count(kinds_.begin(), kinds_.end(), VertexKind::inner));
}

std::size_t PinnedGraph::pin_count() const { return kinds_.size() - inner_count(); }

std::vector<Vertex> PinnedGraph::inner_vertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < kinds_.size(); ++v)
    if (!is_pin(v)) out.push_back(v);
  return out;
}

std::vector<Vertex> PinnedGraph::pins() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < kinds_.size(); ++v)
    if (is_pin(v)) out.push_back(v);
  return out;
}

bool PinnedGraph::has_edge(Vertex u, Vertex v) const {
  const Edge key{u, v};
  return std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return e == key; });
}

std::optional<Vertex> PinnedGraph::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t PinnedGraph::degree(Vertex v) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.touches(v); }));
}

std::vector<std::size_t> PinnedGraph::incident_edges(Vertex v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].touches(v)) out.push_back(i);
  return out;
}

bool PinnedGraph::has_isolated_pin() const {
  for (Vertex p : pins())
    if (degree(p) == 0) return true;
  return false;
}

Multigraph PinnedGraph::underlying() const {
  Multigraph m;
  for (const auto& n : names_) m.add_vertex(n);
  for (const Edge& e : edges_) m.add_edge(e.u, e.v);
  return m;
}

// ---------------------------------------------------------------- operations

Contraction contract(const PinnedGraph& g) {
  Contraction c;
  c.vertex_map.assign(g.vertex_count(), 0);
  for (Vertex v : g.inner_vertices()) c.vertex_map[v] = c.graph.add_vertex(g.name(v));
  std::string hub_name = "p*";
  while (c.graph.find(hub_name)) hub_name += "*";
  c.hub = c.graph.add_vertex(hub_name);
  for (Vertex p : g.pins()) c.vertex_map[p] = c.hub;
  for (const Edge& e : g.edges()) c.graph.add_edge(c.vertex_map[e.u], c.vertex_map[e.v]);
  return c;
}

Multigraph contract_pins(const PinnedGraph& g) { return contract(g).graph; }

PinnedGraph split_contracted_vertex(const Multigraph& m, Vertex v,
                                    std::span<const std::size_t> labels) {
  if (v >= m.vertex_count()) throw std::out_of_range("split vertex not in graph");
  const auto incident = m.incident_edges(v);
  if (labels.size() != incident.size())
    throw std::invalid_argument("pin assignment must label every incident edge");
  const std::set<std::size_t> distinct(labels.begin(), labels.end());
  if (distinct.size() < 2) throw std::invalid_argument("pin split needs at least two pins");

  PinnedGraph g;
  std::vector<Vertex> image(m.vertex_count(), 0);
  for (Vertex u = 0; u < m.vertex_count(); ++u)
    if (u != v) image[u] = g.add_inner(m.name(u));
  std::map<std::size_t, Vertex> pin_of;
  for (std::size_t label : distinct) {
    std::unordered_map<std::string, Vertex> taken;
    for (Vertex u = 0; u < g.vertex_count(); ++u) taken.emplace(g.name(u), u);
    pin_of[label] = g.add_pin(unique_name(taken, "P" + std::to_string(label)));
  }
  std::map<std::size_t, std::size_t> label_of_edge;
  for (std::size_t k = 0; k < incident.size(); ++k) label_of_edge[incident[k]] = labels[k];

  for (std::size_t i = 0; i < m.edge_count(); ++i) {
    const Edge& e = m.edge(i);
    if (e.touches(v)) {
      const Vertex inner = image[e.other(v)];
      const Vertex pin = pin_of[label_of_edge[i]];
      if (g.has_edge(inner, pin))
        throw std::invalid_argument("pin assignment sends parallel edges to one pin");
      g.add_edge(inner, pin);
    } else {
      g.add_edge(image[e.u], image[e.v]);
    }
  }
  return g;
}

PinnedGraph compose(const PinnedGraph& h, const PinnedGraph& g, const CompositionMap& map) {
  std::set<Vertex> targets;
  for (Vertex q : h.pins()) {
    auto it = map.pin_targets.find(q);
    if (it == map.pin_targets.end())
      throw std::invalid_argument("composition leaves pin " + h.name(q) + " unmapped");
    if (it->second >= g.vertex_count())
      throw std::out_of_range("composition target outside host graph");
    if (!targets.insert(it->second).second)
      throw std::invalid_argument("composition map is not injective");
  }
  for (const auto& [src, dst] : map.pin_targets)
    if (src >= h.vertex_count() || !h.is_pin(src))
      throw std::invalid_argument("composition map source is not a pin of H");

  PinnedGraph out = g;
  std::vector<Vertex> image(h.vertex_count(), 0);
  for (Vertex q : h.pins()) image[q] = map.pin_targets.at(q);

  std::unordered_map<std::string, Vertex> taken;
  for (Vertex u = 0; u < out.vertex_count(); ++u) taken.emplace(out.name(u), u);
  bool collision = false;
  for (Vertex w : h.inner_vertices()) collision |= taken.contains(h.name(w));
  std::string prefix;
  if (collision) {
    for (std::size_t k = 0;; ++k) {
      prefix = "h" + std::to_string(k) + ".";
      bool clash = false;
      for (Vertex w : h.inner_vertices()) clash |= taken.contains(prefix + h.name(w));
      if (!clash) break;
    }
  }
  for (Vertex w : h.inner_vertices()) image[w] = out.add_inner(prefix + h.name(w));
  for (const Edge& e : h.edges()) out.add_edge(image[e.u], image[e.v]);
  return out;
}

PinnedGraph delete_vertex(const PinnedGraph& g, Vertex v) {
  check_vertex(g.vertex_count(), v);
  PinnedGraph out;
  std::vector<Vertex> image(g.vertex_count(), 0);
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    if (u != v) image[u] = out.add_vertex(g.kind(u), g.name(u));
  for (const Edge& e : g.edges())
    if (!e.touches(v)) out.add_edge(image[e.u], image[e.v]);
  return out;
}

PinnedGraph delete_edge(const PinnedGraph& g, std::size_t edge_index) {
  if (edge_index >= g.edge_count()) throw std::out_of_range("edge index out of range");
  PinnedGraph out;
  for (Vertex u = 0; u < g.vertex_count(); ++u) out.add_vertex(g.kind(u), g.name(u));
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if (i != edge_index) out.add_edge(g.edge(i).u, g.edge(i).v);
  return out;
}

Multigraph delete_edge(const Multigraph& m, std::size_t edge_index) {
  if (edge_index >= m.edge_count()) throw std::out_of_range("edge index out of range");
  Multigraph out;
  for (const auto& n : m.names()) out.add_vertex(n);
  for (std::size_t i = 0; i < m.edge_count(); ++i)
    if (i != edge_index) out.add_edge(m.edge(i).u, m.edge(i).v);
  return out;
}

namespace {

std::vector<Vertex> inverse_permutation(std::span<const Vertex> perm) {
  std::vector<Vertex> inv(perm.size(), perm.size());
  for (Vertex v = 0; v < perm.size(); ++v) {
    if (perm[v] >= perm.size() || inv[perm[v]] != perm.size())
      throw std::invalid_argument("not a permutation");
    inv[perm[v]] = v;
  }
  return inv;
}

std::vector<std::size_t> resolve_edge_order(std::size_t m, std::span<const std::size_t> order) {
  std::vector<std::size_t> out(m);
  if (order.empty()) {
    for (std::size_t i = 0; i < m; ++i) out[i] = i;
    return out;
  }
  if (order.size() != m) throw std::invalid_argument("edge order has wrong length");
  std::vector<bool> seen(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    if (order[i] >= m || seen[order[i]]) throw std::invalid_argument("edge order is not a permutation");
    seen[order[i]] = true;
    out[i] = order[i];
  }
  return out;
}

}  // namespace

PinnedGraph permute(const PinnedGraph& g, std::span<const Vertex> perm,
                    std::span<const std::size_t> edge_order) {
  if (perm.size() != g.vertex_count()) throw std::invalid_argument("permutation has wrong length");
  const auto inv = inverse_permutation(perm);
  PinnedGraph out;
  for (Vertex slot = 0; slot < inv.size(); ++slot) out.add_vertex(g.kind(inv[slot]), g.name(inv[slot]));
  for (std::size_t i : resolve_edge_order(g.edge_count(), edge_order))
    out.add_edge(perm[g.edge(i).u], perm[g.edge(i).v]);
  return out;
}

Multigraph permute(const Multigraph& m, std::span<const Vertex> perm,
                   std::span<const std::size_t> edge_order) {
  if (perm.size() != m.vertex_count()) throw std::invalid_argument("permutation has wrong length");
  const auto inv = inverse_permutation(perm);
  Multigraph out;
  for (Vertex slot = 0; slot < inv.size(); ++slot) out.add_vertex(m.name(inv[slot]));
  for (std::size_t i : resolve_edge_order(m.edge_count(), edge_order))
    out.add_edge(perm[m.edge(i).u], perm[m.edge(i).v]);
  return out;
}

namespace graphs {

Multigraph complete(std::size_t n) {
  Multigraph m(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) m.add_edge(i, j);
  return m;
}

Multigraph cycle(std::size_t n) {
  Multigraph m(n);
  for (Vertex i = 0; i < n; ++i) m.add_edge(i, (i + 1) % n);
  return m;
}

Multigraph doubled_edge() {
  Multigraph m(2);
  m.add_edge(0, 1);
  m.add_edge(0, 1);
  return m;
}

PinnedGraph dyad() {
  PinnedGraph g;
  const Vertex v = g.add_inner("v");
  const Vertex p1 = g.add_pin("p1");
  const Vertex p2 = g.add_pin("p2");
  g.add_edge(v, p1);
  g.add_edge(v, p2);
  return g;
}

PinnedGraph triad() {
  PinnedGraph g;
  const Vertex a = g.add_inner("a");
  const Vertex b = g.add_inner("b");
  const Vertex c = g.add_inner("c");
  const Vertex p1 = g.add_pin("p1");
  const Vertex p2 = g.add_pin("p2");
  const Vertex p3 = g.add_pin("p3");
  g.add_edge(a, b);
  g.add_edge(b, c);
  g.add_edge(a, c);
  g.add_edge(a, p1);
  g.add_edge(b, p2);
  g.add_edge(c, p3);
  return g;
}

}  // namespace graphs

}  // namespace rigidity
