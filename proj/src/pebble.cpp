#include "rigidity/pebble.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rigidity {

PebbleGame::PebbleGame(std::size_t vertex_count) : pebbles_(vertex_count, 2), out_(vertex_count) {}

std::size_t PebbleGame::free_pebbles() const {
  return static_cast<std::size_t>(std::accumulate(pebbles_.begin(), pebbles_.end(), 0));
}

// Depth-first search along out-edges from `to` for a pebble, never taking it from
// `keep`. On success the path is reversed and one pebble moves onto `to`.
bool PebbleGame::pull_pebble(Vertex to, Vertex keep) {
  const std::size_t n = pebbles_.size();
  std::vector<Vertex> parent(n, n);
  std::vector<bool> seen(n, false);
  seen[to] = true;
  seen[keep] = true;
  std::vector<Vertex> stack{to};
  Vertex found = n;
  while (!stack.empty() && found == n) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : out_[x]) {
      if (seen[y]) continue;
      seen[y] = true;
      parent[y] = x;
      if (pebbles_[y] > 0) {
        found = y;
        break;
      }
      stack.push_back(y);
    }
  }
  if (found == n) return false;
  for (Vertex y = found; y != to; y = parent[y]) {
    const Vertex x = parent[y];
    auto it = std::find(out_[x].begin(), out_[x].end(), y);
    out_[x].erase(it);
    out_[y].push_back(x);
  }
  --pebbles_[found];
  ++pebbles_[to];
  return true;
}

std::vector<Vertex> PebbleGame::reach(Vertex a, Vertex b) const {
  std::vector<bool> seen(pebbles_.size(), false);
  std::vector<Vertex> stack{a, b};
  seen[a] = seen[b] = true;
  std::vector<Vertex> out;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (Vertex y : out_[x])
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool PebbleGame::try_insert(Vertex u, Vertex v) {
  if (u >= pebbles_.size() || v >= pebbles_.size()) throw std::out_of_range("pebble game vertex");
  if (u == v) throw std::invalid_argument("pebble game rejects loops");
  while (pebbles_[u] < 2 && pull_pebble(u, v)) {
  }
  while (pebbles_[v] < 2 && pull_pebble(v, u)) {
  }
  if (pebbles_[u] + pebbles_[v] < 4) {
    closure_ = reach(u, v);
    return false;
  }
  out_[u].push_back(v);
  --pebbles_[u];
  ++accepted_;
  return true;
}

namespace {

std::vector<std::size_t> order_or_identity(std::size_t m, std::span<const std::size_t> order) {
  if (order.empty()) {
    std::vector<std::size_t> out(m);
    std::iota(out.begin(), out.end(), std::size_t{0});
    return out;
  }
  if (order.size() != m) throw std::invalid_argument("edge order has wrong length");
  std::vector<bool> seen(m, false);
  for (std::size_t i : order) {
    if (i >= m || seen[i]) throw std::invalid_argument("edge order is not a permutation");
    seen[i] = true;
  }
  return {order.begin(), order.end()};
}

}  // namespace

RankReport pebble_rank(const Multigraph& m, std::span<const std::size_t> edge_order) {
  RankReport report;
  PebbleGame game(m.vertex_count());
  for (std::size_t i : order_or_identity(m.edge_count(), edge_order)) {
    const Edge& e = m.edge(i);
    if (game.try_insert(e.u, e.v))
      report.independent_edges.push_back(i);
    else
      report.rejected_edges.push_back(i);
  }
  report.rank = report.independent_edges.size();
  return report;
}

bool is_independent(const Multigraph& m) {
  PebbleGame game(m.vertex_count());
  for (const Edge& e : m.edges())
    if (!game.try_insert(e.u, e.v)) return false;
  return true;
}

bool is_independent(const Multigraph& m, std::span<const std::size_t> edge_subset) {
  PebbleGame game(m.vertex_count());
  for (std::size_t i : edge_subset)
    if (!game.try_insert(m.edge(i).u, m.edge(i).v)) return false;
  return true;
}

std::vector<std::size_t> fundamental_circuit(const Multigraph& m, const RankReport& report,
                                             std::size_t rejected_edge) {
  if (std::find(report.rejected_edges.begin(), report.rejected_edges.end(), rejected_edge) ==
      report.rejected_edges.end())
    throw std::invalid_argument("edge was not rejected by the pebble game");

  // Restrict candidates to the rigid closure the failed insertion could not escape.
  PebbleGame game(m.vertex_count());
  for (std::size_t i : report.independent_edges) game.try_insert(m.edge(i).u, m.edge(i).v);
  const Edge& e = m.edge(rejected_edge);
  if (game.try_insert(e.u, e.v)) throw std::logic_error("rank report does not match graph");
  std::vector<bool> in_closure(m.vertex_count(), false);
  for (Vertex v : game.last_closure()) in_closure[v] = true;

  std::vector<std::size_t> candidates;
  for (std::size_t i : report.independent_edges)
    if (in_closure[m.edge(i).u] && in_closure[m.edge(i).v]) candidates.push_back(i);

  // f lies on the circuit iff swapping f for e keeps the candidate set independent.
  std::vector<std::size_t> circuit;
  std::vector<std::size_t> trial;
  for (std::size_t f : candidates) {
    trial.clear();
    for (std::size_t g : candidates)
      if (g != f) trial.push_back(g);
    trial.push_back(rejected_edge);
    if (is_independent(m, trial)) circuit.push_back(f);
  }
  circuit.push_back(rejected_edge);
  std::sort(circuit.begin(), circuit.end());
  return circuit;
}

bool is_circuit(const Multigraph& m) {
  if (m.edge_count() == 0 || m.edge_count() != 2 * m.spanned_vertex_count() - 2) return false;
  std::vector<std::size_t> rest;
  for (std::size_t skip = 0; skip < m.edge_count(); ++skip) {
    rest.clear();
    for (std::size_t i = 0; i < m.edge_count(); ++i)
      if (i != skip) rest.push_back(i);
    if (!is_independent(m, rest)) return false;
  }
  return true;
}

bool is_isostatic(const Multigraph& m) {
  const std::size_t n = m.vertex_count();
  if (n < 2) return n == 1 && m.edge_count() == 0;
  if (m.edge_count() != 2 * n - 3) return false;
  return is_independent(m);
}

int generic_dof(const Multigraph& m) {
  const auto n = static_cast<int>(m.vertex_count());
  if (n <= 1) return 0;
  return 2 * n - 3 - static_cast<int>(pebble_rank(m).rank);
}

Multigraph pin_scaffold(const PinnedGraph& g) {
  Multigraph m;
  for (const auto& name : g.names()) m.add_vertex(name);
  std::string apex = "p0";
  while (m.find(apex)) apex += "'";
  const Vertex a = m.add_vertex(apex);
  const auto pins = g.pins();
  for (std::size_t k = 0; k + 1 < pins.size(); ++k) m.add_edge(pins[k], pins[k + 1]);
  for (Vertex p : pins) m.add_edge(a, p);
  for (const Edge& e : g.edges()) m.add_edge(e.u, e.v);
  return m;
}

namespace {

// Number of g's edges that stay independent on top of the scaffold.
std::size_t braced_rank(const PinnedGraph& g) {
  const Multigraph tilde = pin_scaffold(g);
  const std::size_t scaffold_edges = tilde.edge_count() - g.edge_count();
  return pebble_rank(tilde).rank - scaffold_edges;
}

}  // namespace

bool pinned_isostatic(const PinnedGraph& g) {
  if (g.pin_count() < 2) throw std::invalid_argument("pinned isostatic test needs at least two pins");
  if (g.edge_count() != 2 * g.inner_count()) return false;
  return braced_rank(g) == g.edge_count();
}

int pinned_dof(const PinnedGraph& g) {
  if (g.pin_count() == 0) return 2 * static_cast<int>(g.inner_count()) -
                                 static_cast<int>(pebble_rank(g.underlying()).rank);
  return 2 * static_cast<int>(g.inner_count()) - static_cast<int>(braced_rank(g));
}

std::vector<std::size_t> pinned_overbraced_witness(const PinnedGraph& g) {
  const Multigraph tilde = pin_scaffold(g);
  const std::size_t offset = tilde.edge_count() - g.edge_count();
  const RankReport report = pebble_rank(tilde);
  if (report.rejected_edges.empty()) return {};
  std::vector<std::size_t> out;
  for (std::size_t i : fundamental_circuit(tilde, report, report.rejected_edges.front()))
    if (i >= offset) out.push_back(i - offset);
  return out;
}

}  // namespace rigidity
