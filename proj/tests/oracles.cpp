#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace oracle {

namespace {

std::size_t induced(const std::vector<rigidity::Edge>& edges, std::uint32_t mask) {
  std::size_t count = 0;
  for (const auto& e : edges)
    if ((mask >> e.u & 1u) && (mask >> e.v & 1u)) ++count;
  return count;
}

bool laman_edges(std::size_t n, const std::vector<rigidity::Edge>& edges) {
  if (n > 20) throw std::length_error("oracle limited to 20 vertices");
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int k = std::popcount(mask);
    if (k < 2) continue;
    if (static_cast<int>(induced(edges, mask)) > 2 * k - 3) return false;
  }
  return true;
}

std::size_t spanned(std::size_t n, const std::vector<rigidity::Edge>& edges) {
  std::vector<bool> seen(n, false);
  for (const auto& e : edges) seen[e.u] = seen[e.v] = true;
  return static_cast<std::size_t>(std::count(seen.begin(), seen.end(), true));
}

template <class G>
bool same_under(const G& a, const G& b, const std::vector<std::size_t>& perm) {
  std::vector<std::pair<std::size_t, std::size_t>> ea, eb;
  for (const auto& e : a.edges()) ea.emplace_back(std::min(perm[e.u], perm[e.v]), std::max(perm[e.u], perm[e.v]));
  for (const auto& e : b.edges()) eb.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  return ea == eb;
}

template <class G>
bool isomorphic_impl(const G& a, const G& b, const std::vector<int>& kind_a, const std::vector<int>& kind_b) {
  const std::size_t n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool kinds_ok = true;
    for (std::size_t v = 0; v < n && kinds_ok; ++v) kinds_ok = kind_a[v] == kind_b[perm[v]];
    if (kinds_ok && same_under(a, b, perm)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

bool laman(const Multigraph& m) { return laman_edges(m.vertex_count(), m.edges()); }

bool circuit(const Multigraph& m) {
  const auto& edges = m.edges();
  if (edges.empty() || edges.size() != 2 * spanned(m.vertex_count(), edges) - 2) return false;
  for (std::size_t skip = 0; skip < edges.size(); ++skip) {
    std::vector<rigidity::Edge> rest;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (i != skip) rest.push_back(edges[i]);
    if (!laman_edges(m.vertex_count(), rest)) return false;
  }
  return true;
}

std::size_t rank(const Multigraph& m) {
  const auto& edges = m.edges();
  if (edges.size() > 16) throw std::length_error("rank oracle limited to 16 edges");
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
    const auto k = static_cast<std::size_t>(std::popcount(mask));
    if (k <= best) continue;
    std::vector<rigidity::Edge> subset;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (mask >> i & 1u) subset.push_back(edges[i]);
    if (laman_edges(m.vertex_count(), subset)) best = k;
  }
  return best;
}

bool pinned_conditions(const PinnedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (g.edge_count() != 2 * g.inner_count()) return false;
  std::uint32_t pin_bits = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (g.is_pin(v)) pin_bits |= 1u << v;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int e = static_cast<int>(induced(g.edges(), mask));
    if (e == 0) continue;
    const int pins = std::popcount(mask & pin_bits);
    const int inner = std::popcount(mask & ~pin_bits);
    const int bound = pins >= 2 ? 2 * inner : pins == 1 ? 2 * inner - 1 : 2 * inner - 3;
    if (e > bound) return false;
  }
  return true;
}

bool minimal(const PinnedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::uint32_t pin_bits = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (g.is_pin(v)) pin_bits |= 1u << v;
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const int e = static_cast<int>(induced(g.edges(), mask));
    if (e == 0) continue;
    if (e > 2 * std::popcount(mask & ~pin_bits) - 1) return false;
  }
  return true;
}

bool isomorphic(const Multigraph& a, const Multigraph& b) {
  return isomorphic_impl(a, b, std::vector<int>(a.vertex_count(), 0), std::vector<int>(b.vertex_count(), 0));
}

bool isomorphic(const PinnedGraph& a, const PinnedGraph& b) {
  std::vector<int> ka, kb;
  for (std::size_t v = 0; v < a.vertex_count(); ++v) ka.push_back(a.is_pin(v));
  for (std::size_t v = 0; v < b.vertex_count(); ++v) kb.push_back(b.is_pin(v));
  return isomorphic_impl(a, b, ka, kb);
}

std::vector<Multigraph> all_simple_graphs(std::size_t n) {
  std::vector<rigidity::Edge> pairs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) pairs.push_back({u, v});
  std::vector<Multigraph> out;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    Multigraph m(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1u) m.add_edge(pairs[i].u, pairs[i].v);
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Multigraph> circuit_sweep(std::size_t n) {
  std::vector<rigidity::Edge> pairs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) pairs.push_back({u, v});
  const std::size_t m = 2 * n - 2;
  std::vector<Multigraph> out;
  if (m > pairs.size()) return out;
  std::vector<bool> pick(pairs.size(), false);
  std::fill(pick.end() - static_cast<std::ptrdiff_t>(m), pick.end(), true);
  do {
    Multigraph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (pick[i]) g.add_edge(pairs[i].u, pairs[i].v);
    if (g.spanned_vertex_count() == n && circuit(g)) out.push_back(std::move(g));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

std::vector<PinnedGraph> pinned_isostatic_sweep(std::size_t total) {
  std::vector<PinnedGraph> out;
  for (std::size_t inner = 1; inner + 2 <= total; ++inner) {
    const std::size_t pins = total - inner;
    std::vector<rigidity::Edge> candidates;
    for (std::size_t u = 0; u < inner; ++u)
      for (std::size_t v = u + 1; v < total; ++v) candidates.push_back({u, v});
    const std::size_t m = 2 * inner;
    if (m > candidates.size()) continue;
    std::vector<bool> pick(candidates.size(), false);
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(m), pick.end(), true);
    do {
      PinnedGraph g;
      for (std::size_t v = 0; v < inner; ++v) g.add_inner();
      for (std::size_t p = 0; p < pins; ++p) g.add_pin();
      for (std::size_t i = 0; i < candidates.size(); ++i)
        if (pick[i]) g.add_edge(candidates[i].u, candidates[i].v);
      if (!g.has_isolated_pin() && pinned_conditions(g)) out.push_back(std::move(g));
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return out;
}

Multigraph random_graph(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  std::vector<rigidity::Edge> pairs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) pairs.push_back({u, v});
  std::shuffle(pairs.begin(), pairs.end(), rng);
  Multigraph g(n);
  for (std::size_t i = 0; i < std::min(m, pairs.size()); ++i) g.add_edge(pairs[i].u, pairs[i].v);
  return g;
}

}  // namespace oracle
