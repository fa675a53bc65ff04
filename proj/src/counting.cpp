#include "rigidity/counting.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

#include "rigidity/canonical.hpp"

namespace rigidity {

void LinkageSchema::validate() const {
  std::set<std::string> known;
  for (const auto& l : links)
    if (!known.insert(l).second) throw std::invalid_argument("duplicate link '" + l + "'");
  if (!known.contains(ground)) throw std::invalid_argument("ground link '" + ground + "' not among links");
  for (const auto& j : joints) {
    if (j.links.size() < 2) throw std::invalid_argument("joint '" + j.id + "' pins fewer than two links");
    std::set<std::string> seen;
    for (const auto& l : j.links) {
      if (!known.contains(l)) throw std::invalid_argument("joint '" + j.id + "' references unknown link '" + l + "'");
      if (!seen.insert(l).second) throw std::invalid_argument("joint '" + j.id + "' lists link '" + l + "' twice");
    }
  }
  for (const auto& d : drivers) {
    if (!known.contains(d)) throw std::invalid_argument("driver '" + d + "' is not a link");
    if (d == ground) throw std::invalid_argument("the ground link cannot be a driver");
  }
}

DofReport grubler_dof(const LinkageSchema& schema) {
  schema.validate();
  DofReport r;
  r.link_count = static_cast<int>(schema.links.size());
  for (const auto& j : schema.joints) r.joint_constraints += static_cast<int>(j.links.size()) - 1;
  r.dof = 3 * (r.link_count - 1) - 2 * r.joint_constraints;

  const std::size_t n = schema.links.size();
  if (n > kLinkageOracleBound) return r;
  r.overbrace_checked = true;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[schema.links[i]] = i;
  std::vector<std::uint32_t> joint_masks;
  for (const auto& j : schema.joints) {
    std::uint32_t mask = 0;
    for (const auto& l : j.links) mask |= 1u << index[l];
    joint_masks.push_back(mask);
  }
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    const int size = std::popcount(s);
    if (size < 2) continue;
    int constraints = 0;
    for (std::uint32_t jm : joint_masks) constraints += std::max(0, std::popcount(jm & s) - 1);
    if (3 * (size - 1) - 2 * constraints < 0) {
      r.overbraced = true;
      for (std::size_t i = 0; i < n; ++i)
        if (s >> i & 1u) r.overbraced_links.push_back(schema.links[i]);
      break;
    }
  }
  return r;
}

LinkageSchema remove_drivers(const LinkageSchema& schema) {
  schema.validate();
  LinkageSchema out = schema;
  for (const auto& driver : schema.drivers) {
    std::vector<std::size_t> ends;
    for (std::size_t k = 0; k < out.joints.size(); ++k)
      if (std::find(out.joints[k].links.begin(), out.joints[k].links.end(), driver) != out.joints[k].links.end())
        ends.push_back(k);
    if (ends.size() > 2)
      throw std::invalid_argument("driver '" + driver + "' is incident to more than two joints");

    std::vector<Joint> kept;
    Joint merged;
    for (std::size_t k = 0; k < out.joints.size(); ++k) {
      const bool is_end = std::find(ends.begin(), ends.end(), k) != ends.end();
      if (!is_end) {
        kept.push_back(out.joints[k]);
        continue;
      }
      merged.id += (merged.id.empty() ? "" : "+") + out.joints[k].id;
      for (const auto& l : out.joints[k].links)
        if (l != driver && std::find(merged.links.begin(), merged.links.end(), l) == merged.links.end())
          merged.links.push_back(l);
    }
    if (merged.links.size() >= 2) kept.push_back(std::move(merged));
    out.joints = std::move(kept);
    std::erase(out.links, driver);
  }
  out.drivers.clear();
  return out;
}

int bar_joint_dof(const Multigraph& m) {
  return 2 * static_cast<int>(m.vertex_count()) - 3 - static_cast<int>(m.edge_count());
}

LinkageSchema bar_linkage(const Multigraph& m) {
  if (m.edge_count() == 0) throw std::invalid_argument("bar linkage needs at least one edge");
  LinkageSchema s;
  for (std::size_t i = 0; i < m.edge_count(); ++i) s.links.push_back("e" + std::to_string(i));
  s.ground = s.links.front();
  for (Vertex v = 0; v < m.vertex_count(); ++v) {
    Joint j{m.name(v), {}};
    for (std::size_t i : m.incident_edges(v)) j.links.push_back(s.links[i]);
    if (j.links.size() >= 2) s.joints.push_back(std::move(j));
  }
  return s;
}

namespace {

void check_oracle_bound(std::size_t n) {
  if (n > kOracleBound)
    throw SizeBoundError("exhaustive oracle limited to " + std::to_string(kOracleBound) + " vertices, got " +
                         std::to_string(n));
}

std::uint32_t edge_mask(const Edge& e) { return (1u << e.u) | (1u << e.v); }

std::size_t induced(const std::vector<Edge>& edges, std::uint32_t mask) {
  std::size_t count = 0;
  for (const Edge& e : edges)
    if ((edge_mask(e) & mask) == edge_mask(e)) ++count;
  return count;
}

std::optional<std::uint32_t> laman_violating_mask(std::size_t n, const std::vector<Edge>& edges) {
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size < 2) continue;
    if (induced(edges, mask) > 2 * size - 3) return mask;
  }
  return std::nullopt;
}

std::vector<Vertex> mask_vertices(std::uint32_t mask) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < 32; ++v)
    if (mask >> v & 1u) out.push_back(v);
  return out;
}

}  // namespace

bool laman_independent_oracle(const Multigraph& m) { return !laman_violation(m); }

std::optional<std::vector<Vertex>> laman_violation(const Multigraph& m) {
  check_oracle_bound(m.vertex_count());
  if (auto mask = laman_violating_mask(m.vertex_count(), m.edges())) return mask_vertices(*mask);
  return std::nullopt;
}

bool circuit_oracle(const Multigraph& m) {
  check_oracle_bound(m.vertex_count());
  if (m.edge_count() == 0 || m.edge_count() != 2 * m.spanned_vertex_count() - 2) return false;
  // Independence is inherited by subsets, so checking each maximal proper subset suffices.
  std::vector<Edge> rest;
  for (std::size_t skip = 0; skip < m.edge_count(); ++skip) {
    rest.clear();
    for (std::size_t i = 0; i < m.edge_count(); ++i)
      if (i != skip) rest.push_back(m.edge(i));
    if (laman_violating_mask(m.vertex_count(), rest)) return false;
  }
  return true;
}

bool pinned_conditions_oracle(const PinnedGraph& g) {
  if (g.edge_count() != 2 * g.inner_count()) {
    check_oracle_bound(g.vertex_count());
    return false;
  }
  return !pinned_conditions_violation(g);
}

std::optional<std::vector<Vertex>> pinned_conditions_violation(const PinnedGraph& g) {
  const std::size_t n = g.vertex_count();
  check_oracle_bound(n);
  std::uint32_t pin_mask = 0;
  for (Vertex p : g.pins()) pin_mask |= 1u << p;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const std::size_t e = induced(g.edges(), mask);
    if (e == 0) continue;
    const int pins = std::popcount(mask & pin_mask);
    const int inner = std::popcount(mask & ~pin_mask);
    const int bound = pins >= 2 ? 2 * inner : pins == 1 ? 2 * inner - 1 : 2 * inner - 3;
    if (static_cast<int>(e) > bound) return mask_vertices(mask);
  }
  return std::nullopt;
}

}  // namespace rigidity
