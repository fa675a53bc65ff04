#include "rigidity/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace rigidity {

namespace {

constexpr std::uint8_t kMultigraphTag = 0x4d;  // 'M'
constexpr std::uint8_t kPinnedTag = 0x50;      // 'P'

using Cell = std::vector<Vertex>;
using Partition = std::vector<Cell>;

// Individualization-refinement search over colour-respecting orderings. The canonical
// code is the lexicographically largest leaf encoding; automorphisms discovered at
// equal leaves prune sibling branches lying in the same orbit.
class CanonicalSearch {
 public:
  CanonicalSearch(std::uint8_t tag, std::vector<std::uint8_t> colors, std::vector<std::uint8_t> adj)
      : tag_(tag), n_(colors.size()), colors_(std::move(colors)), adj_(std::move(adj)) {}

  CanonicalForm run() {
    Partition initial;
    std::vector<Vertex> by_color(n_);
    std::iota(by_color.begin(), by_color.end(), Vertex{0});
    std::stable_sort(by_color.begin(), by_color.end(),
                     [&](Vertex a, Vertex b) { return colors_[a] < colors_[b]; });
    for (Vertex v : by_color) {
      if (initial.empty() || colors_[initial.back().front()] != colors_[v]) initial.emplace_back();
      initial.back().push_back(v);
    }
    std::vector<Vertex> path;
    visit(std::move(initial), path);
    return {CanonicalCode{best_code_}, best_order_};
  }

 private:
  std::uint8_t adj(Vertex a, Vertex b) const { return adj_[a * n_ + b]; }

  void refine(Partition& cells) const {
    bool changed = true;
    std::vector<std::size_t> count(n_, 0);
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
        for (std::size_t x = 0; x < cells.size(); ++x) {
          if (cells[x].size() == 1) continue;
          for (Vertex v : cells[x]) {
            count[v] = 0;
            for (Vertex w : cells[s]) count[v] += adj(v, w);
          }
          const auto first = count[cells[x].front()];
          if (std::all_of(cells[x].begin(), cells[x].end(), [&](Vertex v) { return count[v] == first; }))
            continue;
          Cell members = cells[x];
          std::stable_sort(members.begin(), members.end(),
                           [&](Vertex a, Vertex b) { return count[a] < count[b]; });
          Partition pieces;
          for (Vertex v : members) {
            if (pieces.empty() || count[pieces.back().front()] != count[v]) pieces.emplace_back();
            pieces.back().push_back(v);
          }
          for (auto& p : pieces) std::sort(p.begin(), p.end());
          cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(x));
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x), pieces.begin(), pieces.end());
          changed = true;
          break;
        }
      }
    }
  }

  std::vector<std::uint8_t> encode(const std::vector<Vertex>& order) const {
    std::vector<std::uint8_t> code;
    code.reserve(2 + n_ + n_ * (n_ - 1) / 2);
    code.push_back(tag_);
    code.push_back(static_cast<std::uint8_t>(n_));
    for (Vertex v : order) code.push_back(colors_[v]);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) code.push_back(adj(order[i], order[j]));
    return code;
  }

  void record_automorphism(const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
    std::vector<Vertex> g(n_);
    for (std::size_t i = 0; i < n_; ++i) g[from[i]] = to[i];
    bool identity = true;
    for (Vertex v = 0; v < n_; ++v) identity &= g[v] == v;
    if (!identity) automorphisms_.push_back(std::move(g));
  }

  void leaf(const Partition& cells) {
    std::vector<Vertex> order;
    order.reserve(n_);
    for (const Cell& c : cells) order.push_back(c.front());
    auto code = encode(order);
    if (first_order_.empty()) {
      first_code_ = code;
      first_order_ = order;
    } else if (code == first_code_) {
      record_automorphism(first_order_, order);
    }
    if (best_order_.empty() || code > best_code_) {
      best_code_ = std::move(code);
      best_order_ = std::move(order);
    } else if (code == best_code_ && best_code_ != first_code_) {
      record_automorphism(best_order_, order);
    }
  }

  Vertex find(std::vector<Vertex>& parent, Vertex v) const {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }

  bool same_orbit(Vertex v, const std::vector<Vertex>& tried, const std::vector<Vertex>& path) {
    if (tried.empty() || automorphisms_.empty()) return false;
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    for (const auto& g : automorphisms_) {
      if (!std::all_of(path.begin(), path.end(), [&](Vertex p) { return g[p] == p; })) continue;
      for (Vertex x = 0; x < n_; ++x) parent[find(parent, x)] = find(parent, g[x]);
    }
    const Vertex root = find(parent, v);
    return std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return find(parent, t) == root; });
  }

  void visit(Partition cells, std::vector<Vertex>& path) {
    refine(cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const Cell& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const std::size_t t = static_cast<std::size_t>(target - cells.begin());
    const Cell members = cells[t];
    std::vector<Vertex> tried;
    for (Vertex v : members) {
      if (same_orbit(v, tried, path)) continue;
      tried.push_back(v);
      Partition next = cells;
      Cell rest;
      for (Vertex w : members)
        if (w != v) rest.push_back(w);
      next[t] = Cell{v};
      next.insert(next.begin() + static_cast<std::ptrdiff_t>(t) + 1, rest);
      path.push_back(v);
      visit(std::move(next), path);
      path.pop_back();
    }
  }

  std::uint8_t tag_;
  std::size_t n_;
  std::vector<std::uint8_t> colors_;
  std::vector<std::uint8_t> adj_;
  std::vector<std::uint8_t> best_code_, first_code_;
  std::vector<Vertex> best_order_, first_order_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

std::vector<std::uint8_t> adjacency(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::uint8_t> adj(n * n, 0);
  for (const Edge& e : edges) {
    if (adj[e.u * n + e.v] == 255) throw std::length_error("edge multiplicity above 255");
    ++adj[e.u * n + e.v];
    ++adj[e.v * n + e.u];
  }
  return adj;
}

void check_bound(std::size_t n, std::size_t bound) {
  if (n > bound)
    throw SizeBoundError("canonical labeling limited to " + std::to_string(bound) + " vertices, got " +
                         std::to_string(n));
  if (n > 255) throw SizeBoundError("canonical codes support at most 255 vertices");
}

}  // namespace

std::string CanonicalCode::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

CanonicalCode CanonicalCode::from_hex(const std::string& text) {
  if (text.size() % 2 != 0) throw std::invalid_argument("odd-length hex code");
  auto nibble = [](char c) -> std::uint8_t {
    if (c >= '0' && c <= '9') return static_cast<std::uint8_t>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<std::uint8_t>(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return static_cast<std::uint8_t>(c - 'A' + 10);
    throw std::invalid_argument("bad hex digit");
  };
  CanonicalCode code;
  for (std::size_t i = 0; i < text.size(); i += 2)
    code.bytes.push_back(static_cast<std::uint8_t>(nibble(text[i]) << 4 | nibble(text[i + 1])));
  return code;
}

CanonicalForm canonical_form(const Multigraph& m, std::size_t bound) {
  check_bound(m.vertex_count(), bound);
  CanonicalSearch search(kMultigraphTag, std::vector<std::uint8_t>(m.vertex_count(), 0),
                         adjacency(m.vertex_count(), m.edges()));
  return search.run();
}

CanonicalForm canonical_form(const PinnedGraph& g, std::size_t bound) {
  check_bound(g.vertex_count(), bound);
  std::vector<std::uint8_t> colors(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) colors[v] = g.is_pin(v) ? 1 : 0;
  CanonicalSearch search(kPinnedTag, std::move(colors), adjacency(g.vertex_count(), g.edges()));
  return search.run();
}

CanonicalCode canonical_code(const Multigraph& m, std::size_t bound) { return canonical_form(m, bound).code; }
CanonicalCode canonical_code(const PinnedGraph& g, std::size_t bound) { return canonical_form(g, bound).code; }

std::vector<Vertex> isomorphism(const Multigraph& a, const Multigraph& b, std::size_t bound) {
  const auto fa = canonical_form(a, bound);
  const auto fb = canonical_form(b, bound);
  if (fa.code != fb.code) throw std::invalid_argument("graphs are not isomorphic");
  std::vector<Vertex> map(a.vertex_count());
  for (std::size_t k = 0; k < fa.order.size(); ++k) map[fa.order[k]] = fb.order[k];
  return map;
}

}  // namespace rigidity
