#include "rigidity/certificate.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "rigidity/generate.hpp"
#include "rigidity/pebble.hpp"

namespace rigidity {

const char* to_string(CertificateBase base) {
  switch (base) {
    case CertificateBase::dyad: return "dyad";
    case CertificateBase::k4: return "K4";
    case CertificateBase::single_edge: return "single-edge";
  }
  return "?";
}

const char* to_string(StepKind kind) {
  switch (kind) {
    case StepKind::vertex_addition: return "vertex-addition";
    case StepKind::edge_split: return "edge-split";
    case StepKind::two_sum: return "two-sum";
    case StepKind::vertex_split: return "vertex-split";
    case StepKind::pin_split: return "pin-split";
    case StepKind::pin_rearrange: return "pin-rearrange";
  }
  return "?";
}

CertificateBase parse_certificate_base(const std::string& text) {
  for (auto b : {CertificateBase::dyad, CertificateBase::k4, CertificateBase::single_edge})
    if (text == to_string(b)) return b;
  throw std::invalid_argument("unknown certificate base '" + text + "'");
}

StepKind parse_step_kind(const std::string& text) {
  for (auto k : {StepKind::vertex_addition, StepKind::edge_split, StepKind::two_sum, StepKind::vertex_split,
                 StepKind::pin_split, StepKind::pin_rearrange})
    if (text == to_string(k)) return k;
  throw std::invalid_argument("unknown construction step '" + text + "'");
}

CertifiedGraph base_graph(CertificateBase base) {
  switch (base) {
    case CertificateBase::dyad: return graphs::dyad();
    case CertificateBase::k4: return graphs::complete(4);
    case CertificateBase::single_edge: return graphs::complete(2);
  }
  throw std::invalid_argument("bad certificate base");
}

namespace {

std::string fnv_hex(const std::vector<std::uint64_t>& words) {
  std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
  for (std::uint64_t w : words)
    for (int k = 0; k < 8; ++k) {
      h ^= (w >> (8 * k)) & 0xff;
      h *= 0x100000001b3ull;
    }
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int k = 15; k >= 0; --k, h >>= 4) out[static_cast<std::size_t>(k)] = digits[h & 0xf];
  return out;
}

void push_text(std::vector<std::uint64_t>& words, const std::string& text) {
  words.push_back(text.size());
  for (unsigned char ch : text) words.push_back(ch);
}

void push_list(std::vector<std::uint64_t>& words, const std::vector<std::size_t>& xs) {
  words.push_back(xs.size());
  words.insert(words.end(), xs.begin(), xs.end());
}

}  // namespace

std::string labelled_fingerprint(const CertifiedGraph& g) {
  std::vector<std::uint64_t> words;
  std::vector<Edge> edges;
  if (const auto* m = std::get_if<Multigraph>(&g)) {
    words.push_back(0);
    words.push_back(m->vertex_count());
    edges = m->edges();
  } else {
    const auto& p = std::get<PinnedGraph>(g);
    words.push_back(1);
    words.push_back(p.vertex_count());
    for (Vertex v = 0; v < p.vertex_count(); ++v) words.push_back(p.is_pin(v) ? 1 : 0);
    edges = p.edges();
  }
  for (auto& e : edges) e = e.normalized();
  std::sort(edges.begin(), edges.end());
  for (const Edge& e : edges) {
    words.push_back(e.u);
    words.push_back(e.v);
  }
  return fnv_hex(words);
}

std::string step_checkpoint(const std::string& previous, const ConstructionStep& step,
                            const CertifiedGraph& after) {
  std::vector<std::uint64_t> words;
  push_text(words, previous);
  words.push_back(static_cast<std::uint64_t>(step.kind));
  push_list(words, step.vertices);
  push_list(words, step.labels);
  words.push_back(step.operand.size());
  for (const Certificate& c : step.operand) {
    words.push_back(static_cast<std::uint64_t>(c.base));
    words.push_back(c.steps.size());
    push_text(words, c.steps.empty() ? std::string() : c.steps.back().checkpoint);
    push_text(words, c.result.hex());
  }
  push_text(words, labelled_fingerprint(after));
  return fnv_hex(words);
}

namespace {

enum class Stage { independent, circuit, assur };

Stage base_stage(CertificateBase base) {
  switch (base) {
    case CertificateBase::dyad: return Stage::assur;
    case CertificateBase::k4: return Stage::circuit;
    case CertificateBase::single_edge: return Stage::independent;
  }
  return Stage::circuit;
}

void expect_arity(const ConstructionStep& s, std::size_t vertices) {
  if (s.vertices.size() != vertices)
    throw std::invalid_argument(std::string(to_string(s.kind)) + " expects " + std::to_string(vertices) +
                                " vertex parameters");
}

std::vector<SplitSide> to_sides(const std::vector<std::size_t>& labels) {
  std::vector<SplitSide> sides;
  for (std::size_t l : labels) {
    if (l > 2) throw std::invalid_argument("vertex-split side must be 0, 1 or 2");
    sides.push_back(static_cast<SplitSide>(l));
  }
  return sides;
}

// Applies one step after checking that it is legal in the current stage.
CertifiedGraph apply_step(const CertifiedGraph& state, Stage& stage, const ConstructionStep& s,
                          std::size_t bound) {
  auto multigraph = [&]() -> const Multigraph& {
    if (!std::holds_alternative<Multigraph>(state)) throw std::invalid_argument("step needs an unpinned graph");
    return std::get<Multigraph>(state);
  };
  auto pinned = [&]() -> const PinnedGraph& {
    if (!std::holds_alternative<PinnedGraph>(state)) throw std::invalid_argument("step needs a pinned graph");
    return std::get<PinnedGraph>(state);
  };
  switch (s.kind) {
    case StepKind::vertex_addition:
      if (stage != Stage::independent) throw std::invalid_argument("vertex-addition only builds independent sets");
      expect_arity(s, 2);
      return vertex_addition(multigraph(), s.vertices[0], s.vertices[1]);
    case StepKind::edge_split:
      expect_arity(s, 3);
      if (stage == Stage::assur) return edge_split(pinned(), s.vertices[0], s.vertices[1], s.vertices[2]);
      return edge_split(multigraph(), s.vertices[0], s.vertices[1], s.vertices[2]);
    case StepKind::two_sum: {
      if (stage != Stage::circuit) throw std::invalid_argument("two-sum glues circuits");
      expect_arity(s, 4);
      if (s.operand.size() != 1 || s.operand.front().base != CertificateBase::k4)
        throw std::invalid_argument("two-sum needs one circuit certificate as operand");
      const VerifyResult other = replay_certificate(s.operand.front(), bound);
      if (!other.ok) throw std::invalid_argument("two-sum operand: " + other.reason);
      if (!std::holds_alternative<Multigraph>(*other.graph))
        throw std::invalid_argument("two-sum operand is not a circuit");
      return two_sum(multigraph(), std::get<Multigraph>(*other.graph), s.vertices[0], s.vertices[1],
                     s.vertices[2], s.vertices[3]);
    }
    case StepKind::vertex_split:
      expect_arity(s, 1);
      if (stage == Stage::assur) return vertex_split(pinned(), s.vertices[0], to_sides(s.labels));
      if (stage != Stage::circuit) throw std::invalid_argument("vertex-split applies to circuits");
      return vertex_split(multigraph(), s.vertices[0], to_sides(s.labels));
    case StepKind::pin_split:
      if (stage != Stage::circuit) throw std::invalid_argument("pin-split applies to a circuit");
      expect_arity(s, 1);
      stage = Stage::assur;
      return split_contracted_vertex(multigraph(), s.vertices[0], s.labels);
    case StepKind::pin_rearrange:
      if (stage != Stage::assur) throw std::invalid_argument("pin-rearrange applies to Assur graphs");
      expect_arity(s, 0);
      return pin_rearrangement(pinned(), s.labels);
  }
  throw std::invalid_argument("unknown step");
}

CanonicalCode code_of(const CertifiedGraph& g, std::size_t bound) {
  return std::visit([bound](const auto& x) { return canonical_code(x, bound); }, g);
}

}  // namespace

VerifyResult replay_certificate(const Certificate& c, std::size_t canonical_bound) {
  VerifyResult r;
  CertifiedGraph state = base_graph(c.base);
  Stage stage = base_stage(c.base);
  for (std::size_t k = 0; k < c.steps.size(); ++k) {
    const ConstructionStep& s = c.steps[k];
    try {
      state = apply_step(state, stage, s, canonical_bound);
    } catch (const std::exception& e) {
      r.reason = "step " + std::to_string(k + 1) + " (" + to_string(s.kind) + "): " + e.what();
      return r;
    }
    if (s.checkpoint != step_checkpoint(k == 0 ? std::string() : c.steps[k - 1].checkpoint, s, state)) {
      r.reason = "step " + std::to_string(k + 1) + " (" + to_string(s.kind) + "): checkpoint mismatch";
      return r;
    }
  }
  try {
    if (code_of(state, canonical_bound) != c.result) {
      r.reason = "replayed graph differs from the claimed result";
      return r;
    }
  } catch (const std::exception& e) {
    r.reason = e.what();
    return r;
  }
  r.ok = true;
  r.graph = std::move(state);
  return r;
}

bool verify_certificate(const Certificate& c) { return replay_certificate(c).ok; }

namespace {

using Clock = std::chrono::steady_clock;

std::string last_checkpoint(const Certificate& c) {
  return c.steps.empty() ? std::string() : c.steps.back().checkpoint;
}

struct CircuitSearch {
  Clock::time_point deadline;
  std::size_t bound;
  std::set<CanonicalCode> failed;
  bool timed_out = false;

  // Graph replayed from `cert` and the isomorphism from `target` onto it.
  std::pair<Multigraph, std::vector<Vertex>> realize(const Certificate& cert, const Multigraph& target) const {
    VerifyResult r = replay_certificate(cert, bound);
    if (!r.ok) throw std::logic_error("certificate produced during search does not replay: " + r.reason);
    Multigraph replayed = std::get<Multigraph>(*r.graph);
    auto phi = isomorphism(target, replayed, bound);
    return {std::move(replayed), std::move(phi)};
  }

  static bool is_k4(const Multigraph& c) {
    if (c.vertex_count() != 4 || c.edge_count() != 6) return false;
    for (Vertex u = 0; u < 4; ++u)
      for (Vertex v = u + 1; v < 4; ++v)
        if (c.multiplicity(u, v) != 1) return false;
    return true;
  }

  std::optional<Certificate> reduce(const Multigraph& c) {
    if (is_k4(c)) return Certificate{CertificateBase::k4, {}, canonical_code(c, bound)};
    if (Clock::now() > deadline) {
      timed_out = true;
      return std::nullopt;
    }
    const CanonicalCode code = canonical_code(c, bound);
    if (failed.contains(code)) return std::nullopt;
    if (auto cert = reverse_edge_split(c, code)) return cert;
    if (auto cert = reverse_two_sum(c, code)) return cert;
    if (!timed_out) failed.insert(code);
    return std::nullopt;
  }

  std::optional<Certificate> reverse_edge_split(const Multigraph& c, const CanonicalCode& code) {
    const auto degrees = c.degrees();
    for (Vertex v = 0; v < c.vertex_count(); ++v) {
      if (degrees[v] != 3) continue;
      std::vector<Vertex> nb;
      for (std::size_t i : c.incident_edges(v)) nb.push_back(c.edge(i).other(v));
      std::sort(nb.begin(), nb.end());
      if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) continue;
      const std::array<std::array<Vertex, 3>, 3> choices{{{nb[0], nb[1], nb[2]}, {nb[0], nb[2], nb[1]},
                                                          {nb[1], nb[2], nb[0]}}};
      for (const auto& [x, y, z] : choices) {
        if (c.multiplicity(x, y) != 0) continue;
        auto shrink = [v](Vertex w) { return w > v ? w - 1 : w; };
        Multigraph reduced;
        for (Vertex w = 0; w < c.vertex_count(); ++w)
          if (w != v) reduced.add_vertex(c.name(w));
        for (const Edge& e : c.edges())
          if (!e.touches(v)) reduced.add_edge(shrink(e.u), shrink(e.v));
        reduced.add_edge(shrink(x), shrink(y));
        if (!is_circuit(reduced)) continue;
        auto sub = reduce(reduced);
        if (!sub) {
          if (timed_out) return std::nullopt;
          continue;
        }
        auto [replayed, phi] = realize(*sub, reduced);
        ConstructionStep step{StepKind::edge_split, {phi[shrink(x)], phi[shrink(y)], phi[shrink(z)]}, {}, {}, {}};
        step.checkpoint = step_checkpoint(
            last_checkpoint(*sub), step, edge_split(replayed, step.vertices[0], step.vertices[1], step.vertices[2]));
        sub->steps.push_back(std::move(step));
        sub->result = code;
        return sub;
      }
    }
    return std::nullopt;
  }

  std::optional<Certificate> reverse_two_sum(const Multigraph& c, const CanonicalCode& code) {
    const std::size_t n = c.vertex_count();
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (c.multiplicity(a, b) != 0) continue;
        // Components of c - {a, b}.
        std::vector<int> comp(n, -1);
        int count = 0;
        for (Vertex s = 0; s < n; ++s) {
          if (s == a || s == b || comp[s] >= 0) continue;
          std::vector<Vertex> stack{s};
          comp[s] = count;
          while (!stack.empty()) {
            const Vertex x = stack.back();
            stack.pop_back();
            for (std::size_t i : c.incident_edges(x)) {
              const Vertex y = c.edge(i).other(x);
              if (y != a && y != b && comp[y] < 0) {
                comp[y] = count;
                stack.push_back(y);
              }
            }
          }
          ++count;
        }
        if (count < 2) continue;
        for (int side = 0; side < count; ++side) {
          auto half = [&](bool inside) {
            std::vector<Vertex> local(n, n);
            Multigraph h;
            for (Vertex w = 0; w < n; ++w)
              if (w == a || w == b || (comp[w] == side) == inside) local[w] = h.add_vertex(c.name(w));
            for (const Edge& e : c.edges())
              if (local[e.u] < n && local[e.v] < n && !(e.touches(a) && e.touches(b)))
                h.add_edge(local[e.u], local[e.v]);
            h.add_edge(local[a], local[b]);
            return std::pair{std::move(h), std::move(local)};
          };
          auto [c1, local1] = half(false);
          auto [c2, local2] = half(true);
          if (c1.edge_count() + c2.edge_count() != c.edge_count() + 2) continue;
          if (!is_circuit(c1) || !is_circuit(c2)) continue;
          auto s1 = reduce(c1);
          if (!s1) {
            if (timed_out) return std::nullopt;
            continue;
          }
          auto s2 = reduce(c2);
          if (!s2) {
            if (timed_out) return std::nullopt;
            continue;
          }
          auto [r1, phi1] = realize(*s1, c1);
          auto [r2, phi2] = realize(*s2, c2);
          ConstructionStep step{StepKind::two_sum,
                                {phi1[local1[a]], phi1[local1[b]], phi2[local2[a]], phi2[local2[b]]},
                                {},
                                {*s2},
                                {}};
          step.checkpoint = step_checkpoint(
              last_checkpoint(*s1), step,
              two_sum(r1, r2, step.vertices[0], step.vertices[1], step.vertices[2], step.vertices[3]));
          s1->steps.push_back(std::move(step));
          s1->result = code;
          return s1;
        }
      }
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<Certificate> certify_circuit(const Multigraph& circuit, const CertifyOptions& options) {
  if (!is_circuit(circuit)) throw std::invalid_argument("certify_circuit needs a rigidity circuit");
  CircuitSearch search{Clock::now() + options.time_limit, options.canonical_bound, {}, false};
  return search.reduce(circuit);
}

std::optional<Certificate> certify(const PinnedGraph& g, const CertifyOptions& options) {
  if (g.pin_count() < 2 || g.has_isolated_pin() || !pinned_isostatic(g) || !is_circuit(contract_pins(g)))
    throw std::invalid_argument("certify needs an Assur graph");
  if (g.inner_count() == 1)
    return Certificate{CertificateBase::dyad, {}, canonical_code(g, options.canonical_bound)};

  const Contraction star = contract(g);
  auto cert = certify_circuit(star.graph, options);
  if (!cert) return std::nullopt;

  const VerifyResult r = replay_certificate(*cert, options.canonical_bound);
  if (!r.ok) throw std::logic_error("circuit certificate does not replay: " + r.reason);
  const Multigraph& replayed = std::get<Multigraph>(*r.graph);
  const auto phi = isomorphism(star.graph, replayed, options.canonical_bound);
  std::vector<Vertex> phi_inverse(phi.size());
  for (Vertex v = 0; v < phi.size(); ++v) phi_inverse[phi[v]] = v;

  // Pins of g hanging off each inner vertex, in pin order, consumed per parallel edge.
  const auto pins = g.pins();
  std::map<Vertex, std::vector<std::size_t>> pins_at;  // contracted vertex -> pin ordinals
  for (const Edge& e : g.edges()) {
    if (!g.is_pin(e.u) && !g.is_pin(e.v)) continue;
    const Vertex pin = g.is_pin(e.u) ? e.u : e.v;
    const Vertex inner = e.other(pin);
    pins_at[star.vertex_map[inner]].push_back(
        static_cast<std::size_t>(std::find(pins.begin(), pins.end(), pin) - pins.begin()));
  }
  for (auto& [v, list] : pins_at) std::sort(list.rbegin(), list.rend());

  const Vertex hub = phi[star.hub];
  ConstructionStep step{StepKind::pin_split, {hub}, {}, {}, {}};
  for (std::size_t i : replayed.incident_edges(hub)) {
    auto& list = pins_at[phi_inverse[replayed.edge(i).other(hub)]];
    step.labels.push_back(list.back());
    list.pop_back();
  }
  step.checkpoint = step_checkpoint(last_checkpoint(*cert), step, split_contracted_vertex(replayed, hub, step.labels));
  cert->steps.push_back(std::move(step));
  cert->result = canonical_code(g, options.canonical_bound);
  return cert;
}

}  // namespace rigidity
