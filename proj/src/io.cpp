#include "rigidity/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace rigidity::io {

namespace {

std::string id_text(const Json& id) {
  if (id.is_string()) return id.get<std::string>();
  if (id.is_number_integer()) return std::to_string(id.get<long long>());
  throw ParseError("ids must be strings or integers, got " + id.dump());
}

const Json& member(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return obj.at(key);
}

const Json& array_member(const Json& obj, const char* key) {
  const Json& a = member(obj, key);
  if (!a.is_array()) throw ParseError(std::string("field '") + key + "' must be a list");
  return a;
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

Point<double> parse_point(const Json& p) {
  if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
    throw ParseError("positions must be [x, y] number pairs");
  return {p[0].get<double>(), p[1].get<double>()};
}

Json vertices_json(const PinnedGraph& g, const Configuration<double>* positions) {
  Json out = Json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    Json entry{{"id", g.name(v)}, {"kind", g.is_pin(v) ? "pinned" : "inner"}};
    if (positions) entry["pos"] = {(*positions)[v].x, (*positions)[v].y};
    out.push_back(std::move(entry));
  }
  return out;
}

Json edges_json(const PinnedGraph& g) {
  Json out = Json::array();
  for (const Edge& e : g.edges()) out.push_back({g.name(e.u), g.name(e.v)});
  return out;
}

}  // namespace

GraphDocument parse_graph(const Json& doc) {
  GraphDocument out;
  std::vector<std::optional<Point<double>>> pos;
  for (const Json& v : array_member(doc, "vertices")) {
    const std::string id = id_text(member(v, "id"));
    const std::string kind = member(v, "kind").is_string() ? v.at("kind").get<std::string>() : "";
    VertexKind k;
    if (kind == "inner") k = VertexKind::inner;
    else if (kind == "pinned") k = VertexKind::pinned;
    else throw ParseError("vertex '" + id + "' has kind '" + kind + "', expected inner or pinned");
    if (out.graph.find(id)) throw ParseError("duplicate vertex id '" + id + "'");
    out.graph.add_vertex(k, id);
    pos.push_back(v.contains("pos") ? std::optional(parse_point(v.at("pos"))) : std::nullopt);
  }
  for (const Json& e : array_member(doc, "edges")) {
    if (!e.is_array() || e.size() != 2) throw ParseError("edges must be id pairs, got " + e.dump());
    const std::string a = id_text(e[0]), b = id_text(e[1]);
    const auto u = out.graph.find(a), w = out.graph.find(b);
    if (!u || !w) throw ParseError("edge [" + a + ", " + b + "] names an unknown vertex");
    if (*u == *w) throw ParseError("loop at '" + a + "'");
    if (out.graph.is_pin(*u) && out.graph.is_pin(*w)) {
      out.warnings.push_back("dropped pin-pin edge [" + a + ", " + b + "]");
      continue;
    }
    if (out.graph.has_edge(*u, *w)) throw ParseError("duplicate edge [" + a + ", " + b + "]");
    out.graph.add_edge(*u, *w);
  }
  if (!pos.empty() && std::all_of(pos.begin(), pos.end(), [](const auto& p) { return p.has_value(); })) {
    Configuration<double> c;
    for (const auto& p : pos) c.push_back(*p);
    out.positions = std::move(c);
  }
  return out;
}

GraphDocument parse_graph_text(const std::string& text) { return parse_graph(parse_text(text)); }

Json graph_to_json(const PinnedGraph& g, const Configuration<double>* positions) {
  return Json{{"vertices", vertices_json(g, positions)}, {"edges", edges_json(g)}};
}

LinkageSchema parse_linkage(const Json& doc) {
  LinkageSchema s;
  for (const Json& l : array_member(doc, "links")) {
    if (l.is_object()) {
      s.links.push_back(id_text(member(l, "id")));
      if (l.contains("driver")) {
        if (!l.at("driver").is_boolean()) throw ParseError("'driver' must be true or false");
        if (l.at("driver").get<bool>()) s.drivers.push_back(s.links.back());
      }
    } else {
      s.links.push_back(id_text(l));
    }
  }
  s.ground = id_text(member(doc, "ground"));
  std::size_t k = 0;
  for (const Json& j : array_member(doc, "joints")) {
    Joint joint;
    joint.id = j.contains("id") ? id_text(j.at("id")) : "J" + std::to_string(k);
    ++k;
    for (const Json& l : array_member(j, "incident")) joint.links.push_back(id_text(l));
    s.joints.push_back(std::move(joint));
  }
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return s;
}

LinkageSchema parse_linkage_text(const std::string& text) { return parse_linkage(parse_text(text)); }

Configuration<double> parse_configuration(const Json& doc, const PinnedGraph& g) {
  if (!doc.is_object()) throw ParseError("configuration must map vertex ids to [x, y]");
  Configuration<double> c(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!doc.contains(g.name(v))) throw ParseError("configuration misses vertex '" + g.name(v) + "'");
    c[v] = parse_point(doc.at(g.name(v)));
  }
  return c;
}

Json scheme_to_json(const AssurScheme& scheme) {
  Json components = Json::array();
  for (const AssurComponent& c : scheme.components) {
    Json targets = Json::object();
    for (const auto& [pin, host] : c.pin_targets) targets[c.graph.name(pin)] = host;
    components.push_back({{"level", c.level},
                          {"vertices", vertices_json(c.graph, nullptr)},
                          {"edges", edges_json(c.graph)},
                          {"pin_targets", targets}});
  }
  return Json{{"ground", scheme.ground},
              {"components", components},
              {"covers", scheme.covers},
              {"order", scheme.order}};
}

AssurScheme scheme_from_json(const Json& doc) {
  AssurScheme s;
  for (const Json& g : array_member(doc, "ground")) s.ground.push_back(id_text(g));
  for (const Json& c : array_member(doc, "components")) {
    AssurComponent comp;
    comp.graph = parse_graph(c).graph;
    comp.level = member(c, "level").get<int>();
    for (const auto& [pin, host] : member(c, "pin_targets").items()) {
      const auto v = comp.graph.find(pin);
      if (!v || !comp.graph.is_pin(*v)) throw ParseError("pin target for unknown pin '" + pin + "'");
      comp.pin_targets[*v] = id_text(host);
    }
    s.components.push_back(std::move(comp));
  }
  rebuild_order(s);
  return s;
}

std::string scheme_to_dot(const AssurScheme& scheme) {
  std::ostringstream out;
  out << "digraph assur_scheme {\n  rankdir=BT;\n";
  for (std::size_t k = 0; k < scheme.components.size(); ++k) {
    const AssurComponent& c = scheme.components[k];
    out << "  c" << k << " [label=\"c" << k << " L" << c.level << ": {";
    bool first = true;
    for (Vertex v : c.graph.inner_vertices()) {
      out << (first ? "" : ", ") << c.graph.name(v);
      first = false;
    }
    out << "}\"];\n";
  }
  for (const auto& [a, b] : scheme.covers) out << "  c" << a << " -> c" << b << ";\n";
  out << "}\n";
  return out.str();
}

Json certificate_to_json(const Certificate& c) {
  Json steps = Json::array();
  for (const ConstructionStep& s : c.steps) {
    Json step{{"kind", to_string(s.kind)}, {"vertices", s.vertices}, {"checkpoint", s.checkpoint}};
    if (!s.labels.empty() || s.kind == StepKind::pin_split || s.kind == StepKind::vertex_split ||
        s.kind == StepKind::pin_rearrange)
      step["labels"] = s.labels;
    if (!s.operand.empty()) {
      Json ops = Json::array();
      for (const Certificate& o : s.operand) ops.push_back(certificate_to_json(o));
      step["operand"] = ops;
    }
    steps.push_back(std::move(step));
  }
  return Json{{"base", to_string(c.base)}, {"steps", steps}, {"result", c.result.hex()}};
}

Certificate certificate_from_json(const Json& doc) {
  Certificate c;
  try {
    c.base = parse_certificate_base(member(doc, "base").get<std::string>());
    for (const Json& s : array_member(doc, "steps")) {
      ConstructionStep step;
      step.kind = parse_step_kind(member(s, "kind").get<std::string>());
      step.vertices = member(s, "vertices").get<std::vector<std::size_t>>();
      if (s.contains("labels")) step.labels = s.at("labels").get<std::vector<std::size_t>>();
      if (s.contains("operand"))
        for (const Json& o : s.at("operand")) step.operand.push_back(certificate_from_json(o));
      step.checkpoint = member(s, "checkpoint").get<std::string>();
      c.steps.push_back(std::move(step));
    }
    c.result = CanonicalCode::from_hex(member(doc, "result").get<std::string>());
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
  return c;
}

Json code_json(const CanonicalCode& code) { return code.hex(); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

}  // namespace rigidity::io
