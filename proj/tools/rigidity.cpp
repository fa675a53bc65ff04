// Command-line front end. Exit codes: 0 property holds, 1 property fails, 2 input error.

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rigidity/assur.hpp"
#include "rigidity/canonical.hpp"
#include "rigidity/certificate.hpp"
#include "rigidity/counting.hpp"
#include "rigidity/generate.hpp"
#include "rigidity/io.hpp"
#include "rigidity/numeric.hpp"
#include "rigidity/pebble.hpp"

namespace {

using namespace rigidity;
using io::Json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

io::GraphDocument load_graph(const std::string& path) {
  io::GraphDocument doc = io::parse_graph_text(io::read_file(path));
  for (const auto& w : doc.warnings) std::cerr << "warning: " << w << "\n";
  return doc;
}

Json edge_list(const PinnedGraph& g, const std::vector<std::size_t>& edges) {
  Json out = Json::array();
  for (std::size_t i : edges) out.push_back({g.name(g.edge(i).u), g.name(g.edge(i).v)});
  return out;
}

Json vertex_list(const PinnedGraph& g, const std::vector<Vertex>& vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(g.name(v));
  return out;
}

void emit(const Json& report) { std::cout << report.dump(2) << "\n"; }

// dof

int cmd_dof(const std::string& path) {
  const LinkageSchema schema = io::parse_linkage_text(io::read_file(path));
  const DofReport before = grubler_dof(schema);
  const DofReport after = grubler_dof(remove_drivers(schema));
  auto line = [](const char* label, const DofReport& r) {
    std::cout << label << ": L=" << r.link_count << ", sum(k-1)=" << r.joint_constraints
              << ", F=3(" << r.link_count << "-1)-2*" << r.joint_constraints << "=" << r.dof << "\n";
    if (r.overbraced) {
      std::cout << "  warning: F is only a lower bound; links {";
      for (std::size_t k = 0; k < r.overbraced_links.size(); ++k)
        std::cout << (k ? ", " : "") << r.overbraced_links[k];
      std::cout << "} are overbraced\n";
    } else if (!r.overbrace_checked) {
      std::cout << "  note: too many links to scan sub-collections for overbracing\n";
    }
  };
  line("linkage", before);
  line("drivers removed", after);
  std::cout << "F=" << before.dof << "; after driver removal F=" << after.dof << "\n";
  return kPass;
}

// check

int check_laman(const PinnedGraph& g, Json& report) {
  const Multigraph m = g.underlying();
  const RankReport rank = pebble_rank(m);
  report["rank"] = rank.rank;
  report["pass"] = rank.rejected_edges.empty();
  if (rank.rejected_edges.empty()) return kPass;
  report["witness"] = {{"circuit", edge_list(g, fundamental_circuit(m, rank, rank.rejected_edges.front()))}};
  return kFail;
}

int check_pinned(const PinnedGraph& g, Json& report) {
  const int dof = pinned_dof(g);
  report["pinned_dof"] = dof;
  if (g.pin_count() < 2) {
    report["pass"] = false;
    report["reason"] = "fewer than two pins";
    return kFail;
  }
  const bool ok = pinned_isostatic(g);
  report["pass"] = ok;
  if (ok) return kPass;
  const auto witness = pinned_overbraced_witness(g);
  if (!witness.empty()) report["witness"] = {{"overbraced", edge_list(g, witness)}};
  else report["witness"] = {{"underbraced_dof", dof}};
  return kFail;
}

int check_assur(const PinnedGraph& g, const std::string& method, std::uint64_t seed, Json& report) {
  AssurMethods methods{false, false, false, false};
  if (method == "all") methods = AssurMethods{};
  else if (method == "i") methods.minimality = true;
  else if (method == "ii") methods.circuit = true;
  else if (method == "iii") methods.vertex_deletion = true;
  else if (method == "iv") methods.edge_deletion = true;
  DeletionOptions options;
  options.motion.seed = seed;
  const AssurVerdict v = is_assur(g, methods, options);
  auto put = [&](const char* key, const std::optional<bool>& x) {
    if (x) report["checks"][key] = *x;
  };
  put("minimality", v.minimality);
  put("circuit", v.circuit);
  put("vertex_deletion", v.vertex_deletion);
  put("edge_deletion", v.edge_deletion);
  report["disagreement"] = v.disagreement;
  // The selected method decides the exit code; the circuit condition is the reference.
  bool pass = v.overall;
  if (method != "all") {
    for (const auto& x : {v.minimality, v.circuit, v.vertex_deletion, v.edge_deletion})
      if (x) pass = *x;
  }
  if (!v.reason.empty() && !v.overall) pass = false;
  report["pass"] = pass;
  if (!v.reason.empty()) report["reason"] = v.reason;
  if (pass) return kPass;

  if (g.pin_count() >= 2 && !g.has_isolated_pin() && pinned_isostatic(g)) {
    const Multigraph star = contract_pins(g);
    const RankReport rank = pebble_rank(star);
    if (!rank.rejected_edges.empty()) {
      const auto circuit = fundamental_circuit(star, rank, rank.rejected_edges.front());
      if (circuit.size() < star.edge_count()) report["witness"] = {{"extra_circuit", edge_list(g, circuit)}};
    }
  } else if (g.pin_count() >= 2 && !pinned_isostatic(g)) {
    const auto witness = pinned_overbraced_witness(g);
    if (!witness.empty()) report["witness"] = {{"overbraced", edge_list(g, witness)}};
    else report["witness"] = {{"underbraced_dof", pinned_dof(g)}};
  }
  return kFail;
}

// decompose

Json scheme_listing(const AssurScheme& s) {
  Json out = Json::array();
  for (std::size_t k = 0; k < s.components.size(); ++k) {
    const auto& c = s.components[k];
    Json below = Json::array();
    for (const auto& [a, b] : s.covers)
      if (b == k) below.push_back(a);
    out.push_back({{"component", k},
                   {"level", c.level},
                   {"inner", vertex_list(c.graph, c.graph.inner_vertices())},
                   {"edges", c.graph.edge_count()},
                   {"above", below}});
  }
  return out;
}

int cmd_decompose(const PinnedGraph& g, const std::string& dot_path, const std::string& json_path) {
  Json report;
  report["code"] = canonical_code(g, std::max<std::size_t>(kDefaultCanonicalBound, g.vertex_count())).hex();
  if (g.pin_count() == 0 || !pinned_isostatic(g)) {
    report["pass"] = false;
    report["reason"] = "not pinned isostatic";
    report["pinned_dof"] = pinned_dof(g);
    emit(report);
    return kFail;
  }
  const AssurScheme scheme = decompose(g);
  report["pass"] = true;
  report["components"] = scheme_listing(scheme);
  report["covers"] = scheme.covers;
  report["order"] = scheme.order;
  emit(report);
  if (!dot_path.empty()) io::write_file(dot_path, io::scheme_to_dot(scheme));
  if (!json_path.empty()) io::write_file(json_path, io::scheme_to_json(scheme).dump(2) + "\n");
  return kPass;
}

int cmd_recompose(const std::string& path) {
  const AssurScheme scheme = io::scheme_from_json(Json::parse(io::read_file(path)));
  const PinnedGraph g = recompose(scheme);
  Json report;
  report["code"] = canonical_code(g, std::max<std::size_t>(kDefaultCanonicalBound, g.vertex_count())).hex();
  report["graph"] = io::graph_to_json(g);
  emit(report);
  return kPass;
}

// motion

template <class T>
Json velocity_json(const T& x) {
  if constexpr (std::is_same_v<T, ModP>) return x.value();
  else return x;
}

template <class T>
Json motion_report(const PinnedGraph& g, const MotionBasis<T>& basis) {
  Json motions = Json::array();
  for (const auto& m : basis.motions) {
    Json entry = Json::object();
    for (std::size_t k = 0; k < basis.vertices.size(); ++k)
      entry[g.name(basis.vertices[k])] = {velocity_json(m[k].x), velocity_json(m[k].y)};
    motions.push_back(std::move(entry));
  }
  return motions;
}

int cmd_motion(PinnedGraph g, const std::string& remove, std::uint64_t seed, const std::string& config_path,
               const std::optional<Configuration<double>>& positions) {
  Json report;
  report["seed"] = seed;
  if (!remove.empty()) {
    const auto comma = remove.find(',');
    if (comma == std::string::npos) throw io::ParseError("--remove-edge expects u,w");
    const auto u = g.find(remove.substr(0, comma)), w = g.find(remove.substr(comma + 1));
    if (!u || !w || !g.has_edge(*u, *w)) throw io::ParseError("no edge " + remove);
    for (std::size_t i = 0; i < g.edge_count(); ++i)
      if (g.edge(i) == Edge{*u, *w}) {
        g = delete_edge(g, i);
        break;
      }
    report["removed_edge"] = remove;
  }
  if (g.inner_count() == 0) throw io::ParseError("graph has no inner vertices");

  std::vector<bool> moving(g.vertex_count(), false);
  std::size_t dimension = 0;
  if (!config_path.empty() || positions) {
    const Configuration<double> c =
        config_path.empty() ? *positions : io::parse_configuration(Json::parse(io::read_file(config_path)), g);
    const auto basis = motion_space(g, c);
    dimension = basis.dimension();
    report["field"] = "float";
    report["ill_conditioned"] = basis.ill_conditioned;
    report["motions"] = motion_report(g, basis);
    for (const auto& m : basis.motions)
      for (std::size_t k = 0; k < basis.vertices.size(); ++k)
        if (std::abs(m[k].x) > 1e-9 || std::abs(m[k].y) > 1e-9) moving[basis.vertices[k]] = true;
  } else {
    std::mt19937_64 rng(seed);
    const auto c = random_configuration(g.vertex_count(), g.edges(), rng);
    const auto basis = motion_space(g, c);
    dimension = basis.dimension();
    report["field"] = "GF(2^61-1)";
    report["motions"] = motion_report(g, basis);
    const auto support = inner_motion_support(g, MotionOptions{seed, 8});
    for (Vertex v = 0; v < g.vertex_count(); ++v) moving[v] = support[v];
  }
  report["dimension"] = dimension;
  std::vector<Vertex> moves, fixed;
  for (Vertex v : g.inner_vertices()) (moving[v] ? moves : fixed).push_back(v);
  report["moving"] = vertex_list(g, moves);
  report["fixed"] = vertex_list(g, fixed);
  if (dimension == 0) report["summary"] = "no motion";
  else if (fixed.empty()) report["summary"] = "all inner vertices move";
  else report["summary"] = "some inner vertices stay fixed";
  emit(report);
  return dimension > 0 && fixed.empty() ? kPass : kFail;
}

// generate

int cmd_generate(bool circuits, std::size_t max_vertices, const std::string& out_dir) {
  Json catalog = Json::object();
  std::cout << "vertices  classes\n";
  auto row = [](std::size_t n, std::size_t count) {
    std::cout << std::string(n < 10 ? 7 : 6, ' ') << n << "  " << count << "\n";
  };
  if (circuits) {
    for (const auto& [n, list] : enumerate_circuits(max_vertices)) {
      row(n, list.size());
      Json codes = Json::array();
      for (const auto& m : list) codes.push_back(canonical_code(m, max_vertices).hex());
      catalog[std::to_string(n)] = codes;
    }
  } else {
    for (const auto& [n, list] : enumerate_assur(max_vertices)) {
      row(n, list.size());
      Json entries = Json::array();
      for (const auto& g : list)
        entries.push_back({{"code", canonical_code(g, max_vertices).hex()}, {"graph", io::graph_to_json(g)}});
      catalog[std::to_string(n)] = entries;
    }
  }
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    const auto file = std::filesystem::path(out_dir) / (circuits ? "circuits.json" : "assur.json");
    io::write_file(file.string(), catalog.dump(2) + "\n");
  }
  return kPass;
}

// certify / verify

int cmd_certify(const PinnedGraph& g, const std::string& out_path, int time_limit_ms) {
  CertifyOptions options;
  options.time_limit = std::chrono::milliseconds(time_limit_ms);
  options.canonical_bound = std::max<std::size_t>(options.canonical_bound, g.vertex_count());
  if (!is_assur(g, AssurMethods{false, true, false, false}).overall) {
    std::cerr << "not an Assur graph\n";
    return kFail;
  }
  const auto cert = certify(g, options);
  if (!cert) {
    std::cerr << "no certificate found within the time limit\n";
    return kFail;
  }
  const std::string text = io::certificate_to_json(*cert).dump(2) + "\n";
  if (out_path.empty()) std::cout << text;
  else io::write_file(out_path, text);
  return kPass;
}

int cmd_verify(const std::string& path) {
  const Certificate c = io::certificate_from_json(Json::parse(io::read_file(path)));
  std::size_t bound = 16;
  const VerifyResult r = replay_certificate(c, bound);
  Json report{{"pass", r.ok}, {"steps", c.steps.size()}};
  if (!r.ok) report["reason"] = r.reason;
  emit(report);
  return r.ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2D combinatorial rigidity of pinned graphs: counts, Assur checks, decomposition, generation"};
  app.require_subcommand(1);

  std::string file, dot_out, json_out, mode = "assur", method = "all", remove_edge, config, out;
  std::uint64_t seed = 1;
  std::size_t max_vertices = 6;
  bool circuits = false, assur = false;
  int time_limit_ms = 10000;

  auto* dof = app.add_subcommand("dof", "Grubler count of a linkage file, before and after removing drivers");
  dof->add_option("linkage", file, "linkage file")->required();

  auto* check = app.add_subcommand("check", "Check a graph file for independence, pinned isostaticity or Assur");
  check->add_option("graph", file, "graph file")->required();
  check->add_option("--mode", mode, "laman | pinned | assur")->check(CLI::IsMember({"laman", "pinned", "assur"}));
  check->add_option("--method", method, "all | i | ii | iii | iv")
      ->check(CLI::IsMember({"all", "i", "ii", "iii", "iv"}));
  check->add_option("--seed", seed, "seed for randomized checks");

  auto* dec = app.add_subcommand("decompose", "Decompose a pinned isostatic graph into Assur components");
  dec->add_option("graph", file, "graph file")->required();
  dec->add_option("--dot", dot_out, "write the scheme as a DOT digraph");
  dec->add_option("--json", json_out, "write the scheme as JSON");

  auto* rec = app.add_subcommand("recompose", "Rebuild a graph from a scheme written by decompose --json");
  rec->add_option("scheme", file, "scheme file")->required();

  auto* motion = app.add_subcommand("motion", "First-order motions of a pinned framework");
  motion->add_option("graph", file, "graph file")->required();
  motion->add_option("--remove-edge", remove_edge, "delete edge u,w first");
  auto* seed_opt = motion->add_option("--seed", seed, "seed for the random configuration");
  motion->add_option("--config", config, "positions file {id: [x, y]}")->excludes(seed_opt);

  auto* gen = app.add_subcommand("generate", "Enumerate circuit or Assur graph classes");
  auto* c_flag = gen->add_flag("--circuits", circuits, "rigidity circuits");
  gen->add_flag("--assur", assur, "Assur graphs")->excludes(c_flag);
  gen->add_option("--max-vertices", max_vertices, "largest vertex count")->check(CLI::Range(3, 10));
  gen->add_option("--out", out, "directory for the catalog");

  auto* cert = app.add_subcommand("certify", "Construction certificate for an Assur graph");
  cert->add_option("graph", file, "graph file")->required();
  cert->add_option("--out", out, "write the certificate here instead of stdout");
  cert->add_option("--time-limit-ms", time_limit_ms, "search time limit");

  auto* ver = app.add_subcommand("verify", "Replay and check a certificate");
  ver->add_option("certificate", file, "certificate file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*dof) return cmd_dof(file);
    if (*check) {
      const PinnedGraph g = load_graph(file).graph;
      Json report{{"mode", mode}, {"seed", seed}};
      int code = kPass;
      if (mode == "laman") code = check_laman(g, report);
      else if (mode == "pinned") code = check_pinned(g, report);
      else code = check_assur(g, method, seed, report);
      emit(report);
      return code;
    }
    if (*dec) return cmd_decompose(load_graph(file).graph, dot_out, json_out);
    if (*rec) return cmd_recompose(file);
    if (*motion) {
      auto doc = load_graph(file);
      return cmd_motion(doc.graph, remove_edge, seed, config, std::nullopt);
    }
    if (*gen) {
      if (!circuits && !assur) throw io::ParseError("generate needs --circuits or --assur");
      return cmd_generate(circuits, max_vertices, out);
    }
    if (*cert) return cmd_certify(load_graph(file).graph, out, time_limit_ms);
    if (*ver) return cmd_verify(file);
  } catch (const io::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
