#include "iwip/json_io.hpp"

#include <regex>
#include <sstream>

namespace iwip {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Vertex vertex_named(const Graph& g, const std::string& name) {
  const auto v = g.find_vertex(name);
  if (!v) throw FormatError("unknown vertex " + name);
  return *v;
}

Edge edge_named(const Graph& g, const std::string& token) {
  const auto e = g.find_edge(token);
  if (!e) throw FormatError("unknown edge " + token);
  return *e;
}

Json pi1_to_json(const FreeEndomorphism& phi) {
  Json images = Json::object();
  for (std::size_t i = 0; i < phi.images.size(); ++i)
    images["x" + std::to_string(i + 1)] = format_word(phi.images[i]);
  return images;
}

Json named_map_to_json(const NamedMap& m) {
  Json j;
  j["name"] = m.name;
  j["images"] = map_to_json(*m.map)["images"];
  if (!m.map->fixes_vertices()) j["vertices"] = map_to_json(*m.map)["vertices"];
  if (m.inverse) j["inverse"] = map_to_json(*m.inverse);
  return j;
}

NamedMap named_map_from_json(const std::shared_ptr<const Graph>& graph, const Json& j) {
  NamedMap m;
  m.name = field(j, "name").get<std::string>();
  m.map = std::make_shared<const GraphMap>(map_from_json(graph, j));
  if (j.contains("inverse")) m.inverse = std::make_shared<const GraphMap>(map_from_json(graph, j.at("inverse")));
  return m;
}

std::string verdict_name(LegalizingVerdict v) { return v == LegalizingVerdict::Legalizing ? "legalizing" : "not_legalizing"; }

std::string verdict_name(InpVerdict v) {
  switch (v) {
    case InpVerdict::NoneFound: return "none_found_within_bounds";
    case InpVerdict::Found: return "found";
    case InpVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

Json legalizing_to_json(const Graph& g, const LegalizingCertificate& c) {
  Json j;
  j["C"] = c.c;
  j["checked"] = c.checked;
  j["verdict"] = verdict_name(c.verdict);
  j["nodes"] = c.nodes;
  if (c.witness) j["witness"] = {word_to_json(g, c.witness->first), word_to_json(g, c.witness->second)};
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

LegalizingCertificate legalizing_from_json(const Json& j) {
  LegalizingCertificate c;
  c.c = field(j, "C").get<int>();
  c.checked = field(j, "checked").get<std::uint64_t>();
  c.verdict = field(j, "verdict").get<std::string>() == "legalizing" ? LegalizingVerdict::Legalizing
                                                                     : LegalizingVerdict::NotLegalizing;
  if (j.contains("nodes")) c.nodes = j.at("nodes").get<std::uint64_t>();
  return c;
}

GammaEdges edges_from_labels(const Graph& g) {
  static const std::regex pattern("([abc])([0-9]+)|d");
  GammaEdges out;
  for (Edge e : g.positive_edges()) {
    std::smatch m;
    const std::string& label = g.label(e);
    if (!std::regex_match(label, m, pattern)) throw FormatError("unexpected edge label " + label);
    if (label == "d") {
      out.d = e;
      continue;
    }
    const auto index = static_cast<std::size_t>(std::stoi(m[2].str()));
    auto& bucket = m[1] == "c" ? out.c : m[1] == "b" ? out.b : out.a;
    if (index != bucket.size() + 1) throw FormatError("edge labels out of order at " + label);
    bucket.push_back(e);
  }
  if (out.c.empty() || out.a.empty()) throw FormatError("graph lacks c or a edges");
  return out;
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json vertices = Json::array();
  for (int v = 0; v < g.vertex_count(); ++v) vertices.push_back(g.vertex_name(Vertex{v}));
  Json edges = Json::array();
  for (Edge e : g.positive_edges())
    edges.push_back({{"label", g.label(e)}, {"from", g.vertex_name(g.init(e))}, {"to", g.vertex_name(g.terminal(e))}});
  return {{"vertices", vertices}, {"edges", edges}};
}

std::shared_ptr<const Graph> graph_from_json(const Json& j) {
  auto g = std::make_shared<Graph>();
  try {
    for (const auto& v : field(j, "vertices")) g->add_vertex(v.get<std::string>());
    for (const auto& e : field(j, "edges"))
      g->add_edge(field(e, "label").get<std::string>(), vertex_named(*g, field(e, "from").get<std::string>()),
                  vertex_named(*g, field(e, "to").get<std::string>()));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(e.what());
  } catch (const GraphError& e) {
    throw FormatError(e.what());
  }
  return g;
}

Json gates_to_json(const Graph& g, const GateStructure& gates) {
  Json out = Json::array();
  for (int k = 0; k < gates.gate_count(); ++k) out.push_back(word_to_json(g, gates.members(k)));
  return out;
}

GateStructure gates_from_json(const Graph& g, const Json& j) {
  std::vector<std::vector<Edge>> classes;
  for (const auto& gate : j) classes.push_back(word_from_json(g, gate));
  try {
    return GateStructure(g, classes);
  } catch (const GraphError& e) {
    throw FormatError(e.what());
  }
}

Json word_to_json(const Graph& g, std::span<const Edge> w) {
  Json out = Json::array();
  for (Edge e : w) out.push_back(g.token(e));
  return out;
}

EdgeWord word_from_json(const Graph& g, const Json& j) {
  if (!j.is_array()) throw FormatError("edge word must be an array of tokens");
  EdgeWord w;
  for (const auto& t : j) w.push_back(edge_named(g, t.get<std::string>()));
  return w;
}

Json map_to_json(const GraphMap& f) {
  const Graph& g = f.graph();
  Json images = Json::object();
  for (Edge e : g.positive_edges()) images[g.token(e)] = word_to_json(g, f.image(e));
  Json out;
  if (!f.fixes_vertices()) {
    Json vertices = Json::object();
    for (int v = 0; v < g.vertex_count(); ++v) vertices[g.vertex_name(Vertex{v})] = g.vertex_name(f.image(Vertex{v}));
    out["vertices"] = vertices;
  }
  out["images"] = images;
  return out;
}

GraphMap map_from_json(std::shared_ptr<const Graph> graph, const Json& j) {
  const Graph& g = *graph;
  const Json& images = field(j, "images");
  std::vector<EdgeWord> positive(static_cast<std::size_t>(g.edge_count()));
  std::vector<char> seen(positive.size(), 0);
  for (const auto& [token, word] : images.items()) {
    const Edge e = edge_named(g, token);
    if (!e.positive()) throw FormatError("image keys must be positive edges: " + token);
    positive[static_cast<std::size_t>(e.index())] = word_from_json(g, word);
    seen[static_cast<std::size_t>(e.index())] = 1;
  }
  for (Edge e : g.positive_edges())
    if (!seen[static_cast<std::size_t>(e.index())]) positive[static_cast<std::size_t>(e.index())] = {e};
  std::vector<Vertex> vertices(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) vertices[static_cast<std::size_t>(v)] = Vertex{v};
  if (j.contains("vertices"))
    for (const auto& [name, image] : j.at("vertices").items())
      vertices[static_cast<std::size_t>(vertex_named(g, name).id)] = vertex_named(g, image.get<std::string>());
  try {
    return GraphMap(std::move(graph), std::move(vertices), std::move(positive));
  } catch (const MapError& e) {
    throw FormatError(e.what());
  }
}

Json index_list_to_json(const IndexList& list) { return list.strings(); }

Json realization_to_json(const RealizationResult& result) {
  const Blueprint& bp = result.blueprint;
  const Graph& g = *result.gamma.graph;
  Json j;

  Json entries = Json::array();
  for (int e : bp.entries) entries.push_back(format_half(e));
  j["input"] = {{"rank", bp.rank}, {"index_list", entries}};

  Json pairs = Json::array();
  for (const auto& [a, b] : bp.germ_pairs)
    pairs.push_back({g.vertex_name(Vertex{a}), g.vertex_name(Vertex{b})});
  j["blueprint"] = {{"case", to_string(bp.kind)}, {"i", bp.gate_counts}, {"r", bp.r},         {"s", bp.s},
                    {"has_d", bp.has_d},          {"germ_pairs", pairs},  {"s_formula", bp.s_formula}};
  j["graph"] = graph_to_json(g);
  j["gates"] = gates_to_json(g, result.gamma.gates);

  if (result.selectors) {
    const PathSelectors& sel = *result.selectors;
    Json loops = Json::array();
    for (const auto& l : sel.loops)
      loops.push_back({{"edge", g.token(l.edge)}, {"u", word_to_json(g, l.u)}, {"u_prime", word_to_json(g, l.u_prime)}});
    Json turns = Json::array();
    for (const auto& t : sel.gate_turns)
      turns.push_back({{"gates",
                        {word_to_json(g, result.gamma.gates.members(t.gate_a)),
                         word_to_json(g, result.gamma.gates.members(t.gate_b))}},
                       {"v", word_to_json(g, t.v)}});
    Json s = {{"loops", loops}, {"gate_turns", turns}};
    if (bp.kind != RealizationCase::MaxOdd) {
      s["beta"] = word_to_json(g, sel.beta);
      s["beta_prime"] = word_to_json(g, sel.beta_prime);
    }
    j["selectors"] = s;
  }

  Json h_prime = Json::array();
  for (const auto& m : result.h_prime) h_prime.push_back(named_map_to_json(m));
  Json g_factors = Json::array();
  for (const auto& m : result.g_factors) g_factors.push_back(named_map_to_json(m));
  j["maps"] = {{"composition", "f = h o g, h = h' o h', factor lists outermost first"},
               {"h_prime", h_prime},
               {"g", g_factors}};
  j["legalizing"] = legalizing_to_json(g, result.legalizing);

  const Pi1Marking marking = result.marking();
  j["marking"] = {{"basepoint", g.vertex_name(marking.basepoint())},
                  {"tree", word_to_json(g, marking.tree())},
                  {"basis", word_to_json(g, marking.basis_edges())}};
  Json pi1_h = Json::array();
  for (const auto& m : result.h_prime)
    pi1_h.push_back({{"name", m.name}, {"images", pi1_to_json(pi1_automorphism(*m.map, marking))}});
  Json pi1_g = Json::array();
  for (const auto& m : result.g_factors)
    pi1_g.push_back({{"name", m.name}, {"images", pi1_to_json(pi1_automorphism(*m.map, marking))}});
  j["pi1"] = {{"h_prime", pi1_h}, {"g", pi1_g}};
  j["notes"] = result.notes;
  return j;
}

RealizationResult realization_from_json(const Json& j) {
  try {
    RealizationResult result;
    const Json& input = field(j, "input");
    std::vector<int> entries;
    for (const auto& e : field(input, "index_list")) entries.push_back(parse_half(e.get<std::string>()));
    result.blueprint = validate_and_classify(field(input, "rank").get<int>(), entries);
    if (j.contains("blueprint") && field(j.at("blueprint"), "case").get<std::string>() != to_string(result.blueprint.kind))
      throw FormatError("blueprint case does not match the input list");

    auto graph = graph_from_json(field(j, "graph"));
    result.gamma.graph = graph;
    result.gamma.gates = gates_from_json(*graph, field(j, "gates"));
    result.gamma.edges = edges_from_labels(*graph);
    result.gamma.g1 = result.gamma.gates.gate_of(result.gamma.edges.c.front());
    result.gamma.g2 = result.gamma.gates.gate_of(result.gamma.edges.c.back().reversed());

    const Json& maps = field(j, "maps");
    for (const auto& m : field(maps, "h_prime")) result.h_prime.push_back(named_map_from_json(graph, m));
    for (const auto& m : field(maps, "g")) result.g_factors.push_back(named_map_from_json(graph, m));
    result.legalizing = legalizing_from_json(field(j, "legalizing"));
    if (j.contains("notes")) result.notes = j.at("notes").get<std::vector<std::string>>();
    return result;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(e.what());
  }
}

Json report_to_json(const CertificationReport& report) {
  Json j;
  j["level"] = to_string(report.level);
  j["train_track"] = report.train_track_ok;
  j["fixes_vertices_and_gates"] = report.fixes_vertices_and_gates;
  j["homotopy_inverses"] = report.homotopy_inverses_ok;
  j["h_positive"] = report.h_positive;
  Json prim = {{"ok", report.primitivity.primitive}};
  prim["witness"] = report.primitivity.witness ? Json(*report.primitivity.witness) : Json(nullptr);
  j["primitivity"] = prim;
  Json wh = Json::object();
  for (const auto& [v, ok] : report.whitehead) wh[v] = ok;
  j["whitehead"] = wh;
  j["index_list"] = index_list_to_json(report.index_list);
  Json inp = {{"period_bound", report.inp.period_bound},
              {"length_bound", report.inp.length_bound},
              {"verdict", verdict_name(report.inp.verdict)},
              {"nodes", report.inp.nodes}};
  if (!report.inp.found.empty()) {
    Json found = Json::array();
    for (const auto& p : report.inp.found) {
      found.push_back({{"period", p.period},
                       {"first_length", p.first.size()},
                       {"second_length", p.second.size()},
                       {"verified", p.verified_by_expansion}});
    }
    inp["found"] = found;
  }
  if (!report.inp.note.empty()) inp["note"] = report.inp.note;
  j["inp"] = inp;
  if (report.legalizing) {
    j["legalizing"] = {{"C", report.legalizing->c},
                       {"checked", report.legalizing->checked},
                       {"verdict", verdict_name(report.legalizing->verdict)}};
  } else {
    j["legalizing"] = nullptr;
  }
  j["notes"] = report.notes;
  return j;
}

Json table_to_json(const FrequencyTable& table, bool include_timing) {
  Json counts = Json::array();
  for (const auto& [list, n] : table.ranked()) counts.push_back({{"index_list", index_list_to_json(list)}, {"count", n}});
  Json j = {{"N", table.rank},
            {"L", table.length},
            {"samples", table.samples},
            {"seed", table.seed},
            {"conditional", table.conditional},
            {"inp_present", table.inp_present},
            {"non_expanding", table.non_expanding},
            {"other", table.other},
            {"counts", counts}};
  if (include_timing) j["elapsed_seconds"] = table.elapsed_seconds;
  return j;
}

bool is_realization_document(const Json& j) { return j.is_object() && j.contains("maps") && j.contains("input"); }

MapChain chain_from_json(const Json& j) {
  try {
    auto graph = graph_from_json(field(j, "graph"));
    if (j.contains("map")) return MapChain(map_from_json(graph, j.at("map")));
    std::vector<std::shared_ptr<const GraphMap>> factors;
    for (const auto& m : field(j, "factors")) factors.push_back(std::make_shared<const GraphMap>(map_from_json(graph, m)));
    return MapChain(graph, std::move(factors));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(e.what());
  }
}

std::string realization_summary(const RealizationResult& result) {
  const Graph& g = *result.gamma.graph;
  std::ostringstream out;
  out << "rank " << result.blueprint.rank << ", index list " << result.blueprint.index_list().to_string() << ", "
      << to_string(result.blueprint.kind) << " case\n";
  out << "graph: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
  for (Edge e : g.positive_edges())
    out << "  " << g.label(e) << ": " << g.vertex_name(g.init(e)) << " -> " << g.vertex_name(g.terminal(e)) << '\n';
  out << "gates:";
  for (int k = 0; k < result.gamma.gates.gate_count(); ++k)
    out << " {" << format_word(g, result.gamma.gates.members(k)) << '}';
  out << '\n';
  out << "h' has " << result.h_prime.size() << " factors, g has " << result.g_factors.size() << " factors\n";
  out << "legalizing constant C = " << result.legalizing.c << " (" << result.legalizing.checked << " long turns)\n";
  for (const auto& n : result.notes) out << "note: " << n << '\n';
  return out.str();
}

std::string report_summary(const CertificationReport& report) {
  std::ostringstream out;
  out << "level: " << to_string(report.level) << '\n';
  out << "train track: " << (report.train_track_ok ? "yes" : "no") << '\n';
  out << "primitive: " << (report.primitivity.primitive ? "yes" : "no");
  if (report.primitivity.witness) out << " (M^" << *report.primitivity.witness << " > 0)";
  out << '\n';
  out << "whitehead connected:";
  for (const auto& [v, ok] : report.whitehead) out << ' ' << v << '=' << (ok ? "yes" : "no");
  out << '\n';
  if (report.legalizing)
    out << "legalizing at C = " << report.legalizing->c << ": " << verdict_name(report.legalizing->verdict) << '\n';
  out << "INP search (period <= " << report.inp.period_bound << ", length <= " << report.inp.length_bound
      << "): " << verdict_name(report.inp.verdict) << '\n';
  out << "index list: " << report.index_list.to_string() << '\n';
  for (const auto& n : report.notes) out << "note: " << n << '\n';
  return out.str();
}

}  // namespace iwip
