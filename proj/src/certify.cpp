#include "iwip/certify.hpp"

#include <algorithm>

#include "iwip/traintrack.hpp"

namespace iwip {

std::string to_string(CertificationLevel level) {
  switch (level) {
    case CertificationLevel::FullTheorem62: return "full_theorem_62";
    case CertificationLevel::Conditional: return "conditional";
    case CertificationLevel::Failed: return "failed";
  }
  return "?";
}

namespace {

bool fixes_gates(const MapChain& f, const GateStructure& gates) {
  const auto df = f.direction_map();
  for (int id = 0; id < f.graph().directed_count(); ++id)
    if (gates.gate_of(df[static_cast<std::size_t>(id)]) != gates.gate_of(Edge{id})) return false;
  return true;
}

bool factors_inverted(const std::vector<NamedMap>& factors, const Pi1Marking& marking, std::vector<std::string>& notes) {
  bool ok = true;
  for (const auto& f : factors) {
    if (!f.inverse || !verify_homotopy_equivalence(*f.map, *f.inverse, marking)) {
      notes.push_back("listed inverse of " + f.name + " is not a homotopy inverse");
      ok = false;
    }
  }
  return ok;
}

}  // namespace

CertificationReport certify_realization(const RealizationResult& result, const CertifyOptions& options) {
  CertificationReport report;
  const GateStructure& gates = result.gamma.gates;
  const Graph& graph = *result.gamma.graph;
  const MapChain h = result.h();
  const MapChain g = result.g();
  const MapChain f = result.final_map();

  const auto h_diag = check_train_track_morphism(h, gates);
  const auto g_diag = check_train_track_morphism(g, gates);
  report.train_track_ok = h_diag.ok() && g_diag.ok();
  if (!h_diag.ok()) report.notes.push_back("h: " + h_diag.violations.front().message);
  if (!g_diag.ok()) report.notes.push_back("g: " + g_diag.violations.front().message);

  report.fixes_vertices_and_gates =
      report.train_track_ok && h.fixes_vertices() && g.fixes_vertices() && fixes_gates(h, gates) && fixes_gates(g, gates);
  if (!report.fixes_vertices_and_gates) report.notes.push_back("h or g moves a vertex or a gate");

  const Pi1Marking marking = result.marking();
  const bool h_inv = factors_inverted(result.h_prime, marking, report.notes);
  const bool g_inv = factors_inverted(result.g_factors, marking, report.notes);
  report.homotopy_inverses_ok = h_inv && g_inv;

  bool whitehead_ok = true;
  if (report.train_track_ok) {
    report.h_positive = is_positive(h.support_matrix());
    for (int v = 0; v < graph.vertex_count(); ++v) {
      const bool connected = gate_whitehead_graph(h, gates, Vertex{v}).connected();
      report.whitehead.emplace_back(graph.vertex_name(Vertex{v}), connected);
      whitehead_ok = whitehead_ok && connected;
    }
    report.primitivity = is_primitive(f.support_matrix());
    if (!report.h_positive) report.notes.push_back("transition matrix of h is not positive");

    const int c = std::max(result.legalizing.c, 1);
    report.legalizing = verify_legalizing(g, gates, c);
    if (!report.legalizing->ok()) report.notes.push_back("g is not legalizing at C = " + std::to_string(c));
  }

  report.index_list = gate_index_list(gates, periodic_vertices(f));

  const bool structural = report.train_track_ok && report.fixes_vertices_and_gates && report.homotopy_inverses_ok &&
                          report.h_positive && whitehead_ok && report.legalizing && report.legalizing->ok();
  if (structural) {
    report.inp = find_periodic_inps(f, gates, options.inp);
    if (report.inp.verdict == InpVerdict::Found) report.notes.push_back("INP search found a periodic INP");
    if (report.inp.verdict == InpVerdict::Inconclusive) report.notes.push_back("INP search inconclusive: " + report.inp.note);
  } else {
    report.inp.period_bound = options.inp.period_bound;
    report.inp.length_bound = options.inp.length_bound;
    report.inp.verdict = InpVerdict::Inconclusive;
    report.inp.note = "skipped: structural hypotheses fail";
  }
  report.level = structural && report.inp.verdict != InpVerdict::Found ? CertificationLevel::FullTheorem62
                                                                        : CertificationLevel::Failed;
  return report;
}

int expanding_power(const MapChain& f, int max_power) {
  const MapChain single = f;
  MapChain power(f.graph_ptr());
  for (int q = 1; q <= max_power; ++q) {
    power = compose(single, power);
    const auto lengths = power.image_lengths();
    if (std::all_of(lengths.begin(), lengths.end(), [](double l) { return l >= 2.0; })) return q;
  }
  return 0;
}

StableIndexResult stable_index_list(const MapChain& f, const InpOptions& options) {
  StableIndexResult out;
  out.gates = intrinsic_gate_structure(f);
  out.list = gate_index_list(out.gates, periodic_vertices(f));
  out.expanding_power = expanding_power(f, f.graph().directed_count());
  if (out.expanding_power == 0) {
    out.caveat = true;
    out.reason = "no power of the map expands every edge";
    return out;
  }
  out.inp = find_periodic_inps(f.power(out.expanding_power), out.gates, options);
  switch (out.inp->verdict) {
    case InpVerdict::NoneFound: break;
    case InpVerdict::Found:
      out.caveat = true;
      out.reason = "periodic INP present";
      break;
    case InpVerdict::Inconclusive:
      out.caveat = true;
      out.reason = "INP search inconclusive: " + out.inp->note;
      break;
  }
  return out;
}

CertificationReport grade_train_track_map(const MapChain& f, const InpOptions& options) {
  CertificationReport report;
  report.inp.period_bound = options.period_bound;
  report.inp.length_bound = options.length_bound;
  report.inp.verdict = InpVerdict::Inconclusive;
  if (!is_classical_train_track(f)) {
    report.notes.push_back("not a train track map");
    return report;
  }
  const StableIndexResult stable = stable_index_list(f, options);
  report.index_list = stable.list;
  report.train_track_ok = check_composite_train_track(f, stable.gates).ok();
  report.primitivity = is_primitive(f.support_matrix());
  bool whitehead_ok = true;
  for (Vertex v : periodic_vertices(f)) {
    const bool connected = gate_whitehead_graph(f, stable.gates, v).connected();
    report.whitehead.emplace_back(f.graph().vertex_name(v), connected);
    whitehead_ok = whitehead_ok && connected;
  }
  if (stable.inp) report.inp = *stable.inp;
  if (stable.caveat) report.notes.push_back(stable.reason);
  if (!report.primitivity.primitive) report.notes.push_back("transition matrix is not primitive");
  if (!whitehead_ok) report.notes.push_back("a gate-Whitehead graph is disconnected");
  const bool conditional = report.train_track_ok && report.primitivity.primitive && whitehead_ok &&
                           stable.inp && stable.inp->verdict == InpVerdict::NoneFound;
  report.level = conditional ? CertificationLevel::Conditional : CertificationLevel::Failed;
  if (conditional)
    report.notes.push_back("conditional: INP search bounded by period " + std::to_string(options.period_bound) +
                           " and length " + std::to_string(options.length_bound));
  return report;
}

}  // namespace iwip
