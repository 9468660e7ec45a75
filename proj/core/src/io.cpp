#include "rainbow/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "rainbow/errors.hpp"

namespace rainbow {

using nlohmann::json;

namespace {

[[noreturn]] void fail_at(const std::string& path, const std::string& message) {
  throw InputError(path + ": " + message);
}

const json& field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) fail_at(name, "missing field");
  return *it;
}

int int_field(const json& doc, const char* name) {
  const json& value = field(doc, name);
  if (!value.is_number_integer()) fail_at(name, "expected an integer");
  return value.get<int>();
}

Edge edge_from_json(const GroundSet& g, const json& j, const std::string& path) {
  if (!j.is_array()) fail_at(path, "expected an edge (array of vertex labels)");
  if (j.size() != static_cast<std::size_t>(g.r())) {
    fail_at(path, "edge has " + std::to_string(j.size()) + " vertices, expected r=" +
                      std::to_string(g.r()));
  }
  Edge e;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) fail_at(path + "[" + std::to_string(i) + "]", "expected an integer");
    e.vertices.push_back(j[i].get<int>() - 1);
  }
  try {
    g.check_edge(e);
  } catch (const InputError& err) {
    fail_at(path, err.what());
  }
  return e;
}

json edge_to_json(const Edge& e) {
  json out = json::array();
  for (int v : e) out.push_back(v + 1);
  return out;
}

std::string compact_edge(const Edge& e) {
  std::string out = "[";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(e[i] + 1);
  }
  return out + "]";
}

std::string r_set_label(int a, int b) {
  std::vector<std::string> parts;
  for (int i = 0; i < a; ++i) parts.push_back("m_" + std::to_string(i + 1));
  for (int i = 0; i < b; ++i) parts.push_back("w_" + std::to_string(i + 1));
  std::string out = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ", ";
    out += parts[i];
  }
  return out + "}";
}

const GroundSet& bipartite_ground() {
  static const GroundSet g = GroundSet::partite(2, 1);
  return g;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    const std::size_t upto = std::min<std::size_t>(err.byte == 0 ? 0 : err.byte - 1, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    const auto last_nl = text.rfind('\n', upto == 0 ? 0 : upto - 1);
    const std::size_t column = last_nl == std::string_view::npos || upto == 0 ? upto + 1 : upto - last_nl;
    throw InputError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                     ": malformed JSON");
  }
  if (!doc.is_object()) throw InputError("instance must be a JSON object");

  const json& kind = field(doc, "kind");
  if (!kind.is_string() || (kind != "partite" && kind != "general")) {
    fail_at("kind", "expected \"partite\" or \"general\"");
  }
  const int r = int_field(doc, "r");
  const int n = int_field(doc, "n");
  GroundSet ground = [&] {
    try {
      return kind == "partite" ? GroundSet::partite(r, n) : GroundSet::general(r, n);
    } catch (const InputError& err) {
      fail_at("r/n", err.what());
    }
  }();

  const json& families = field(doc, "families");
  if (!families.is_array() || families.empty()) {
    fail_at("families", "expected a nonempty array of families");
  }
  Instance out{ground, {}};
  for (std::size_t f = 0; f < families.size(); ++f) {
    const std::string fpath = "families[" + std::to_string(f) + "]";
    if (!families[f].is_array()) fail_at(fpath, "expected an array of edges");
    std::set<Edge> seen;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < families[f].size(); ++i) {
      const std::string epath = fpath + "[" + std::to_string(i) + "]";
      Edge e = edge_from_json(ground, families[f][i], epath);
      if (!seen.insert(e).second) fail_at(epath, "duplicate edge " + compact_edge(e));
      edges.push_back(std::move(e));
    }
    out.families.push_back(std::move(edges));
  }
  return out;
}

Family to_family(const Instance& instance) {
  std::vector<Hypergraph> members;
  for (const auto& edges : instance.families) members.emplace_back(instance.ground, edges);
  return Family(instance.ground, std::move(members));
}

Instance to_instance(const Family& family) {
  Instance out{family.ground(), {}};
  for (const Hypergraph& h : family) out.families.push_back(h.edges());
  return out;
}

Family parse_family(std::string_view text) { return to_family(parse_instance(text)); }

std::string format_instance(const Family& family) {
  const GroundSet& g = family.ground();
  std::ostringstream out;
  out << "{\n"
      << "  \"kind\": \"" << (g.is_partite() ? "partite" : "general") << "\",\n"
      << "  \"r\": " << g.r() << ",\n"
      << "  \"n\": " << g.n() << ",\n"
      << "  \"families\": [\n";
  for (std::size_t f = 0; f < family.k(); ++f) {
    out << "    [";
    const auto& edges = family[f].edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (i > 0) out << ",";
      out << compact_edge(edges[i]);
    }
    out << "]" << (f + 1 < family.k() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

json instance_json(const Family& family) {
  const GroundSet& g = family.ground();
  json families = json::array();
  for (const Hypergraph& h : family) {
    json edges = json::array();
    for (const Edge& e : h.edges()) edges.push_back(edge_to_json(e));
    families.push_back(std::move(edges));
  }
  return {{"kind", g.is_partite() ? "partite" : "general"},
          {"r", g.r()},
          {"n", g.n()},
          {"families", std::move(families)}};
}

std::string vertex_label(const GroundSet& g, Vertex v) {
  const std::string index = std::to_string(v.index + 1);
  if (!g.is_partite()) return "v_" + index;
  if (g.r() == 2) return (v.side == 0 ? "m_" : "w_") + index;
  return "V" + std::to_string(v.side + 1) + "_" + index;
}

std::string edge_label(const GroundSet& g, const Edge& e) {
  std::string out;
  for (Vertex v : g.vertices_of(e)) {
    if (!out.empty()) out += " ";
    out += vertex_label(g, v);
  }
  return out;
}

std::string matching_text(const GroundSet& g, const RainbowMatching& m) {
  std::string out;
  for (std::size_t i = 0; i < m.choices.size(); ++i) {
    out += "F_" + std::to_string(i + 1) + ": " + edge_label(g, m.choices[i]) + "\n";
  }
  return out;
}

json matching_json(const RainbowMatching& m) {
  json out = json::array();
  for (const Edge& e : m.choices) out.push_back(edge_to_json(e));
  return out;
}

RainbowMatching matching_from_json(const GroundSet& g, const json& j) {
  if (!j.is_array()) fail_at("matching", "expected an array of edges");
  RainbowMatching m;
  for (std::size_t i = 0; i < j.size(); ++i) {
    m.choices.push_back(edge_from_json(g, j[i], "matching[" + std::to_string(i) + "]"));
  }
  return m;
}

json result_json(std::string_view algorithm, const std::optional<RainbowMatching>& m) {
  json out = {{"schema", kResultSchema},
              {"algorithm", algorithm},
              {"status", m ? "found" : "none"}};
  out["matching"] = m ? matching_json(*m) : json(nullptr);
  return out;
}

std::optional<RainbowMatching> parse_result(const GroundSet& g, std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error&) {
    throw InputError("malformed result JSON");
  }
  if (!doc.is_object() || doc.value("schema", "") != kResultSchema) {
    throw InputError("not a " + std::string(kResultSchema) + " document");
  }
  const std::string status = doc.value("status", "");
  if (status == "none") return std::nullopt;
  if (status != "found") fail_at("status", "expected \"found\" or \"none\"");
  return matching_from_json(g, field(doc, "matching"));
}

std::string trace_text(const AlgoTrace& trace) {
  const GroundSet& g = bipartite_ground();
  std::ostringstream out;
  for (const StepRecord& rec : trace.steps) {
    out << "R_" << rec.t << " = " << r_set_label(rec.a, rec.b) << "\n";
    out << "e_" << rec.t << " = m_" << rec.edge[0] + 1 << " w_" << rec.edge[1] + 1 << "  (F_"
        << rec.member + 1 << ", length " << rec.length << ", tail " << vertex_label(g, rec.tail)
        << ", head " << vertex_label(g, rec.head) << ", " << (rec.is_short ? "short" : "long")
        << ")\n";
  }
  const int last = trace.halted_at ? *trace.halted_at : static_cast<int>(trace.k) + 1;
  out << "R_" << last << " = " << r_set_label(trace.final_a, trace.final_b) << "\n";
  if (trace.halted_at) {
    out << "HALT at t=" << *trace.halted_at << "\n";
  } else {
    out << "SUCCESS\n";
  }
  return out.str();
}

json trace_json(const AlgoTrace& trace) {
  const GroundSet& g = bipartite_ground();
  json steps = json::array();
  for (const StepRecord& rec : trace.steps) {
    json covered = json::array();
    for (Vertex v : rec.covered) covered.push_back(vertex_label(g, v));
    steps.push_back({{"t", rec.t},
                     {"member", rec.member + 1},
                     {"a", rec.a + 1},
                     {"b", rec.b + 1},
                     {"R", r_set_label(rec.a, rec.b)},
                     {"Z", std::move(covered)},
                     {"edge", edge_to_json(rec.edge)},
                     {"length", rec.length},
                     {"tail", vertex_label(g, rec.tail)},
                     {"head", vertex_label(g, rec.head)},
                     {"short", rec.is_short}});
  }
  json order = json::array();
  for (std::size_t i : trace.order) order.push_back(i + 1);
  json out = {{"schema", "rainbow-trace/1"},
              {"n", trace.n},
              {"k", trace.k},
              {"order", std::move(order)},
              {"steps", std::move(steps)},
              {"final_R", r_set_label(trace.final_a, trace.final_b)}};
  if (trace.halted_at) {
    out["outcome"] = {{"status", "halt"}, {"t", *trace.halted_at}};
  } else {
    out["outcome"] = {{"status", "success"}, {"matching", matching_json(*trace.matching)}};
  }
  return out;
}

json shift_log_json(const GroundSet& g, const ShiftLog& log) {
  json steps = json::array();
  for (const ShiftStep& step : log.steps) {
    json moved = json::array();
    for (const EdgeMove& mv : step.moved) {
      moved.push_back({{"member", mv.member + 1}, {"from", edge_to_json(mv.from)}, {"to", edge_to_json(mv.to)}});
    }
    steps.push_back({{"side", g.is_partite() ? json(step.side + 1) : json(nullptr)},
                     {"x", step.x + 1},
                     {"y", step.y + 1},
                     {"moved", std::move(moved)}});
  }
  return {{"schema", "rainbow-shiftlog/1"}, {"steps", std::move(steps)}};
}

ShiftLog shift_log_from_json(const GroundSet& g, const json& j) {
  if (!j.is_object()) fail_at("shiftlog", "expected an object");
  const json& steps = field(j, "steps");
  if (!steps.is_array()) fail_at("steps", "expected an array");
  ShiftLog log;
  for (std::size_t s = 0; s < steps.size(); ++s) {
    const std::string path = "steps[" + std::to_string(s) + "]";
    const json& step = steps[s];
    if (!step.is_object()) fail_at(path, "expected an object");
    ShiftStep out;
    const json& side = field(step, "side");
    out.side = side.is_null() ? kGlobalSide : side.get<int>() - 1;
    out.x = int_field(step, "x") - 1;
    out.y = int_field(step, "y") - 1;
    try {
      check_shift_arguments(g, out.side, out.x, out.y);
    } catch (const InputError& err) {
      fail_at(path, err.what());
    }
    const json& moved = field(step, "moved");
    for (std::size_t m = 0; m < moved.size(); ++m) {
      const std::string mpath = path + ".moved[" + std::to_string(m) + "]";
      const int member = int_field(moved[m], "member");
      if (member < 1) fail_at(mpath, "member labels start at 1");
      out.moved.push_back({static_cast<std::size_t>(member - 1),
                           edge_from_json(g, field(moved[m], "from"), mpath + ".from"),
                           edge_from_json(g, field(moved[m], "to"), mpath + ".to")});
    }
    log.steps.push_back(std::move(out));
  }
  return log;
}

json report_json(const VerifyReport& report) {
  json counterexamples = json::array();
  for (const Family& f : report.counterexamples) counterexamples.push_back(instance_json(f));
  json params = {{"n", report.params.n}, {"r", report.params.r}, {"k", report.params.k}};
  if (report.id == ConjectureId::degree_condition) params["d"] = report.params.d;
  return {{"schema", "rainbow-verify/1"},
          {"conjecture", to_string(report.id)},
          {"parameters", std::move(params)},
          {"mode", to_string(report.mode)},
          {"seed", report.seed},
          {"instances_checked", report.instances_checked},
          {"counterexamples", std::move(counterexamples)},
          {"elapsed_ms", report.elapsed.count()}};
}

}  // namespace rainbow
