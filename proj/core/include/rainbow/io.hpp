#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "rainbow/hall.hpp"
#include "rainbow/hypergraph.hpp"
#include "rainbow/shifting.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

inline constexpr std::string_view kResultSchema = "rainbow-result/1";

/// The on-disk instance:
///   {"kind": "partite"|"general", "r": int, "n": int,
///    "families": [[[v, ...], ...], ...]}
/// with 1-based vertex labels. Partite edges list one index per side;
/// general edges list strictly increasing vertices.
struct Instance {
  GroundSet ground;
  std::vector<std::vector<Edge>> families;  // 0-based
};

/// Throws InputError with a line/column or a field path such as
/// "families[1][0]" on malformed text, bad indices, duplicate edges or
/// wrong uniformity.
Instance parse_instance(std::string_view text);
Family to_family(const Instance& instance);
Instance to_instance(const Family& family);
Family parse_family(std::string_view text);

/// Normalized instance text: edges sorted lexicographically, one family per
/// line.
std::string format_instance(const Family& family);
nlohmann::json instance_json(const Family& family);

/// m_i / w_j for bipartite ground sets, v_i for general ones and
/// V<side>_<i> for r-partite ground sets with r != 2. All 1-based.
std::string vertex_label(const GroundSet& ground, Vertex v);
std::string edge_label(const GroundSet& ground, const Edge& e);

/// One "F_i: <edge>" line per member.
std::string matching_text(const GroundSet& ground, const RainbowMatching& m);
nlohmann::json matching_json(const RainbowMatching& m);
/// Throws InputError if the JSON is not a list of 1-based edges valid for
/// `ground`.
RainbowMatching matching_from_json(const GroundSet& ground, const nlohmann::json& j);

/// Result document for a solver run.
nlohmann::json result_json(std::string_view algorithm, const std::optional<RainbowMatching>& m);
/// The matching carried by a result document, nullopt for "none".
std::optional<RainbowMatching> parse_result(const GroundSet& ground, std::string_view text);

/// Step log in m_i / w_j notation: "R_t = {...}" and "e_t = m_p w_q" lines,
/// ending in "HALT at t=<t>" or "SUCCESS".
std::string trace_text(const AlgoTrace& trace);
nlohmann::json trace_json(const AlgoTrace& trace);

nlohmann::json shift_log_json(const GroundSet& ground, const ShiftLog& log);
ShiftLog shift_log_from_json(const GroundSet& ground, const nlohmann::json& j);

nlohmann::json report_json(const VerifyReport& report);

}  // namespace rainbow
