#include <random>

#include <gtest/gtest.h>

#include "rainbow/errors.hpp"
#include "rainbow/extremal.hpp"
#include "rainbow/hall.hpp"
#include "rainbow/io.hpp"
#include "rainbow/oracles.hpp"
#include "rainbow/shifting.hpp"
#include "test_support.hpp"

namespace rainbow {
namespace {

std::string error_of(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

TEST(ParseInstance, PartiteExample) {
  const Family f = parse_family(R"({"kind":"partite","r":2,"n":2,"families":[[[1,1]],[[2,2]]]})");
  EXPECT_EQ(f.k(), 2U);
  EXPECT_EQ(f[0].edges(), (std::vector<Edge>{{0, 0}}));
  EXPECT_EQ(f[1].edges(), (std::vector<Edge>{{1, 1}}));
}

TEST(ParseInstance, GeneralExample) {
  const Family f = parse_family(R"({"kind":"general","n":5,"r":2,"families":[[[1,4],[2,3]]]})");
  EXPECT_FALSE(f.ground().is_partite());
  EXPECT_EQ(f[0].edges(), (std::vector<Edge>{{0, 3}, {1, 2}}));
}

TEST(ParseInstance, Diagnostics) {
  EXPECT_NE(error_of("{\"kind\": \"partite\",\n  \"r\": 2,,}").find("line 2"), std::string::npos);
  EXPECT_NE(error_of(R"({"kind":"partite","r":2,"n":2,"families":[[[1,1],[1,1]]]})")
                .find("families[0][1]"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"kind":"partite","r":2,"n":2,"families":[[[1,3]]]})")
                .find("families[0][0]"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"kind":"partite","r":2,"n":2,"families":[[[1,1],[1,1,1]]]})")
                .find("expected r=2"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"kind":"general","r":2,"n":4,"families":[[[3,1]]]})").find("increasing"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"kind":"other","r":2,"n":4,"families":[[]]})").find("kind"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"kind":"partite","r":2,"families":[[]]})").find("n"), std::string::npos);
  EXPECT_NE(error_of(R"({"kind":"partite","r":2,"n":2,"families":[]})").find("families"),
            std::string::npos);
  EXPECT_NE(error_of("[1,2]").find("object"), std::string::npos);
}

TEST(FormatInstance, RoundTripNormalizes) {
  const std::string messy = R"({"kind":"partite","r":2,"n":3,"families":[[[3,1],[1,2],[1,1]]]})";
  const Family f = parse_family(messy);
  const std::string text = format_instance(f);
  EXPECT_EQ(text,
            "{\n  \"kind\": \"partite\",\n  \"r\": 2,\n  \"n\": 3,\n  \"families\": [\n"
            "    [[1,1],[1,2],[3,1]]\n  ]\n}\n");
  EXPECT_EQ(parse_family(text), f);
  EXPECT_EQ(format_instance(parse_family(text)), text);
}

TEST(FormatInstance, RoundTripCorpus) {
  std::mt19937_64 rng(3);
  const std::vector<GroundSet> grounds{GroundSet::partite(2, 4), GroundSet::partite(3, 3),
                                       GroundSet::general(2, 6), GroundSet::general(4, 7)};
  for (int trial = 0; trial < 100; ++trial) {
    const GroundSet& g = grounds[static_cast<std::size_t>(trial) % grounds.size()];
    const Family f = testing::random_family(g, 1 + static_cast<std::size_t>(trial % 3), 0,
                                            g.universe_size(), rng);
    EXPECT_EQ(parse_family(format_instance(f)), f);
    EXPECT_EQ(parse_family(instance_json(f).dump()), f);
  }
}

TEST(Labels, PaperNotation) {
  const GroundSet b = GroundSet::partite(2, 3);
  EXPECT_EQ(matching_text(b, RainbowMatching{{Edge{0, 0}}}), "F_1: m_1 w_1\n");
  EXPECT_EQ(edge_label(GroundSet::general(2, 5), Edge{0, 3}), "v_1 v_4");
  EXPECT_EQ(edge_label(GroundSet::partite(3, 2), Edge{0, 1, 0}), "V1_1 V2_2 V3_1");
}

TEST(ResultJson, RoundTrip) {
  const GroundSet g = GroundSet::partite(2, 3);
  const RainbowMatching m{{Edge{0, 2}, Edge{1, 0}}};
  const std::string found = result_json("oracle", m).dump();
  EXPECT_EQ(parse_result(g, found), m);
  const auto doc = nlohmann::json::parse(found);
  EXPECT_EQ(doc["schema"], std::string(kResultSchema));
  EXPECT_EQ(doc["matching"], nlohmann::json::parse("[[1,3],[2,1]]"));
  EXPECT_FALSE(parse_result(g, result_json("oracle", std::nullopt).dump()));
  EXPECT_THROW(parse_result(g, R"({"schema":"other"})"), InputError);
}

TEST(ShiftLogJson, RoundTrip) {
  std::mt19937_64 rng(12);
  for (const GroundSet& g : {GroundSet::partite(2, 3), GroundSet::general(3, 6)}) {
    const Family f = testing::random_family(g, 2, 1, g.universe_size(), rng);
    const ShiftedFamily s = shifted_closure(f);
    const ShiftLog back = shift_log_from_json(g, shift_log_json(g, s.log));
    EXPECT_EQ(back, s.log);
    EXPECT_EQ(replay(f, back), s.family);
  }
}

TEST(TraceText, StealExample) {
  const std::string text = trace_text(hall_size_algorithm(steal_family(3, 6)));
  EXPECT_EQ(text.substr(0, text.find('\n')), "R_1 = {}");
  EXPECT_NE(text.find("e_1 = m_3 w_1"), std::string::npos);
  EXPECT_NE(text.find("R_2 = {w_1}"), std::string::npos);
  EXPECT_NE(text.find("e_2 = m_1 w_6"), std::string::npos);
  EXPECT_NE(text.find("R_3 = {m_1, w_1}"), std::string::npos);
  EXPECT_NE(text.find("e_3 = m_2 w_5"), std::string::npos);
  EXPECT_NE(text.find("R_4 = {m_1, m_2, m_3, w_1}"), std::string::npos);
  EXPECT_TRUE(text.ends_with("HALT at t=4\n"));
}

TEST(TraceText, SuccessEnding) {
  const GroundSet g = GroundSet::partite(2, 2);
  const std::string text = trace_text(hall_size_algorithm(Family(g, {Hypergraph(g, {Edge{0, 0}})})));
  EXPECT_TRUE(text.ends_with("R_2 = {m_1, w_1}\nSUCCESS\n"));
}

TEST(TraceJson, Outcome) {
  const auto j = trace_json(hall_size_algorithm(steal_family(3, 6)));
  EXPECT_EQ(j["outcome"]["status"], "halt");
  EXPECT_EQ(j["outcome"]["t"], 4);
  EXPECT_EQ(j["steps"].size(), 3U);
  EXPECT_EQ(j["steps"][0]["edge"], nlohmann::json::parse("[3,1]"));
}

}  // namespace
}  // namespace rainbow
