#include "wspan/io.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "test_oracles.hpp"
#include "wspan/generators.hpp"
#include "wspan/greedy.hpp"

namespace wspan {
namespace {

WeightedGraph parse(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in, "mem");
}

std::size_t error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return 0;
}

TEST(ReadGraphTest, CommentsAndBlankLines) {
  auto g = parse("# header next\n3 2\n\n0 1 1.5\n# edge\n1 2 2\n");
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(*g.weight(0, 1), 1.5);
}

TEST(ReadGraphTest, RoundTripGeneratorOutputs) {
  for (auto family : {Family::kGnp, Family::kGeometric, Family::kGrid, Family::kTree}) {
    for (auto model : {WeightModel::kUnit, WeightModel::kUniform, WeightModel::kExpSpread}) {
      GenSpec spec;
      spec.family = family;
      spec.n = 60;
      spec.p = 0.1;
      spec.radius = 0.25;
      spec.weights = model;
      spec.seed = 9;
      auto g = generate(spec);
      std::stringstream buf;
      write_graph(buf, g);
      EXPECT_EQ(read_graph(buf, "mem"), g);
    }
  }
}

TEST(ReadGraphTest, RoundTripArbitraryDoubles) {
  auto g = testing::make_graph(3, {{0, 1, 0.1}, {1, 2, 1.0 / 3.0}, {0, 2, 1e-300}});
  std::stringstream buf;
  write_graph(buf, g);
  EXPECT_EQ(read_graph(buf, "mem"), g);
}

TEST(ReadGraphTest, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("3 2\n0 1 1\n1 0 2\n"), 3u);          // duplicate edge
  EXPECT_EQ(error_line("3 1\n\n0 1 -2\n"), 3u);              // negative weight
  EXPECT_EQ(error_line("3 1\n0 1 0\n"), 2u);                 // zero weight
  EXPECT_EQ(error_line("3 1\n0 0 1\n"), 2u);                 // self-loop
  EXPECT_EQ(error_line("3 1\n0 5 1\n"), 2u);                 // out of range
  EXPECT_EQ(error_line("3 1\n0 1 x\n"), 2u);                 // bad number
  EXPECT_EQ(error_line("3 1\n0 1\n"), 2u);                   // missing field
  EXPECT_EQ(error_line("3\n"), 1u);                          // bad header
  EXPECT_EQ(error_line("3 2\n0 1 1\n"), 2u);                 // too few edges
  EXPECT_EQ(error_line("3 1\n0 1 1\n1 2 1\n"), 3u);          // too many edges
  EXPECT_EQ(error_line("3 1\n0 1 1 g\n"), 2u);               // tags only for emulators
  EXPECT_EQ(error_line(""), 0u);                             // empty input
}

TEST(ReadGraphTest, MessageNamesSource) {
  try {
    parse("2 1\n0 1 -1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("mem:2:", 0), 0u);
  }
}

TEST(EmulatorFormatTest, TagsRoundTrip) {
  EmulatorResult r;
  r.n = 4;
  r.edges = {{0, 1, 1.0, false}, {0, 3, 2.5, true}, {1, 2, 3.0, false}};
  std::stringstream buf;
  write_emulator(buf, r);
  auto t = read_edge_list(buf, "mem", true);
  EXPECT_EQ(t.graph, r.to_graph());
  EXPECT_EQ(t.is_virtual, (std::vector<bool>{false, true, false}));
  std::istringstream bad("2 1\n0 1 1 x\n");
  EXPECT_THROW(read_edge_list(bad, "mem", true), ParseError);
}

TEST(VertexSetTest, RoundTrip) {
  std::vector<Vertex> s{4, 1, 9};
  std::stringstream buf;
  write_vertex_set(buf, s);
  EXPECT_EQ(read_vertex_set(buf, "mem"), s);
  std::istringstream bad("1 2\n# c\n3 -4\n");
  try {
    read_vertex_set(bad, "mem");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(JsonTest, SpannerAndReportFields) {
  auto g = testing::make_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 5}});
  auto r = build_6eps_spanner(g, 1.0);
  auto j = to_json(r, g);
  for (const char* key : {"algo", "params", "n", "m_in", "m_out", "paths_bought", "phase_edge_counts"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["algo"], "6w");
  EXPECT_EQ(j["params"]["eps"], 1.0);

  auto rep = verify_additive_W(g, WeightedGraph(3), 1.0);
  auto jr = to_json(rep, 1);
  EXPECT_EQ(jr["violation_count"], 3);
  EXPECT_EQ(jr["violations"].size(), 1u);
  EXPECT_EQ(jr["violations"][0]["kind"], "unreachable");
  EXPECT_EQ(jr["violations"][0]["d_h"], "inf");
  EXPECT_EQ(jr["pass"], false);
  EXPECT_TRUE(jr.contains("minimax_check"));
}

TEST(FormatWeightTest, ShortestRoundTrip) {
  EXPECT_EQ(format_weight(1.0), "1");
  EXPECT_EQ(format_weight(0.1), "0.1");
  EXPECT_EQ(format_weight(2.5), "2.5");
}

}  // namespace
}  // namespace wspan
