#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"

using namespace linpow;

TEST(Report, BettiJsonRoundTrip) {
  auto t = graded_betti(terai_ideal(), F2());
  auto back = betti_from_json(Json::parse(betti_to_json(t).dump()));
  EXPECT_EQ(back, t);
  EXPECT_EQ(back.field(), F2());
}

TEST(Report, ConfigRoundTripAndValidation) {
  RunConfig c;
  c.fields = {kQ, F3()};
  c.kmax = 2;
  c.seed = 99;
  c.format = OutputFormat::csv;
  EXPECT_EQ(config_from_json(Json::parse(to_json(c).dump())), c);
  RunConfig bad;
  bad.fields.clear();
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = RunConfig{};
  bad.cap = 0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  EXPECT_THROW(parse_format("yaml"), std::invalid_argument);
}

TEST(Report, SuiteReportsRoundTrip) {
  RunConfig c;
  for (const char* name : {"terai", "sturmfels", "splitting"}) {
    auto r = run_suite(name, c);
    EXPECT_EQ(r.exit_code(), 0) << name;
    EXPECT_FALSE(r.checks.empty());
    EXPECT_EQ(report_from_json(Json::parse(to_json(r).dump())), r);
  }
  EXPECT_THROW(run_suite("nope", c), std::invalid_argument);
}

TEST(Report, ExitCodes) {
  Report r;
  r.add("a", true);
  EXPECT_EQ(r.exit_code(), 0);
  r.add("b", CheckStatus::inconclusive);
  EXPECT_EQ(r.exit_code(), 2);
  r.add("c", false);
  EXPECT_EQ(r.exit_code(), 1);
  std::ostringstream os;
  write_report_text(os, r);
  EXPECT_NE(os.str().find("FAIL  c"), std::string::npos);
}

TEST(Report, ScanCsv) {
  auto rows = scan_graphs(2, 4, 2, 100000, ScanKind::edge);
  std::size_t expected = 1 + 7 + 63;
  EXPECT_EQ(rows.size(), expected);
  for (const auto& r : rows) EXPECT_TRUE(r.consistent) << r.code;
  std::ostringstream os;
  write_scan_csv(os, rows);
  std::string header;
  std::istringstream in(os.str());
  std::getline(in, header);
  EXPECT_EQ(header, "graph,c,chordal_complement,linres_Q,linres_F2,lq_depth_verified");
}

TEST(Report, ProbeJson) {
  auto rows = conjecture_probe(complementary_edge_ideal(path_graph(4)), 3, {kQ, F2()}, 100000);
  for (const auto& r : rows) {
    for (auto [K, v] : r.linres) EXPECT_TRUE(v) << K.name();
    EXPECT_EQ(r.lq, SearchStatus::found);
  }
  auto j = to_json(rows);
  EXPECT_EQ(j.size(), 3U);
  EXPECT_EQ(j[2]["lq"], "found");
}
