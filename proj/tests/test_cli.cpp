#include <gtest/gtest.h>

#include <json.hpp>

#include "cli_runner.hpp"

using namespace tint::testing;
using json = nlohmann::json;

TEST(Cli, TauOnNode) {
  CliRun r = run_cli("tau --ring " + ring_path("node_p2"));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  json doc = json::parse(r.out);
  EXPECT_EQ(doc["ideal"], json({"x", "y"}));
  EXPECT_EQ(doc["stabilized_at"], 2);
  EXPECT_EQ(doc["test_element"], "x+y");
  EXPECT_TRUE(doc.contains("trace"));
  EXPECT_TRUE(doc.contains("checks"));
}

TEST(Cli, OutputIsByteStable) {
  CliRun a = run_cli("tau --ring " + ring_path("cusp_p3"));
  CliRun b = run_cli("tau --ring " + ring_path("cusp_p3"));
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, StronglyFRegularQuadric) {
  CliRun r = run_cli("sfr --ring " + ring_path("quadric_p3"));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["strongly_f_regular"], true);
}

TEST(Cli, ZerodivisorTestElementExitsTwo) {
  CliRun r = run_cli("tau --ring " + ring_path("node_p2") + " --test-element x");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("x is a zerodivisor"), std::string::npos);
}

TEST(Cli, UnderCapExitsThreeWithTrace) {
  CliRun r = run_cli("tau --ring " + ring_path("cusp_p2") + " --emax 1");
  EXPECT_EQ(r.exit_code, 3);
  json doc = json::parse(r.out);
  EXPECT_EQ(doc["stabilized_at"], "NOT_STABILIZED");
  EXPECT_EQ(doc["trace"].size(), 2u);
  CliRun v = run_cli("verify --ring " + ring_path("cusp_p2") + " --emax 1");
  EXPECT_EQ(v.exit_code, 3);
}

TEST(Cli, ParseAndUsageErrorsExitOne) {
  EXPECT_EQ(run_cli("tau").exit_code, 1);
  EXPECT_EQ(run_cli("frobnicate").exit_code, 1);
  EXPECT_EQ(run_cli("verify bogus").exit_code, 1);
  EXPECT_EQ(run_cli("tau --ring /nonexistent/none.ring").exit_code, 1);
  auto bad = std::filesystem::temp_directory_path() / "tint_bad_p4.ring";
  {
    std::ofstream out(bad);
    out << "p = 4\nvars = x\nI = x\n";
  }
  CliRun r = run_cli("tau --ring '" + bad.string() + "'");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find("line 1, column 5: p must be prime"), std::string::npos);
  std::filesystem::remove(bad);
}

TEST(Cli, UnsupportedConductorExitsTwo) {
  EXPECT_EQ(run_cli("conductor --ring " + ring_path("quadric_p3")).exit_code, 2);
  CliRun r = run_cli("conductor --ring " + ring_path("quadric_p3") + " --module-ideal 1");
  EXPECT_EQ(r.exit_code, 0) << r.err;
}

TEST(Cli, Subcommands) {
  CliRun chain = run_cli("chain --ring " + ring_path("cusp_p2"));
  ASSERT_EQ(chain.exit_code, 0) << chain.err;
  EXPECT_EQ(json::parse(chain.out)["trace"][0]["step"], 0);
  CliRun fpure = run_cli("fpure --ring " + ring_path("cusp_p2"));
  EXPECT_EQ(json::parse(fpure.out)["f_pure"], false);
  CliRun interior = run_cli("interior --ring " + ring_path("node_p3") + " --module-ideal 'x^2;y'");
  ASSERT_EQ(interior.exit_code, 0) << interior.err;
  CliRun cond = run_cli("conductor --ring " + ring_path("cusp_p5"));
  ASSERT_EQ(cond.exit_code, 0) << cond.err;
  EXPECT_EQ(json::parse(cond.out)["ideal"], json({"x", "y"}));
  CliRun transform = run_cli("transform --ring " + ring_path("semigroup345_p2"));
  ASSERT_EQ(transform.exit_code, 0) << transform.err;
  CliRun pretty = run_cli("tau --ring " + ring_path("node_p2") + " --pretty");
  EXPECT_EQ(pretty.exit_code, 0);
  EXPECT_NE(pretty.out.find("x"), std::string::npos);
}

TEST(Cli, VerifySuite) {
  CliRun r = run_cli("verify");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  json doc = json::parse(r.out);
  EXPECT_EQ(doc["suite"], "paper");
  for (const auto& c : doc["checks"]) EXPECT_NE(c["verdict"], "FAIL") << c["name"];
}
