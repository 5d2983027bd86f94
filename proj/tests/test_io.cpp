#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "tint/report.hpp"
#include "tint/ringspec.hpp"
#include "tint/verify.hpp"

using namespace tint;
using namespace tint::testing;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t error_line(const std::string& text) {
  try {
    parse_ring_spec(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(RingSpec, ParsesCusp) {
  RingSpec s = parse_ring_spec("p = 5\nvars = x, y\nI = y^2 - x^3");
  EXPECT_EQ(s.p, 5u);
  EXPECT_EQ(s.vars, (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(s.generators, std::vector<std::string>{"4*x^3+y^2"});
  EXPECT_EQ(parse_ring_spec("p = 5\nvars = x, y\nI = y^2 - x^3; x*y - 1").generators.size(), 2u);
}

TEST(RingSpec, Errors) {
  try {
    parse_ring_spec("p = 4\nvars = x\nI = x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("p must be prime"), std::string::npos);
    EXPECT_EQ(e.line(), 1u);
  }
  EXPECT_EQ(error_line("p = 3\nvars = x\nI = x\nfoo = 1"), 4u);
  EXPECT_EQ(error_line("p = 3\nvars = x\nvars = y\nI = x"), 3u);
  EXPECT_EQ(error_line("p = 3\nvars = x\nI = y"), 3u);
  EXPECT_NE(error_line("p = 3\nI = x"), 0u);
  EXPECT_EQ(error_line("p = 3\nvars = x\nI = x\nreduced = maybe"), 4u);
  EXPECT_EQ(error_line("p = 3\nvars = x\nI = x\nminimal_primes = [x"), 4u);
  EXPECT_EQ(error_line("p = 3\nvars = 1x\nI = x"), 2u);
  EXPECT_NE(error_line("p = 3\nvars = a, b, c, d, e, f, g, h, i\nI = a"), 0u);
  EXPECT_EQ(error_line("p = 3\nvars = x\nI = x\ntest_element = x +"), 4u);
  EXPECT_EQ(error_line("# comment only\np = 3 # trailing\nvars = x\nI = x^2"), 0u);
}

TEST(RingSpec, RoundTripBundledFiles) {
  std::filesystem::path dir(TINT_RINGS_DIR);
  std::size_t seen = 0;
  for (const CorpusEntry& entry : bundled_corpus()) {
    std::string text = slurp(dir / (entry.name + ".ring"));
    RingSpec from_file = parse_ring_spec(text);
    EXPECT_EQ(from_file, entry.spec()) << entry.name;
    EXPECT_EQ(parse_ring_spec(render_ring_spec(from_file)), from_file) << entry.name;
    EXPECT_EQ(load_ring_file((dir / (entry.name + ".ring")).string()).name(), entry.name);
    ++seen;
  }
  EXPECT_EQ(seen, 18u);
}

TEST(Report, JsonIsByteStable) {
  RingPresentation node = bundled("node_p3");
  std::string a = result_document(big_test_ideal(node)).dump();
  std::string b = result_document(big_test_ideal(bundled("node_p3"))).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("{\"ideal\":[\"x\",\"y\"],\"stabilized_at\":"), 0u);
  SuiteResult s1 = run_identity_suite(kDefaultEMax);
  SuiteResult s2 = run_identity_suite(kDefaultEMax);
  EXPECT_EQ(checks_document(s1.checks).dump(), checks_document(s2.checks).dump());
}

TEST(Report, CheckRecords) {
  RingPtr s = make_ring(2, {"x", "y"});
  CheckRecord eq = compare_ideals("eq", ideal(s, {"y", "x + y"}), ideal(s, {"x", "y"}));
  EXPECT_EQ(eq.verdict, Verdict::Pass);
  CheckRecord sub = compare_containment("sub", ideal(s, {"x"}), ideal(s, {"x", "y"}));
  EXPECT_EQ(sub.verdict, Verdict::Pass);
  CheckRecord bad = compare_containment("bad", ideal(s, {"x", "y"}), ideal(s, {"x"}));
  EXPECT_EQ(bad.verdict, Verdict::Fail);
  EXPECT_EQ(to_json(eq).dump(),
            "{\"name\":\"eq\",\"verdict\":\"PASS\",\"lhs\":[\"x\",\"y\"],\"rhs\":[\"x\",\"y\"]}");
  EXPECT_EQ(to_string(Verdict::NotStabilized), "NOT_STABILIZED");
}

TEST(Verify, IdentitySuitePasses) {
  SuiteResult r = run_identity_suite(kDefaultEMax);
  EXPECT_EQ(r.exit_code, 0);
  for (const CheckRecord& c : r.checks) EXPECT_NE(c.verdict, Verdict::Fail) << c.name << " " << c.note;
  EXPECT_TRUE(std::is_sorted(r.checks.begin(), r.checks.end(),
                             [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; }));
  EXPECT_TRUE(is_known_suite("paper"));
  EXPECT_FALSE(is_known_suite("bogus"));
}

TEST(Verify, UnderCapOnCusp) {
  VerifyCell cell = VerifyCell::from_entry(corpus_entry("cusp_p2"));
  SuiteResult r = run_verify_suite({cell}, 1);
  EXPECT_EQ(r.exit_code, 3);
}
