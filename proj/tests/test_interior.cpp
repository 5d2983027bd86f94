#include <gtest/gtest.h>

#include "support.hpp"

using namespace tint;
using namespace tint::testing;

TEST(InteriorChunk, Examples) {
  RingPresentation node = bundled("node_p2");
  InteriorQuery q{node, std::nullopt, node.parse("x + y"), 0, 4, 2};
  EXPECT_TRUE(same_in_ring(interior_chunk(q, 1, 1), ideal(node, {"x", "y"}), node));

  RingPresentation line = bundled("regular_x_p2");
  InteriorQuery ql{line, std::nullopt, line.parse("x"), 0, 4, 2};
  EXPECT_TRUE(interior_chunk(ql, 1, 1).is_unit());

  InteriorQuery bad{node, std::nullopt, Polynomial::constant(node.ambient(), 0), 0, 4, 2};
  EXPECT_THROW(interior_chunk(bad, 1, 1), PreconditionError);
}

TEST(TightInterior, NodeStabilizesAtTwo) {
  RingPresentation node = bundled("node_p2");
  TauResult r = tight_interior({node, std::nullopt, node.parse("x + y"), 0, 4, 2});
  ASSERT_TRUE(r.stabilized());
  EXPECT_LE(*r.stabilized_at, 2u);
  EXPECT_TRUE(same_in_ring(r.ideal, ideal(node, {"x", "y"}), node));
  EXPECT_TRUE(same_in_ring(r.ideal, sum_of_annihilators(node), node));
  for (std::size_t i = 1; i < r.partial_sums.size(); ++i) {
    EXPECT_TRUE(r.partial_sums[i].second.contains(r.partial_sums[i - 1].second));
  }
}

TEST(TightInterior, CuspWithX) {
  RingPresentation cusp = bundled("cusp_p5");
  TauResult r = tight_interior({cusp, std::nullopt, cusp.parse("x"), 0, 4, 2});
  ASSERT_TRUE(r.stabilized());
  EXPECT_TRUE(same_in_ring(r.ideal, ideal(cusp, {"x", "y"}), cusp));
}

TEST(TightInterior, RegularWithUnit) {
  RingPresentation plane = bundled("regular_xy_p3");
  TauResult r = tight_interior({plane, std::nullopt, plane.parse("1"), 0, 4, 2});
  ASSERT_TRUE(r.stabilized());
  EXPECT_TRUE(r.ideal.is_unit());
}

TEST(TightInterior, NotStabilizedReportsTrace) {
  RingPresentation cusp = bundled("cusp_p2");
  TauResult r = big_test_ideal(cusp, std::nullopt, 1, 2);
  EXPECT_FALSE(r.stabilized());
  EXPECT_EQ(r.partial_sums.size(), 2u);
  EXPECT_THROW(stable_big_test_ideal(cusp, 1), NotStabilizedError);
}

TEST(TightInterior, RejectsZerodivisor) {
  RingPresentation node = bundled("node_p2");
  try {
    big_test_ideal(node, node.parse("x"));
    FAIL() << "zerodivisor accepted";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("x is a zerodivisor"), std::string::npos);
  }
}

TEST(BigTestIdeal, Examples) {
  EXPECT_EQ(stable_big_test_ideal(bundled("node_p2")).canonical_strings(),
            (std::vector<std::string>{"x", "y"}));
  RingPresentation plane7 = make_presentation(7, {"x", "y"}, {});
  EXPECT_TRUE(stable_big_test_ideal(plane7).is_unit());
  EXPECT_TRUE(stable_big_test_ideal(bundled("quadric_p3")).is_unit());
}

TEST(FindTestElement, Examples) {
  RingPresentation cusp = bundled("cusp_p5");
  EXPECT_EQ(find_test_element(cusp), cusp.parse("2*y"));
  RingPresentation node = bundled("node_p2");
  EXPECT_EQ(find_test_element(node), node.parse("x + y"));
  EXPECT_TRUE(is_nonzerodivisor(find_test_element(node), node));
  RingPresentation plane = bundled("regular_xy_p2");
  EXPECT_EQ(find_test_element(plane), plane.parse("1"));
}

TEST(IsTestElement, Examples) {
  RingPresentation node = bundled("node_p2");
  EXPECT_TRUE(is_test_element(node.parse("x + y"), node));
  EXPECT_FALSE(is_test_element(node.parse("x"), node));
  RingPresentation plane = bundled("regular_xy_p2");
  EXPECT_TRUE(is_test_element(plane.parse("1"), plane));
}

TEST(StronglyFRegular, Examples) {
  EXPECT_TRUE(is_strongly_f_regular(bundled("quadric_p3")));
  EXPECT_TRUE(is_strongly_f_regular(bundled("quadric_p5")));
  EXPECT_FALSE(is_strongly_f_regular(bundled("node_p2")));
  EXPECT_TRUE(is_strongly_f_regular(bundled("regular_x_p5")));
  EXPECT_TRUE(is_strongly_f_regular(bundled("regular_xy_p3")));
}

TEST(Chain, Examples) {
  RingPresentation node = bundled("node_p2");
  ChainTrace c1 = blickle_chain_down(node.unit_ideal(), node, 2);
  ASSERT_TRUE(c1.stabilized);
  for (const Ideal& step : c1.steps) EXPECT_TRUE(node.ideal_of(step).is_unit());

  RingPresentation cusp = bundled("cusp_p2");
  ChainTrace c2 = blickle_chain_down(cusp.unit_ideal(), cusp, 2);
  ASSERT_TRUE(c2.stabilized);
  EXPECT_TRUE(c2.descending);
  ASSERT_GE(c2.steps.size(), 3u);
  EXPECT_FALSE(same_in_ring(c2.steps[0], c2.steps[1], cusp));
  EXPECT_TRUE(same_in_ring(c2.steps[c2.steps.size() - 1], c2.steps[c2.steps.size() - 2], cusp));
  EXPECT_TRUE(cusp.ideal_of(c2.fixed_point).contains(stable_big_test_ideal(cusp)));

  ChainTrace c3 = blickle_chain_down(Ideal::zero(node.ambient()), node, 2);
  ASSERT_TRUE(c3.stabilized);
  EXPECT_TRUE(node.ideal_of(c3.fixed_point) == node.defining_ideal());
}

TEST(Compatibility, Examples) {
  for (const std::string name : {"node_p2", "node_p5", "cusp_p3", "quadric_p3", "semigroup345_p2",
                                 "stanley_reisner_xy_xz_p3"}) {
    RingPresentation r = bundled(name);
    Compatibility c = compatibility_check(stable_big_test_ideal(r), r, 2);
    EXPECT_TRUE(c.compatible) << name;
    EXPECT_TRUE(c.fixed) << name;
  }
  RingPresentation node = bundled("node_p3");
  Compatibility unit = compatibility_check(node.unit_ideal(), node, 2);
  EXPECT_TRUE(unit.compatible && unit.fixed);
  Compatibility zero = compatibility_check(Ideal::zero(node.ambient()), node, 2);
  EXPECT_TRUE(zero.compatible && zero.fixed);
}

TEST(Conductor, Methods) {
  RingPresentation node = bundled("node_p2");
  EXPECT_TRUE(same_in_ring(conductor(node, ConductorMethod::StanleyReisner), ideal(node, {"x", "y"}), node));
  RingPresentation cusp = bundled("cusp_p5");
  EXPECT_TRUE(same_in_ring(conductor(cusp, ConductorMethod::Semigroup), ideal(cusp, {"x", "y"}), cusp));
  RingPresentation line = make_presentation(3, {"x"}, {});
  line = RingPresentation(line.ambient(), {}, std::nullopt, {1});
  EXPECT_TRUE(conductor(line, ConductorMethod::Semigroup).is_unit());
  EXPECT_EQ(parse_conductor_method("stanley_reisner"), ConductorMethod::StanleyReisner);
  EXPECT_THROW(parse_conductor_method("other"), PreconditionError);
  EXPECT_THROW(conductor(cusp, ConductorMethod::StanleyReisner), UnsupportedInputError);
}

TEST(Semigroup, GapsAgainstEnumeration) {
  for (const std::vector<std::uint32_t>& a : std::vector<std::vector<std::uint32_t>>{
           {2, 3}, {3, 4, 5}, {1}, {3, 5}, {4, 6, 9}, {5, 7, 11}}) {
    SemigroupData d = analyze_semigroup(a);
    std::vector<std::uint32_t> gaps = semigroup_gaps_by_enumeration(a, 200);
    EXPECT_EQ(d.gaps, gaps);
    std::int64_t frob = gaps.empty() ? -1 : static_cast<std::int64_t>(gaps.back());
    EXPECT_EQ(d.frobenius_number, frob);
    EXPECT_EQ(d.conductor_exponent, static_cast<std::uint32_t>(frob + 1));
  }
  SemigroupData one = analyze_semigroup({1});
  EXPECT_TRUE(one.contains(0) && one.contains(1) && one.contains(7));
  EXPECT_FALSE(analyze_semigroup({2, 3}).contains(1));
  EXPECT_THROW(analyze_semigroup({2, 4}), PreconditionError);
}

TEST(ConductorIdentities, Examples) {
  for (const std::string name : {"cusp_p5", "node_p2", "semigroup345_p2"}) {
    std::vector<CheckRecord> recs = conductor_identities_check(bundled(name));
    ASSERT_EQ(recs.size(), 3u) << name;
    for (const CheckRecord& r : recs) EXPECT_EQ(r.verdict, Verdict::Pass) << name << " " << r.name;
  }
  RingPresentation plane = bundled("regular_xy_p2");
  auto recs = conductor_identities_check(plane, plane.unit_ideal());
  for (const CheckRecord& r : recs) EXPECT_NE(r.verdict, Verdict::Fail) << r.name;
}

TEST(FiniteTransform, Examples) {
  CheckRecord cusp = finite_transform_check(bundled("cusp_p5"));
  EXPECT_EQ(cusp.verdict, Verdict::Pass);
  EXPECT_EQ(cusp.lhs, (std::vector<std::string>{"x", "y"}));
  CheckRecord sg = finite_transform_check(bundled("semigroup345_p2"));
  EXPECT_EQ(sg.verdict, Verdict::Pass);
  EXPECT_EQ(sg.lhs, (std::vector<std::string>{"x", "y", "z"}));
  RingPresentation line(make_ring(2, {"x"}), {}, std::nullopt, {1});
  CheckRecord l = finite_transform_check(line);
  EXPECT_EQ(l.verdict, Verdict::Pass);
  EXPECT_EQ(l.lhs, std::vector<std::string>{"1"});
}

TEST(MinimalPrimesDecomposition, Examples) {
  for (const std::string name : {"node_p2", "node_p3", "stanley_reisner_xy_xz_p3", "cusp_p3"}) {
    EXPECT_EQ(minimal_primes_decomposition_check(bundled(name)).verdict, Verdict::Pass) << name;
  }
}

TEST(NilradicalReduction, Examples) {
  for (const std::string name : {"nonreduced_x2_p2", "nonreduced_x2y_p3"}) {
    EXPECT_EQ(nilradical_reduction_check(bundled(name)).verdict, Verdict::Pass) << name;
  }
  CheckRecord radical = nilradical_reduction_check(bundled("node_p2"));
  EXPECT_EQ(radical.verdict, Verdict::Pass);
  EXPECT_NE(radical.note.find("trivially equal"), std::string::npos);
}

TEST(Localization, Examples) {
  RingPresentation node = bundled("node_p2");
  for (const std::string f : {"x + y + 1", "x + y"}) {
    EXPECT_EQ(localization_commutes_check(node, node.parse(f)).verdict, Verdict::Pass) << f;
  }
  RingPresentation cusp = bundled("cusp_p3");
  Localization lx = localize(cusp, cusp.parse("x"));
  EXPECT_TRUE(stable_big_test_ideal(lx.ring).is_unit());
  EXPECT_EQ(localization_commutes_check(cusp, cusp.parse("x")).verdict, Verdict::Pass);
  RingPresentation plane = bundled("regular_xy_p3");
  EXPECT_EQ(localization_commutes_check(plane, plane.parse("x*y + 1")).verdict, Verdict::Pass);
}
