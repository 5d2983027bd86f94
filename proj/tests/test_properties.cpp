#include <gtest/gtest.h>

#include "support.hpp"

using namespace tint;
using namespace tint::testing;

class RingProperties : public ::testing::TestWithParam<std::string> {};

TEST_P(RingProperties, HundredRandomCases) {
  const CorpusEntry& entry = corpus_entry(GetParam());
  RingPresentation r = entry.ring();
  PropertyReport rep = run_property_cases(r, 100, 20240601u, property_conductor(entry, r));
  EXPECT_EQ(rep.cases, 100u);
  for (const std::string& f : rep.failures) ADD_FAILURE() << f;
}

INSTANTIATE_TEST_SUITE_P(Bundled, RingProperties, ::testing::ValuesIn(property_rings()),
                         [](const auto& info) { return info.param; });

namespace {

struct Sampler {
  RingPtr s;
  std::mt19937 rng;
  Polynomial next(std::uint32_t degree = 6) { return random_polynomial(s, rng, degree, 5, true); }
};

}  // namespace

TEST(CartierAlgebra, TraceMatchesExponentRule) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    Sampler g{make_ring(p, {"x", "y", "z"}), std::mt19937(p)};
    for (int i = 0; i < 100; ++i) {
      Polynomial f = g.next(12);
      for (unsigned e : {1u, 2u}) EXPECT_EQ(cartier_trace(f, e), trace_by_exponents(f, e));
    }
  }
}

TEST(CartierAlgebra, LinearityAndFrobeniusTwist) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    Sampler g{make_ring(p, {"x", "y"}), std::mt19937(10 + p)};
    for (int i = 0; i < 100; ++i) {
      Polynomial a = g.next(), b = g.next(), h = g.next(2);
      EXPECT_EQ(cartier_trace(a + b, 1), cartier_trace(a, 1) + cartier_trace(b, 1));
      EXPECT_EQ(cartier_trace(frobenius_power(h, 1) * a, 1), h * cartier_trace(a, 1));
    }
  }
}

TEST(CartierAlgebra, Composition) {
  for (std::uint32_t p : {2u, 3u}) {
    Sampler g{make_ring(p, {"x", "y"}), std::mt19937(20 + p)};
    for (int i = 0; i < 100; ++i) {
      Polynomial f = g.next(20);
      EXPECT_EQ(cartier_trace(cartier_trace(f, 1), 1), cartier_trace(f, 2));
    }
  }
}

TEST(CartierAlgebra, Reconstruction) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    Sampler g{make_ring(p, {"x", "y", "z"}), std::mt19937(30 + p)};
    for (int i = 0; i < 100; ++i) {
      Polynomial f = g.next(10);
      for (unsigned e : {1u, 2u}) EXPECT_EQ(reassemble(pe_components(f, e), g.s), f);
    }
  }
}

TEST(RingAxioms, Commutativity) {
  Sampler g{make_ring(5, {"x", "y", "z"}), std::mt19937(41)};
  for (int i = 0; i < 100; ++i) {
    Polynomial a = g.next(3), b = g.next(3), c = g.next(3);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(RingAxioms, BracketIndependentOfGenerators) {
  for (std::uint32_t p : {2u, 3u}) {
    Sampler g{make_ring(p, {"x", "y"}), std::mt19937(50 + p)};
    for (int i = 0; i < 100; ++i) {
      Polynomial a = g.next(2), b = g.next(2), u = g.next(1);
      Ideal one(g.s, {a, b});
      Ideal other(g.s, {a, b + u * a, a + b});
      ASSERT_EQ(one, other);
      EXPECT_EQ(frobenius_bracket(one, 1), frobenius_bracket(other, 1));
    }
  }
}

TEST(RingAxioms, GroebnerMembershipAgainstLinearAlgebra) {
  Sampler g{make_ring(3, {"x", "y", "z"}), std::mt19937(61)};
  for (int i = 0; i < 100; ++i) {
    std::vector<Polynomial> gens{g.next(2), g.next(2)};
    Ideal j(g.s, gens);
    Polynomial f = g.next(1) * gens[0] + g.next(1) * gens[1];
    EXPECT_TRUE(j.contains(f));
    EXPECT_TRUE(truncated_member(f, gens, 3));
    Polynomial h = g.next(2);
    if (truncated_member(h, gens, 2)) {
      EXPECT_TRUE(j.contains(h));
    }
  }
}
