#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "reldiv/closures.hpp"
#include "reldiv/enumerate.hpp"
#include "reldiv/errors.hpp"
#include "reldiv/graphs.hpp"
#include "reldiv/oracle.hpp"

using namespace reldiv;
using fixtures::terms;

namespace {

std::set<Term> subset(const RelDivision& div, std::uint32_t mask) {
  std::set<Term> out;
  for (std::size_t i = 0; i < div.size(); ++i) {
    if (mask >> i & 1u) out.insert(div.term(i));
  }
  return out;
}

}  // namespace

TEST(Closures, WorkedIdeals) {
  EXPECT_EQ(compliant_closure(fixtures::idealpom(), terms(3, {"xy"})).closure, terms(3, {"xy", "x^2"}));
  EXPECT_EQ(compliant_closure(fixtures::facile(), terms(3, {"xz"})).closure, terms(3, {"xz", "xy"}));
  EXPECT_EQ(compliant_closure(fixtures::idealdeg3(), terms(3, {"xy^2"})).closure.size(), 10u);
  EXPECT_EQ(compliant_closure(fixtures::tr(), terms(4, {"x^2y"})).closure,
            terms(4, {"x^2y", "x^2z", "x^2t", "yzt"}));
  EXPECT_EQ(compliant_closure(fixtures::pommaret32(), terms(3, {"xy"})).closure,
            terms(3, {"xy", "y^2", "yz", "z^2"}));
}

TEST(Closures, WorkedEscaliers) {
  EXPECT_EQ(revenant_closure(fixtures::idealpom(), terms(3, {"xz"})).closure, terms(3, {"xz", "z^2"}));
  EXPECT_EQ(revenant_closure(fixtures::facile(), terms(3, {"xz"})).closure,
            terms(3, {"xz", "x^2", "z^2"}));
  const auto peak = terms(3, {"z^2"});
  EXPECT_EQ(revenant_closure(fixtures::pommaret32(), peak).closure.size(), 6u);
}

TEST(Closures, Certification) {
  EXPECT_TRUE(ideal_from_seed(fixtures::tr(), terms(4, {"x^2y"}), 3).certified);
  EXPECT_TRUE(escalier_from_seed(fixtures::idealpom(), terms(3, {"xz"}), 3).certified);
  const auto truncated = verify_order_ideal(fixtures::idealpom(), terms(3, {"xz"}), 1);
  ASSERT_FALSE(truncated.holds);
  EXPECT_EQ(truncated.counterexample->first, parse_term(3, "xz^2"));
  EXPECT_EQ(truncated.counterexample->second, parse_term(3, "z^2"));
}

TEST(Closures, UfnarovskyClosureIsNotEnough) {
  const auto g = ufnarovsky_graph(fixtures::tr());
  const auto backward = reachable_backward(g, terms(4, {"x^2y"}));
  EXPECT_EQ(backward, terms(4, {"x^2y", "x^2z", "x^2t"}));
  const auto check = verify_ideal_equality(fixtures::tr(), backward, 3);
  ASSERT_FALSE(check.holds);
  EXPECT_EQ(*check.counterexample, parse_term(4, "x^2yzt"));
  EXPECT_TRUE(verify_ideal_equality(fixtures::tr(), backward, 1).holds);
}

TEST(Closures, WitnessesReplay) {
  for (const auto& div : {fixtures::tr(), fixtures::facile(), fixtures::idealdeg3()}) {
    for (std::size_t i = 0; i < div.size(); ++i) {
      const std::set<Term> seed = {div.term(i)};
      const auto c = compliant_closure(div, seed);
      EXPECT_EQ(replay(div, c), c.closure);
      const auto r = revenant_closure(div, seed);
      EXPECT_EQ(replay(div, r), r.closure);
    }
  }
  auto bad = compliant_closure(fixtures::tr(), terms(4, {"x^2y"}));
  bad.witnesses.back().vertex = parse_term(4, "x^3");
  EXPECT_THROW(replay(fixtures::tr(), bad), StructuralError);
}

TEST(Closures, EquivalencesOnEveryThreeByTwoDivision) {
  for (const auto& div : enumerate_divisions(3, 2, false)) {
    const auto gen = generalized_graph(div);
    const auto red = redundant_graph(div);
    for (std::uint32_t mask = 0; mask < 64; ++mask) {
      const auto seed = subset(div, mask);
      const auto comp = compliant_closure(div, seed).closure;
      const auto rev = revenant_closure(div, seed).closure;
      ASSERT_EQ(comp, brute_compliant(div, seed));
      ASSERT_EQ(comp, reachable_backward(gen, seed));
      ASSERT_EQ(comp, reachable_backward(red, seed));
      ASSERT_EQ(rev, reachable_forward(gen, seed));
      if (seed.empty()) continue;
      EXPECT_TRUE(verify_ideal_equality(div, comp, 3).holds);
      EXPECT_TRUE(verify_order_ideal(div, rev, 3).holds);
      EXPECT_EQ(compliant_closure(div, comp).closure, comp);
      EXPECT_EQ(revenant_closure(div, rev).closure, rev);
      for (const auto& drop : comp) {
        if (seed.contains(drop)) continue;
        auto truncated = comp;
        truncated.erase(drop);
        EXPECT_FALSE(verify_ideal_equality(div, truncated, 3).holds);
      }
      for (const auto& drop : rev) {
        if (seed.contains(drop)) continue;
        auto truncated = rev;
        truncated.erase(drop);
        EXPECT_FALSE(verify_order_ideal(div, truncated, 3).holds);
      }
    }
  }
}

TEST(Closures, RandomSeedsOnTr) {
  const auto div = fixtures::tr();
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::set<Term> seed;
    for (std::size_t i = 0; i < div.size(); ++i) {
      if (rng() % 5 == 0) seed.insert(div.term(i));
    }
    const auto comp = compliant_closure(div, seed).closure;
    EXPECT_EQ(comp, brute_compliant(div, seed));
    if (!seed.empty()) EXPECT_TRUE(verify_ideal_equality(div, comp, 3).holds);
  }
}

TEST(Closures, BorelFixed) {
  EXPECT_FALSE(is_borel_fixed_slice(terms(3, {"xy", "y^2", "yz", "z^2"}), 3));
  for (int n = 1; n <= 4; ++n) {
    for (int d = 0; d <= 3; ++d) {
      const auto all = enumerate_terms(n, d);
      EXPECT_TRUE(is_borel_fixed_slice({all.begin(), all.end()}, n));
    }
  }
  EXPECT_TRUE(is_borel_fixed_slice(terms(3, {"z^2"}), 3));
  EXPECT_TRUE(is_borel_fixed_slice(terms(3, {"z^2", "yz", "y^2", "xz"}), 3));
  EXPECT_THROW(is_borel_fixed_slice(terms(3, {"z", "z^2"}), 3), DomainError);
}

TEST(Closures, Errors) {
  EXPECT_THROW(compliant_closure(fixtures::noncont(), {}), InvalidDivisionError);
  EXPECT_THROW(compliant_closure(fixtures::facile(), terms(3, {"xyz"})), LookupError);
  EXPECT_TRUE(compliant_closure(fixtures::facile(), {}).closure.empty());
}
