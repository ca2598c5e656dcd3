#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "indep/axioms.hpp"
#include "indep/error.hpp"
#include "indep/operators.hpp"

using namespace indep;
using fixtures::S;

namespace {

std::vector<SitePtr> sites() {
  return {fixtures::s0(), fixtures::s1(), fixtures::s1_swap(),
          fixtures::site(3, {0, 1, 2, 3, 4, 5, 6, 7}, {{1, 2, 0}, {1, 0, 2}}), fixtures::site(3, {0, 1, 3, 7}),
          fixtures::site(3, {0, 7}, {{1, 2, 0}, {1, 0, 2}})};
}

// Brute-force statement of a few axioms, for cross-checking the scanning checkers.
bool right_mon(const TernaryRelation& r) {
  bool ok = true;
  fixtures::for_each_triple(r.site(), [&](Subset a, Subset c, Subset b) {
    for (std::uint32_t d = 0; d < r.site().subset_count(); ++d)
      if (r(a, c, b | Subset(d)) && !r(a, c, b)) ok = false;
  });
  return ok;
}

bool bmon(const TernaryRelation& r) {
  bool ok = true;
  fixtures::for_each_triple(r.site(), [&](Subset a, Subset c, Subset b) {
    if (!c.subset_of(b)) return;
    for (std::uint32_t d = 0; d < r.site().subset_count(); ++d)
      if (b.subset_of(Subset(d)) && r(a, c, Subset(d)) && !r(a, b, Subset(d))) ok = false;
  });
  return ok;
}

bool left_nor(const TernaryRelation& r) {
  bool ok = true;
  fixtures::for_each_triple(r.site(), [&](Subset a, Subset c, Subset b) {
    if (r(a, c, b) && !r(a | c, c, b)) ok = false;
  });
  return ok;
}

bool ext(const TernaryRelation& r) {
  const Site& s = r.site();
  bool ok = true;
  fixtures::for_each_triple(s, [&](Subset a, Subset c, Subset b) {
    if (!r(a, c, b)) return;
    for (std::uint32_t d = 0; d < s.subset_count(); ++d) {
      if (!b.subset_of(Subset(d))) continue;
      bool found = false;
      for (auto a2 : s.orbit(a, b | c)) found = found || r(a2, c, Subset(d));
      if (!found) ok = false;
    }
  });
  return ok;
}

}  // namespace

TEST(AxiomId, ParseAndSides) {
  EXPECT_EQ(AxiomId::parse("right NOR"), right(Axiom::NOR));
  EXPECT_EQ(AxiomId::parse("left MON"), left(Axiom::MON));
  EXPECT_EQ(AxiomId::parse("BMON"), AxiomId(Axiom::BMON));
  EXPECT_EQ(right(Axiom::CLO_BC).to_string(), "right CLO_BC");
  EXPECT_THROW(AxiomId(Axiom::EX, Side::Left), Error);
  EXPECT_THROW(AxiomId(Axiom::NOR), Error);
  EXPECT_THROW(AxiomId::parse("sideways NOR"), Error);
  EXPECT_EQ(profile_order().size(), 22u);
}

TEST(Axioms, FullRelationOnS0) {
  const auto full = builtin_full(fixtures::s0());
  const auto prof = axiom_profile(full);
  for (const auto& [id, v] : prof.rows) {
    if (id.axiom() == Axiom::AREF) {
      ASSERT_FALSE(v.holds);
      EXPECT_EQ(v.witness->describe(), "A={0} C={}");
      EXPECT_TRUE(replay(*v.witness, full));
    } else {
      EXPECT_TRUE(v.holds) << id.to_string();
    }
  }
  EXPECT_EQ(prof.at(AxiomId(Axiom::FIN)).note, "vacuous");
  EXPECT_EQ(prof.at(AxiomId(Axiom::LOC)).note, "vacuous");
}

TEST(Axioms, AIndepOnS1) {
  const auto ai = builtin_a_indep(fixtures::s1());
  EXPECT_TRUE(check_axiom(ai, AxiomId(Axiom::EX)).holds);
  EXPECT_TRUE(check_axiom(ai, AxiomId(Axiom::SYM)).holds);
}

TEST(Axioms, BmonWitnessForEvenC) {
  const auto r = fixtures::c_even(fixtures::s0());
  const Verdict v = check_axiom(r, AxiomId(Axiom::BMON));
  ASSERT_FALSE(v.holds);
  // Least violating tuple: r(∅,∅,{0}) but not r(∅,{0},{0}).
  EXPECT_EQ(v.witness->describe(), "A={} C={} B={0} D={0}");
  EXPECT_TRUE(replay(*v.witness, r));
  // The tuple with D = {0,1} is a violation too.
  EXPECT_TRUE(r(Subset(), Subset(), S({0, 1})));
  EXPECT_FALSE(r(Subset(), S({0}), S({0, 1})));
}

TEST(Axioms, OperatorOutputsHaveTheirAxioms) {
  for (const auto& site : sites())
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto r = random_invariant_relation(site, seed, 0.5);
      EXPECT_TRUE(check_axiom(monotonise_m(r), AxiomId(Axiom::BMON)).holds);
      const auto c = closure_c(r);
      EXPECT_TRUE(check_axiom(c, right(Axiom::NOR)).holds);
      EXPECT_TRUE(check_axiom(c, right(Axiom::CLO_BC)).holds);
    }
}

TEST(Axioms, AgreeWithBruteForce) {
  for (const auto& site : sites())
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      const auto r = random_invariant_relation(site, seed, 0.9);
      for (const auto& x : {r, monotone_normal_core(r), star(monotone_normal_core(r))}) {
        ASSERT_EQ(check_axiom(x, right(Axiom::MON)).holds, right_mon(x));
        ASSERT_EQ(check_axiom(x, AxiomId(Axiom::BMON)).holds, bmon(x));
        ASSERT_EQ(check_axiom(x, left(Axiom::NOR)).holds, left_nor(x));
        ASSERT_EQ(check_axiom(x, AxiomId(Axiom::EXT)).holds, ext(x));
      }
    }
}

TEST(Axioms, EveryFailingWitnessReplays) {
  for (const auto& site : sites())
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const auto r = random_invariant_relation(site, seed, 0.6);
      for (const auto& [id, v] : axiom_profile(r).rows) {
        EXPECT_EQ(v.holds, !v.witness.has_value()) << id.to_string();
        if (v.witness) EXPECT_TRUE(replay(*v.witness, r)) << id.to_string() << " " << v.witness->describe();
      }
    }
}

TEST(Axioms, SerialAndParallelAgree) {
  const auto r = random_invariant_relation(fixtures::site(4, {0, 1, 3, 7, 15}), 2, 0.7);
  for (const auto& id : profile_order()) {
    const Verdict a = check_axiom(r, id, Exec::Serial);
    const Verdict b = check_axiom(r, id, Exec::Parallel);
    ASSERT_EQ(a.holds, b.holds) << id.to_string();
    if (a.witness) ASSERT_EQ(a.witness->describe(), b.witness->describe());
  }
}

TEST(Axioms, StrfinHoldsForInvariantRelations) {
  for (const auto& site : sites())
    for (std::uint64_t seed = 0; seed < 10; ++seed)
      EXPECT_TRUE(check_axiom(random_invariant_relation(site, seed, 0.5), AxiomId(Axiom::STRFIN)).holds);
}

TEST(Axioms, WarningsAndVacuousModels) {
  auto sw = fixtures::s1_swap();
  const auto skew = fixtures::pred(sw, [](Subset a, Subset, Subset) { return a.contains(0); }, "0 in A");
  EXPECT_NE(check_axiom(skew, AxiomId(Axiom::EXT)).note.find("not invariant"), std::string::npos);
  SiteSpec spec{3, {0, 3, 4, 7}, {}, std::vector<std::uint32_t>{}};
  const auto r = builtin_full(Site::build(spec));
  EXPECT_EQ(check_axiom(r, AxiomId(Axiom::STAT)).note, "vacuous (no models)");
}

TEST(Axioms, LeftSideIsTransposedRight) {
  auto site = fixtures::s1_swap();
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto r = random_invariant_relation(site, seed, 0.7);
    std::vector<std::uint8_t> t(r.triple_count());
    for (std::uint64_t i = 0; i < r.triple_count(); ++i) {
      const Triple x = r.triple_at(i);
      t[i] = r(x.b, x.c, x.a);
    }
    const auto tr = TernaryRelation::from_table(site, t, "transpose");
    for (auto a : {Axiom::NOR, Axiom::MON, Axiom::TRA, Axiom::CLO_B, Axiom::CLO_BC})
      EXPECT_EQ(check_axiom(r, left(a)).holds, check_axiom(tr, right(a)).holds);
  }
}
