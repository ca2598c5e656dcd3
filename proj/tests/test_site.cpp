#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "indep/error.hpp"
#include "indep/search.hpp"

using namespace indep;
using fixtures::S;

namespace {

// Intersection of every closed superset, straight from the family.
Subset closure_oracle(const ClosureOperator& cl, Subset a) {
  Subset out = Subset::full(cl.ground_size());
  for (auto s : cl.closed_sets())
    if (a.subset_of(s)) out = out & s;
  return out;
}

// Some element fixing base pointwise maps a onto a2.
bool equivalent_oracle(const Site& site, Subset a, Subset a2, Subset base) {
  for (const auto& g : site.group().elements()) {
    bool fixes = true;
    for (int x = 0; x < site.n(); ++x)
      if (base.contains(x) && g(x) != x) fixes = false;
    if (fixes && g.apply(a) == a2) return true;
  }
  return false;
}

bool has_kind(const ValidationReport& r, const std::string& kind) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.kind == kind; });
}

}  // namespace

TEST(Closure, S1Examples) {
  auto s1 = fixtures::s1();
  EXPECT_EQ(s1->closure(S({0})), S({0, 1}));
  EXPECT_EQ(s1->closure(Subset()), Subset());
  EXPECT_EQ(s1->closure(S({0, 1, 2})), S({0, 1, 2}));
  EXPECT_EQ(s1->closure(S({1, 2})), S({0, 1, 2}));
}

TEST(Closure, MatchesOracleOnEveryFamilyUpToFour) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& cl : enumerate_moore_families(n))
      for (std::uint32_t a = 0; a < (1u << n); ++a) ASSERT_EQ(cl.closure(Subset(a)), closure_oracle(cl, Subset(a)));
}

TEST(Closure, ExtensiveMonotoneIdempotent) {
  for (const auto& cl : enumerate_moore_families(4))
    for (std::uint32_t a = 0; a < 16; ++a) {
      const Subset ca = cl.closure(Subset(a));
      ASSERT_TRUE(Subset(a).subset_of(ca));
      ASSERT_EQ(cl.closure(ca), ca);
      for (std::uint32_t b = 0; b < 16; ++b)
        if (Subset(a).subset_of(Subset(b))) ASSERT_TRUE(ca.subset_of(cl.closure(Subset(b))));
    }
}

TEST(Closure, FromMapRoundTripsAndRejectsNonClosures) {
  auto s1 = fixtures::s1();
  std::vector<Subset> map;
  for (std::uint32_t a = 0; a < 8; ++a) map.push_back(s1->closure(Subset(a)));
  EXPECT_EQ(ClosureOperator::from_map(3, map), s1->cl());
  map[1] = Subset();  // not extensive
  EXPECT_THROW(ClosureOperator::from_map(3, map), Error);
}

TEST(Closure, ExchangeProperty) {
  EXPECT_TRUE(fixtures::s0()->cl().has_exchange());
  // {0} ⊆ cl({1}) = {0,1} but 1 ∉ cl({0}) = {0}.
  EXPECT_FALSE(ClosureOperator::from_family(2, {Subset(0), Subset(1), Subset(3)}).has_exchange());
}

TEST(Group, GenerationAndCap) {
  const Permutation cyc(std::vector<int>{1, 2, 3, 0});
  const Permutation swap(std::vector<int>{1, 0, 2, 3});
  EXPECT_EQ(SymmetryGroup::generate(4, {cyc}).order(), 4u);
  EXPECT_EQ(SymmetryGroup::generate(4, {cyc, swap}).order(), 24u);
  EXPECT_TRUE(SymmetryGroup::generate(4, {cyc}).elements().front().is_identity());
  EXPECT_THROW(SymmetryGroup::generate(4, {cyc, swap}, 10), CapError);
  EXPECT_THROW(Permutation(std::vector<int>{0, 0, 1}), Error);
}

TEST(Group, AutomorphismsOfS1) {
  const auto aut = closure_automorphisms(fixtures::s1()->cl());
  EXPECT_EQ(aut.order(), 2u);
  EXPECT_EQ(closure_automorphisms(fixtures::s0()->cl()).order(), 6u);
}

TEST(Equivalent, Examples) {
  auto sw = fixtures::s1_swap();
  EXPECT_TRUE(sw->equivalent(S({0}), S({1}), Subset()));
  EXPECT_FALSE(sw->equivalent(S({0}), S({1}), S({0})));
  auto s1 = fixtures::s1();
  for (std::uint32_t a = 0; a < 8; ++a)
    for (std::uint32_t base = 0; base < 8; ++base) {
      EXPECT_TRUE(s1->equivalent(Subset(a), Subset(a), Subset(base)));
      for (std::uint32_t a2 = 0; a2 < 8; ++a2)
        if (a != a2) EXPECT_FALSE(s1->equivalent(Subset(a), Subset(a2), Subset(base)));
    }
}

TEST(Equivalent, MatchesOracleAndIsAnEquivalence) {
  auto site = fixtures::site(4, {0, 15}, {{1, 0, 2, 3}, {0, 2, 3, 1}});
  ASSERT_EQ(site->group().order(), 24u);
  for (std::uint32_t base = 0; base < 16; ++base)
    for (std::uint32_t a = 0; a < 16; ++a)
      for (std::uint32_t b = 0; b < 16; ++b) {
        const bool e = site->equivalent(Subset(a), Subset(b), Subset(base));
        ASSERT_EQ(e, equivalent_oracle(*site, Subset(a), Subset(b), Subset(base)));
        ASSERT_EQ(e, site->equivalent(Subset(b), Subset(a), Subset(base)));
        for (std::uint32_t c = 0; c < 16 && e; ++c)
          if (site->equivalent(Subset(b), Subset(c), Subset(base)))
            ASSERT_TRUE(site->equivalent(Subset(a), Subset(c), Subset(base)));
      }
}

TEST(Equivalent, ClosureEquivariance) {
  for (const auto& cl : enumerate_moore_families(4)) {
    auto site = Site::make(cl, closure_automorphisms(cl));
    for (std::uint32_t base = 0; base < 16; ++base)
      for (std::uint32_t a = 0; a < 16; ++a)
        for (auto a2 : site->orbit(Subset(a), Subset(base)))
          ASSERT_TRUE(site->equivalent(site->closure(Subset(a) | Subset(base)),
                                       site->closure(a2 | Subset(base)), Subset(base)));
  }
}

TEST(Orbit, SortedAndComplete) {
  auto site = fixtures::site(3, {0, 1, 2, 3, 4, 5, 6, 7}, {{1, 2, 0}, {1, 0, 2}});
  const auto orb = site->orbit(S({0}), Subset());
  EXPECT_EQ(orb, (std::vector<Subset>{S({0}), S({1}), S({2})}));
  EXPECT_EQ(site->orbit(S({0}), S({2})), (std::vector<Subset>{S({0}), S({1})}));
}

TEST(Validate, Examples) {
  SiteSpec spec{3, {0, 3, 4, 7}, {}, {}};
  EXPECT_TRUE(validate_site(spec).ok());

  spec.generators = {{0, 2, 1}};
  auto report = validate_site(spec);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].kind, "equivariance");
  EXPECT_NE(report.violations[0].message.find("sigma({0,1}) = {0,2} not closed"), std::string::npos);

  report = validate_site(SiteSpec{3, {0, 3, 4}, {}, {}});
  ASSERT_TRUE(has_kind(report, "full-set"));
  EXPECT_EQ(report.violations[0].message, "full set absent");
}

TEST(Validate, OtherViolations) {
  EXPECT_TRUE(has_kind(validate_site(SiteSpec{3, {3, 5, 7}, {}, {}}), "intersection"));
  EXPECT_TRUE(has_kind(validate_site(SiteSpec{3, {0, 7, 9}, {}, {}}), "bitmask"));
  EXPECT_TRUE(has_kind(validate_site(SiteSpec{0, {}, {}, {}}), "ground-size"));
  EXPECT_TRUE(has_kind(validate_site(SiteSpec{3, {0, 7}, {{0, 1}}, {}}), "generator"));
  SiteSpec models{3, {0, 3, 4, 7}, {}, std::vector<std::uint32_t>{1}};
  EXPECT_TRUE(has_kind(validate_site(models), "model"));
  EXPECT_THROW(Site::build(models), SiteError);
}

TEST(Site, DefaultModelsAreClosedSets) {
  auto s1 = fixtures::s1();
  EXPECT_EQ(s1->models(), (std::vector<Subset>{Subset(0), Subset(3), Subset(4), Subset(7)}));
  EXPECT_EQ(s1->to_spec().closed_sets, (std::vector<std::uint32_t>{0, 3, 4, 7}));
}
