#include <gtest/gtest.h>

#include "indep/error.hpp"
#include "oracles.hpp"

using namespace indep;

namespace {

FpVector e(int p, int k, int i) { return FpVector::unit(p, k, i - 1); }

std::vector<VectorPair> config1(int p) {
  std::vector<VectorPair> seq;
  for (int n = 0; n < 3; ++n) seq.push_back({e(p, 6, 2 * n + 1), e(p, 6, 2 * n + 2)});
  return seq;
}

std::vector<VectorPair> config2(int p) {
  std::vector<VectorPair> seq;
  for (int n = 0; n < 3; ++n) seq.push_back({e(p, 5, 1), e(p, 5, n + 2)});
  return seq;
}

std::vector<VectorPair> swapped(std::vector<VectorPair> seq) {
  for (auto& [a, b] : seq) std::swap(a, b);
  return seq;
}

std::vector<VectorPair> violation() {
  const int p = 2, k = 3;
  return {{e(p, k, 1), e(p, k, 2)}, {e(p, k, 1) + e(p, k, 2), e(p, k, 2)}, {e(p, k, 3), e(p, k, 2)}};
}

// Applies an invertible matrix (rows = images of the basis) to every vector.
std::vector<VectorPair> transform(const std::vector<VectorPair>& seq, const std::vector<FpVector>& m) {
  auto apply = [&](const FpVector& v) {
    FpVector out = FpVector::zero(v.p(), v.dim());
    for (int i = 0; i < v.dim(); ++i) out = out + m[static_cast<std::size_t>(i)].scaled(v[i]);
    return out;
  };
  std::vector<VectorPair> out;
  for (const auto& [a, b] : seq) out.push_back({apply(a), apply(b)});
  return out;
}

}  // namespace

TEST(Kim, Examples) {
  const int p = 2, k = 5;
  const auto G = span({e(p, k, 5) + e(p, k, 2)});
  const auto base = kim_indep(span({e(p, k, 1)}), span({e(p, k, 2), e(p, k, 3)}), FpSubspace::zero(p, k), G);
  EXPECT_TRUE(base.holds);
  const auto mid = kim_indep(span({e(p, k, 1), e(p, k, 3), e(p, k, 5)}), span({e(p, k, 2), e(p, k, 3)}),
                             span({e(p, k, 3)}), G);
  ASSERT_FALSE(mid.holds);
  EXPECT_EQ(*mid.witness, e(p, k, 5) + e(p, k, 2));
  EXPECT_THROW(kim_indep(span({e(p, k, 1)}), span({e(p, k, 2)}), span({e(p, k, 2)}), G), Error);
}

TEST(Kim, DegenerateSymmetricAndOracle) {
  Rng rng(3);
  for (int trial = 0; trial < 120; ++trial) {
    const int p = trial % 3 == 0 ? 3 : 2;
    const int k = 4;
    const auto w = FpSubspace::span(p, k, oracle::random_vectors(rng, p, k, static_cast<int>(rng.below(2))));
    const auto u = sum(w, FpSubspace::span(p, k, oracle::random_vectors(rng, p, k, 1 + static_cast<int>(rng.below(2)))));
    const auto v = sum(w, FpSubspace::span(p, k, oracle::random_vectors(rng, p, k, 1 + static_cast<int>(rng.below(2)))));
    const auto g = FpSubspace::span(p, k, oracle::random_vectors(rng, p, k, 1 + static_cast<int>(rng.below(2))));
    EXPECT_TRUE(kim_indep(u, u, u, g).holds);
    const auto a = kim_indep(u, v, w, g);
    const auto b = kim_indep(v, u, w, g);
    ASSERT_EQ(a.holds, b.holds);
    const auto o = oracle::kim(u, v, w, g);
    ASSERT_EQ(a.holds, o.holds);
    if (!a.holds) ASSERT_TRUE(o.witnesses.count(oracle::encode(*a.witness)));
  }
}

TEST(Instance, ReproducesForSeveralPrimes) {
  for (int p : {2, 3, 5, 7, 251})
    for (bool sw : {false, true}) {
      const auto r = acfg_bmon_failure_instance(p, sw);
      EXPECT_TRUE(r.reproduces()) << p << " " << sw << "\n" << r.text();
      // Replaying the report's subspaces reproduces both verdicts.
      EXPECT_TRUE(kim_indep(r.base.u, r.base.v, r.base.w, r.base.g).holds);
      EXPECT_EQ(kim_indep(r.intermediate.u, r.intermediate.v, r.intermediate.w, r.intermediate.g).witness,
                r.intermediate.verdict.witness);
    }
  EXPECT_THROW(acfg_bmon_failure_instance(4), Error);
}

TEST(Instance, WitnessIsAd2MinusD1) {
  for (int p : {2, 3}) {
    const auto r = acfg_bmon_failure_instance(p);
    std::vector<int> expect(5, 0);
    expect[kAD2] = 1;
    expect[kD1] = p - 1;
    EXPECT_EQ(*r.intermediate.verdict.witness, FpVector(p, expect));
    EXPECT_EQ(monomial_string(*r.intermediate.verdict.witness), "ad2 - d1");
    EXPECT_NE(r.text().find("G=span{ad2 - d1}"), std::string::npos);
  }
  EXPECT_EQ(monomial_string(acfg_bmon_failure_instance(3, true).expected_witness), "ad1 - d2");
}

TEST(Generic, Examples) {
  const int p = 2, k = 3;
  const auto G0 = FpSubspace::zero(p, k);
  const std::vector<GenericPair> case2{{e(p, k, 1), e(p, k, 2)}, {e(p, k, 1), e(p, k, 3)}};
  const auto v = generic_intersection_check(G0, case2);
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(*v.lambda, FpVector(2, {1, 1}));
  EXPECT_EQ(*v.witness, e(p, k, 2) + e(p, k, 3));
  EXPECT_TRUE(oracle::valid_generic_witness(G0, case2, v));
  EXPECT_FALSE(oracle::generic_intersection(G0, case2));

  EXPECT_TRUE(generic_intersection_check(G0, {}).holds);
  const std::vector<GenericPair> case1{{e(p, k, 1), e(p, k, 2)}, {e(p, k, 2), e(p, k, 3)}};
  EXPECT_TRUE(generic_intersection_check(G0, case1).holds);
}

TEST(Generic, AgreesWithLambdaEnumeration) {
  Rng rng(77);
  for (int trial = 0; trial < 150; ++trial) {
    const int p = std::array{2, 3, 5}[static_cast<std::size_t>(trial % 3)];
    const int k = 2 + static_cast<int>(rng.below(3));
    const int n = static_cast<int>(rng.below(4));
    std::vector<GenericPair> pairs;
    for (int i = 0; i < n; ++i) pairs.push_back({oracle::random_vector(rng, p, k), oracle::random_vector(rng, p, k)});
    const auto g = FpSubspace::span(p, k, oracle::random_vectors(rng, p, k, static_cast<int>(rng.below(2))));
    const auto v = generic_intersection_check(g, pairs);
    ASSERT_EQ(v.holds, oracle::generic_intersection(g, pairs));
    if (!v.holds) ASSERT_TRUE(oracle::valid_generic_witness(g, pairs, v));
  }
}

TEST(Classify, ConstructedFamilies) {
  for (int p : {2, 3}) {
    EXPECT_EQ(classify_sequence(config1(p)), SequenceConfig::Config1);
    EXPECT_EQ(classify_sequence(swapped(config1(p))), SequenceConfig::Config1);
    EXPECT_EQ(classify_sequence(config2(p)), SequenceConfig::Config2);
    EXPECT_EQ(classify_sequence(swapped(config2(p))), SequenceConfig::Config3);
  }
  EXPECT_EQ(classify_sequence(violation()), SequenceConfig::NotIndiscernible);
  EXPECT_EQ(classify_sequence(swapped(violation())), SequenceConfig::NotIndiscernible);
}

TEST(Classify, TwoTermSequenceIsIndiscernibleButUnclassified) {
  const int p = 2, k = 3;
  const std::vector<VectorPair> seq{{e(p, k, 1), e(p, k, 2)}, {e(p, k, 1) + e(p, k, 2), e(p, k, 2)}};
  EXPECT_TRUE(linearly_indiscernible(seq, 2));
  EXPECT_EQ(classify_sequence(seq, 2), SequenceConfig::Inconclusive);
  // The relation d1⁰ + d2⁰ + d1¹ = 0 holds on the tuple (0, 1) but not on (1, 2).
  const auto v = violation();
  EXPECT_TRUE(tuple_relations(v, {0, 1}).contains(FpVector(2, {1, 1, 1, 0})));
  EXPECT_FALSE(tuple_relations(v, {1, 2}).contains(FpVector(2, {1, 1, 1, 0})));
}

TEST(Classify, Preconditions) {
  const int p = 2, k = 3;
  EXPECT_THROW(classify_sequence({{e(p, k, 1), e(p, k, 2)}}), Error);
  EXPECT_THROW(classify_sequence({{e(p, k, 1), e(p, k, 2)}, {e(p, k, 1), e(p, k, 2)}}), Error);
  EXPECT_THROW(classify_sequence(config1(2), 9), CapError);
  std::vector<VectorPair> longer;
  for (int i = 0; i < 40; ++i) longer.push_back({FpVector(251, {i, 0}), FpVector(251, {0, i})});
  EXPECT_THROW(classify_sequence(longer), CapError);
}

TEST(Classify, InvariantUnderLinearChangeOfCoordinates) {
  Rng rng(5);
  const std::vector<std::vector<VectorPair>> families{config1(3), config2(3), swapped(config2(3))};
  for (const auto& fam : families) {
    const int p = fam[0].first.p();
    const int k = fam[0].first.dim();
    const auto label = classify_sequence(fam);
    for (int t = 0; t < 10; ++t) {
      std::vector<FpVector> m;
      do m = oracle::random_vectors(rng, p, k, k);
      while (span(m).dim() != k);
      ASSERT_EQ(classify_sequence(transform(fam, m)), label);
    }
  }
}
