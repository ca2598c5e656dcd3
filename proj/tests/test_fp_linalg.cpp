#include <gtest/gtest.h>

#include "indep/error.hpp"
#include "oracles.hpp"

using namespace indep;

namespace {

FpVector e(int p, int k, int i) { return FpVector::unit(p, k, i - 1); }

}  // namespace

TEST(FpVector, CanonicalReduction) {
  const FpVector v(5, {7, -1, 5});
  EXPECT_EQ(v, FpVector(5, {2, 4, 0}));
  EXPECT_EQ(v.to_string(), "(2,4,0)");
  EXPECT_EQ((v + v).to_string(), "(4,3,0)");
  EXPECT_TRUE((v - v).is_zero());
  EXPECT_EQ(v.scaled(3), FpVector(5, {1, 2, 0}));
  EXPECT_THROW(FpVector(4, {1}), Error);
  EXPECT_THROW(FpVector(257, {1}), Error);
  EXPECT_NO_THROW(FpVector(251, {250}));
  EXPECT_THROW(FpVector(2, {1}) + FpVector(3, {1}), MismatchError);
}

TEST(FpVector, Inverses) {
  for (int p : {2, 3, 5, 7, 251})
    for (int a = 1; a < p; ++a) ASSERT_EQ(a * inverse_mod(a, p) % p, 1);
}

TEST(FpSubspace, Examples) {
  const int p = 2, k = 3;
  const auto e1 = e(p, k, 1), e2 = e(p, k, 2), e3 = e(p, k, 3);
  EXPECT_EQ(intersect(span({e1}), span({e1 + e2, e2})), span({e1}));
  const auto u = span({e1 + e3, e2});
  EXPECT_EQ(sum(u, FpSubspace::zero(p, k)), u);
  EXPECT_FALSE(contains(span({e1 + e2}), e1));
  EXPECT_TRUE(contains(span({e1 + e2}), e1 + e2));

  const std::vector<FpSubspace> direct{span({e1}), span({e2})};
  EXPECT_TRUE(is_direct_sum(direct));
  const std::vector<FpSubspace> overlap{span({e1}), span({e1 + e2}), span({e2})};
  EXPECT_FALSE(is_direct_sum(overlap));
  const std::vector<FpSubspace> single{u};
  EXPECT_TRUE(is_direct_sum(single));
}

TEST(FpSubspace, CanonicalForm) {
  const int p = 3, k = 3;
  const auto a = span({FpVector(p, {2, 1, 0}), FpVector(p, {0, 2, 1})});
  const auto b = span({FpVector(p, {1, 1, 1}), FpVector(p, {2, 0, 1})});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.basis(), (std::vector<FpVector>{FpVector(p, {1, 0, 2}), FpVector(p, {0, 1, 2})}));
  EXPECT_TRUE(oracle::is_rref(a));
  EXPECT_EQ(FpSubspace::full(p, k).dim(), 3);
  EXPECT_THROW(sum(a, FpSubspace::zero(p, 4)), MismatchError);
  EXPECT_THROW(sum(a, FpSubspace::zero(5, 3)), MismatchError);
}

TEST(FpSubspace, AgreesWithEnumerationOracle) {
  Rng rng(2024);
  const std::vector<std::pair<int, int>> shapes{{2, 3}, {2, 5}, {2, 8}, {3, 3}, {3, 5}, {5, 3}, {5, 4}, {7, 3}, {2, 12}};
  for (int trial = 0; trial < 200; ++trial) {
    const auto [p, k] = shapes[static_cast<std::size_t>(trial) % shapes.size()];
    const auto gu = oracle::random_vectors(rng, p, k, 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(k))));
    const auto gv = oracle::random_vectors(rng, p, k, static_cast<int>(rng.below(static_cast<std::uint64_t>(k))));
    const auto u = FpSubspace::span(p, k, gu);
    const auto v = FpSubspace::span(p, k, gv);
    const auto U = oracle::span_set(p, k, gu), V = oracle::span_set(p, k, gv);
    ASSERT_EQ(oracle::members(u), U);
    ASSERT_TRUE(oracle::is_rref(u));
    ASSERT_EQ(oracle::members(intersect(u, v)), oracle::meet(U, V));
    ASSERT_EQ(oracle::members(sum(u, v)), oracle::plus(p, k, U, V));
    ASSERT_TRUE(oracle::is_rref(intersect(u, v)));
    for (int t = 0; t < 5; ++t) {
      const auto x = oracle::random_vector(rng, p, k);
      ASSERT_EQ(u.contains(x), U.count(oracle::encode(x)) == 1);
    }
  }
}

TEST(LeftKernel, MatchesEnumeration) {
  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const int p = trial % 2 ? 3 : 2;
    const int k = 3;
    const int n = 1 + trial % 5;
    const auto rows = oracle::random_vectors(rng, p, k, n);
    const auto ker = left_kernel(p, k, rows);
    oracle::VecSet expect;
    for (std::uint32_t code = 0; code < oracle::space_size(p, n); ++code) {
      const auto lambda = oracle::decode(p, n, code);
      FpVector total = FpVector::zero(p, k);
      for (int i = 0; i < n; ++i) total = total + rows[static_cast<std::size_t>(i)].scaled(lambda[i]);
      if (total.is_zero()) expect.insert(code);
    }
    ASSERT_EQ(oracle::members(ker), expect);
  }
}

TEST(Permute, MovesCoordinates) {
  const FpVector v(3, {1, 2, 0});
  const std::vector<int> perm{2, 0, 1};
  EXPECT_EQ(permute(v, perm), FpVector(3, {2, 0, 1}));
}
