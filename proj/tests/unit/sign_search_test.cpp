#include <gtest/gtest.h>

#include <algorithm>
#include <array>

#include "ordercert/sign_search.hpp"

using namespace ordercert;

namespace {

FreeWord W(const char* s) { return FreeWord::parse(s); }

// The symmetric group on three points, elements listed as images of
// (0, 1, 2); element 0 is the identity. i * j applies i first.
FiniteGroupOracle s3() {
  const std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<int, 3> c{};
      for (int k = 0; k < 3; ++k) c[k] = perms[j][perms[i][k]];
      t[i][j] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return FiniteGroupOracle(t, {{"s", 1}, {"r", 4}});
}

}  // namespace

TEST(SignSearch, OrderTwoElementGivesWitness) {
  const auto oracle = FiniteGroupOracle::z2();
  const auto w = sign_search({W("g")}, {2, 16}, oracle);
  ASSERT_TRUE(w.has_value());
  ASSERT_EQ(w->products.size(), 2u);
  EXPECT_EQ(w->products[0].signs, std::vector<int>{1});
  EXPECT_EQ(w->products[0].factors, (std::vector<std::size_t>{0, 0}));
  EXPECT_EQ(w->products[1].signs, std::vector<int>{-1});
  EXPECT_TRUE(verify_nonlo_witness(*w, oracle));
}

TEST(SignSearch, DepthOneIsNotEnoughForOrderTwo) {
  EXPECT_FALSE(sign_search({W("g")}, {1, 16}, FiniteGroupOracle::z2()).has_value());
}

TEST(SignSearch, FiniteGroupsAlwaysHaveWitnesses) {
  const auto oracle = s3();
  const auto w = sign_search({W("s"), W("r")}, {3, 64}, oracle);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->products.size(), 4u);
  EXPECT_TRUE(verify_nonlo_witness(*w, oracle));
}

TEST(SignSearch, LatticeHasNoWitness) {
  const auto oracle = LatticeOracle::standard();
  for (std::size_t depth = 1; depth <= 6; ++depth)
    EXPECT_FALSE(sign_search({W("x"), W("y")}, {depth, 4096}, oracle).has_value()) << depth;
}

TEST(SignSearch, AlphaBetaGenerateFreeAbelianGroup) {
  const SkewOracle skew;
  EXPECT_FALSE(sign_search({W("alpha"), W("beta")}, {4, 4096}, skew).has_value());
  const PlaneOracle plane;
  EXPECT_FALSE(sign_search({W("alpha"), W("beta")}, {3, 4096}, plane).has_value());
}

TEST(SignSearch, IdentityAtomIsRejected) {
  EXPECT_THROW(sign_search({W("g^2")}, {2, 16}, FiniteGroupOracle::z2()), std::invalid_argument);
}

TEST(SignSearch, BoundExhaustionReturnsNothing) {
  EXPECT_FALSE(sign_search({W("s"), W("r")}, {3, 1}, s3()).has_value());
}

TEST(Witness, TamperedProductIsRejected) {
  const auto oracle = FiniteGroupOracle::z2();
  auto w = *sign_search({W("g")}, {2, 16}, oracle);
  w.products[0].factors = {0};
  EXPECT_FALSE(verify_nonlo_witness(w, oracle));
}

TEST(Witness, MissingSignVectorIsRejected) {
  const auto oracle = FiniteGroupOracle::z2();
  auto w = *sign_search({W("g")}, {2, 16}, oracle);
  w.products.pop_back();
  EXPECT_FALSE(verify_nonlo_witness(w, oracle));
  w.products.push_back(w.products.front());  // covered twice, the other never
  EXPECT_FALSE(verify_nonlo_witness(w, oracle));
}

TEST(Witness, IdentityAtomIsRejected) {
  const auto oracle = FiniteGroupOracle::z2();
  NonLOWitness w{{W("g^2")}, {{{1}, {0}}, {{-1}, {0}}}};
  EXPECT_FALSE(verify_nonlo_witness(w, oracle));
}

TEST(Oracles, SkewAndPlaneAgreeOnSkewWords) {
  const SkewOracle skew;
  const PlaneOracle plane;
  for (const char* text : {"alpha^6 gamma alpha^-6 gamma^-1", "gamma^(alpha^3) gamma", "delta^(alpha^3) delta^-1",
                           "alpha beta alpha^-1 beta^-1", "gamma delta gamma^-1 delta^-1"}) {
    EXPECT_EQ(skew.is_identity(W(text)), plane.is_identity(W(text))) << text;
  }
  EXPECT_TRUE(skew.is_identity(W("gamma^(alpha^3) gamma")));
  EXPECT_FALSE(skew.is_identity(W("gamma delta gamma^-1 delta^-1")));
}
