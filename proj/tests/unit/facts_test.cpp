#include <gtest/gtest.h>

#include "ordercert/facts.hpp"

using namespace ordercert;

namespace {

FreeWord W(const char* s) { return FreeWord::parse(s); }

}  // namespace

TEST(Facts, HFactBaseIsFullyVerified) {
  const FactBase base = h_fact_base();
  EXPECT_EQ(base.size(), 20u);
  for (const auto& f : base.facts()) EXPECT_EQ(f.status, FactStatus::Verified) << f.id;
  ASSERT_NE(base.find("F6"), nullptr);
  EXPECT_EQ(base.find("F6")->statement.second, W("beta^-36"));
  EXPECT_EQ(base.find("F6.eta")->statement.second, W("alpha^-36"));
  EXPECT_EQ(base.find("F8")->statement.kind, FactKind::NotInSet);
}

TEST(Facts, GroundingRefutesFalseStatements) {
  const AtomTable atoms = h_atom_table();
  EXPECT_EQ(ground(FactStatement::commute(W("alpha"), W("gamma")), atoms), FactStatus::Refuted);
  EXPECT_EQ(ground(FactStatement::commute(W("alpha"), W("delta_eta")), atoms), FactStatus::Verified);
  EXPECT_EQ(ground(FactStatement::identity(W("gamma^(alpha^3)"), W("gamma")), atoms), FactStatus::Refuted);
  EXPECT_EQ(ground(FactStatement::non_identity(W("alpha^6 beta^0")), atoms), FactStatus::Verified);
  EXPECT_EQ(ground(FactStatement::not_in_set(W("alpha"), W("alpha^-1")), atoms), FactStatus::Refuted);
  EXPECT_EQ(ground(FactStatement::identity(W("alpha^3"), W("gamma alpha^3 gamma^-1")), atoms), FactStatus::Refuted);
}

TEST(Facts, PerturbedGeneratorsRefuteF5) {
  GeneratorSet g = GeneratorSet::standard();
  g.delta = compose(g.delta, g.beta);
  const FactBase base = h_fact_base(g);
  EXPECT_EQ(base.find("F5")->status, FactStatus::Refuted);
  EXPECT_EQ(base.find("F1")->status, FactStatus::Verified);
}

TEST(Facts, LemmaHypothesesAreAssumed) {
  const auto hyps = lemma_hypotheses();
  EXPECT_EQ(hyps.size(), 9u);
  for (const auto& f : hyps) {
    EXPECT_EQ(f.status, FactStatus::Assumed);
    EXPECT_TRUE(f.citable());
  }
}

TEST(Facts, BaseRejectsDuplicates) {
  FactBase base;
  base.add({"X", FactStatement::non_identity(W("a")), FactStatus::Assumed, ""});
  EXPECT_THROW(base.add({"X", FactStatement::non_identity(W("b")), FactStatus::Assumed, ""}), std::invalid_argument);
  EXPECT_TRUE(base.erase("X"));
  EXPECT_EQ(base.find("X"), nullptr);
}

TEST(Facts, UnboundAtomsThrow) {
  EXPECT_THROW(h_atom_table().realize(W("alpha q")), std::out_of_range);
}

TEST(Facts, KindAndStatusNames) {
  for (auto k : {FactKind::Commute, FactKind::IdentityEq, FactKind::NonIdentity, FactKind::NotInSet})
    EXPECT_EQ(parse_fact_kind(fact_kind_name(k)), k);
  for (auto s : {FactStatus::Verified, FactStatus::Assumed, FactStatus::Refuted, FactStatus::Unknown})
    EXPECT_EQ(parse_fact_status(fact_status_name(s)), s);
}
