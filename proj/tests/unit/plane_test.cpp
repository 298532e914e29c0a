#include <gtest/gtest.h>

#include "ordercert/plane.hpp"
#include "random.hpp"
#include "reference.hpp"

using namespace ordercert;
using namespace ordercert::testing;

namespace {

PlaneWord gen(PlaneSymbol s) { return h_generator(s); }

}  // namespace

TEST(Plane, EtaConjugatesAct) {
  const Point p{Rational(1, 3), Rational(1, 4)};
  EXPECT_EQ(gen(PlaneSymbol::GammaEta)(p), (Point{Rational(1, 3), Rational(1, 4)}));
  EXPECT_EQ(gen(PlaneSymbol::GammaEta)(Point{Rational(1, 3), Rational(0)}), (Point{Rational(10, 3), Rational(0)}));
  EXPECT_EQ(gen(PlaneSymbol::DeltaEta)(p), (Point{Rational(1, 3), Rational(1, 8)}));
}

TEST(Plane, AlphaEtaIsBetaStructurally) {
  EXPECT_EQ(eta_conjugate(gen(PlaneSymbol::Alpha)), gen(PlaneSymbol::Beta));
  EXPECT_EQ(eta_conjugate(gen(PlaneSymbol::Beta)), gen(PlaneSymbol::Alpha));
  EXPECT_EQ(eta_conjugate(gen(PlaneSymbol::Gamma)), gen(PlaneSymbol::GammaEta));
}

TEST(Plane, MirroredRelationsHold) {
  const RelationReport r = verify_mirrored_relations();
  EXPECT_TRUE(r.all_hold());
  EXPECT_EQ(r.entries.size(), 10u);
  EXPECT_NE(r.find("F6.eta"), nullptr);
  EXPECT_EQ(mirrored_epsilon(), power(gen(PlaneSymbol::Alpha), -36));
}

TEST(Plane, EqualityVerdicts) {
  const PlaneWord a = gen(PlaneSymbol::Alpha), b = gen(PlaneSymbol::Beta);
  const PlaneWord ch = gen(PlaneSymbol::GammaEta);
  EXPECT_EQ(equal_or_unknown(a * inverse(a), PlaneWord()).kind, EqualityVerdict::Kind::Equal);
  // alpha and gamma^eta both move x by an amount depending on y only
  EXPECT_EQ(equal_or_unknown(a * ch, ch * a).kind, EqualityVerdict::Kind::Equal);
  const auto v = equal_or_unknown(b * ch, ch * b);
  ASSERT_EQ(v.kind, EqualityVerdict::Kind::Distinct);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_NE((b * ch)(*v.witness), (ch * b)(*v.witness));
}

TEST(Plane, EqualOnlyFromNormalForms) {
  const PlaneWord c = gen(PlaneSymbol::Gamma), ch = gen(PlaneSymbol::GammaEta);
  EXPECT_EQ(equal_or_unknown(c * ch, c * ch * c * inverse(c)).kind, EqualityVerdict::Kind::Equal);
}

TEST(Plane, UnknownWhenNoPointIsTried) {
  const PlaneWord c = gen(PlaneSymbol::Gamma), ch = gen(PlaneSymbol::GammaEta);
  WitnessSearch none;
  none.max_denominator = 0;
  none.random_points = 0;
  const auto v = equal_or_unknown(c * ch, ch * c, none);
  EXPECT_EQ(v.kind, EqualityVerdict::Kind::Unknown);
  EXPECT_FALSE(v.witness.has_value());
  EXPECT_EQ(equal_or_unknown(c * ch, ch * c).kind, EqualityVerdict::Kind::Distinct);
}

TEST(Plane, LetterwiseEvaluationMatchesSimplified) {
  Rng rng(23);
  for (int i = 0; i < 500; ++i) {
    const auto letters = random_letters(rng, 8, true);
    std::vector<PlaneLetter> raw;
    for (const auto& l : letters) {
      const PlaneWord g = power(h_generator(l.symbol), l.exponent);
      raw.insert(raw.end(), g.letters().begin(), g.letters().end());
    }
    const PlaneWord simplified(raw);
    for (int j = 0; j < 5; ++j) {
      const Point p{random_rational(rng, 30, 2), random_rational(rng, 30, 2)};
      ASSERT_EQ(evaluate_letters(raw, p), simplified(p));
      ASSERT_EQ(simplified(p), ref_eval(letters, p));
    }
  }
}

TEST(Plane, EtaIsAnInvolutiveHomomorphism) {
  Rng rng(29);
  for (int i = 0; i < 300; ++i) {
    const PlaneWord u = to_plane_word(random_letters(rng, 5, true));
    const PlaneWord v = to_plane_word(random_letters(rng, 5, true));
    ASSERT_EQ(eta_conjugate(eta_conjugate(u)), u);
    ASSERT_EQ(eta_conjugate(u * v), eta_conjugate(u) * eta_conjugate(v));
  }
}

TEST(Plane, HorizontalLetterIsSwappedVertical) {
  Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    const SkewElement g = random_skew(rng);
    const Point p{random_rational(rng), random_rational(rng)};
    const Point swapped = g(Point{p.y, p.x});
    ASSERT_EQ(PlaneWord::horizontal(g)(p), (Point{swapped.y, swapped.x}));
  }
}

TEST(Plane, DistinctAlwaysCarriesWitness) {
  Rng rng(37);
  for (int i = 0; i < 200; ++i) {
    const PlaneWord u = to_plane_word(random_letters(rng, 4, true));
    const PlaneWord v = to_plane_word(random_letters(rng, 4, true));
    const auto verdict = equal_or_unknown(u, v);
    if (verdict.kind == EqualityVerdict::Kind::Distinct) {
      ASSERT_TRUE(verdict.witness.has_value());
      ASSERT_NE(u(*verdict.witness), v(*verdict.witness));
    } else if (verdict.kind == EqualityVerdict::Kind::Equal) {
      ASSERT_EQ(u.letters(), v.letters());
    }
  }
}

TEST(Plane, SymbolNames) {
  EXPECT_EQ(parse_plane_symbol("ch"), PlaneSymbol::GammaEta);
  EXPECT_EQ(parse_plane_symbol("dh"), PlaneSymbol::DeltaEta);
  EXPECT_EQ(parse_plane_symbol("b"), PlaneSymbol::Beta);
  EXPECT_EQ(plane_symbol_name(PlaneSymbol::DeltaEta), "delta_eta");
  EXPECT_FALSE(parse_plane_symbol("x").has_value());
}
