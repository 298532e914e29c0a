#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "lattice.hpp"
#include "mutation.hpp"
#include "ordercert/checker.hpp"
#include "ordercert/scripts.hpp"

using namespace ordercert;
using namespace ordercert::testing;

namespace {

FreeWord W(const char* s) { return FreeWord::parse(s); }

const FactBase& h_facts() {
  static const FactBase base = h_fact_base();
  return base;
}

void visit(Branch& b, const std::function<void(Branch&)>& f) {
  f(b);
  if (b.split)
    for (auto& c : b.split->branches) visit(c, f);
}

Step* find_step(Derivation& d, const std::string& id) {
  Step* found = nullptr;
  visit(d.root, [&](Branch& b) {
    for (auto& s : b.steps)
      if (s.id == id) found = &s;
  });
  return found;
}

// Judgments available at each leaf.
std::vector<std::vector<Judgment>> leaf_scopes(const Branch& b, std::vector<Judgment> scope = {}) {
  for (const auto& a : b.assumptions) scope.push_back(a);
  for (const auto& s : b.steps) scope.push_back(s.conclusion);
  if (!b.split) return {scope};
  std::vector<std::vector<Judgment>> out;
  for (const auto& c : b.split->branches) {
    auto sub = leaf_scopes(c, scope);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

bool contains(const std::vector<Judgment>& scope, const Judgment& j) {
  return std::find(scope.begin(), scope.end(), j) != scope.end();
}

}  // namespace

TEST(Scripts, LemmaIsValid) {
  const Verdict v = check_derivation(script_lemma_gen(), FactBase{});
  EXPECT_TRUE(v.valid()) << v.str();
  EXPECT_EQ(v.leaves, 4u);
}

TEST(Scripts, TheoremIsValid) {
  const Derivation d = script_theorem_main();
  EXPECT_TRUE(d.unconditional_refutation());
  const Verdict v = check_derivation(d, h_facts());
  EXPECT_TRUE(v.valid()) << v.str();
  EXPECT_EQ(v.leaves, 16u);
  EXPECT_EQ(v.steps_checked, d.step_count());
}

TEST(Scripts, LemmaBoundsEveryConjugateByBSquared) {
  const Derivation d = script_lemma_gen();
  const auto leaves = leaf_scopes(d.root);
  ASSERT_EQ(leaves.size(), 4u);
  for (const auto& scope : leaves) {
    // t is b in the 1 < b half and b^-1 in the other.
    const bool pos = contains(scope, Judgment::less(FreeWord(), W("b")));
    const FreeWord t = pos ? W("b") : W("b^-1");
    FreeWord product;
    for (long k = 0; k <= 5; ++k) {
      const FreeWord g = conjugate(W("c"), W("d") * power(W("a"), k));
      EXPECT_TRUE(contains(scope, Judgment::less(power(t, -2), g))) << "k = " << k;
      EXPECT_TRUE(contains(scope, Judgment::less(g, power(t, 2)))) << "k = " << k;
      product = product * g;
    }
    EXPECT_EQ(product, epsilon_word(W("a"), W("c"), W("d")));
    EXPECT_TRUE(contains(scope, Judgment::less(power(t, -12), product)));
    EXPECT_TRUE(contains(scope, Judgment::less(product, power(t, 12))));
  }
}

TEST(Checker, EmptyDerivationClaimingContradictionIsInvalid) {
  Derivation d;
  d.root.id = "root";
  const Verdict v = check_derivation(d, h_facts());
  EXPECT_EQ(v.status, Verdict::Status::Invalid);
  EXPECT_EQ(v.location, "root");
}

TEST(Checker, ExponentMutationIsCaughtAtTheStep) {
  Derivation d = script_lemma_gen();
  // b^12 -> b^11 in the final upper bound of one branch.
  Step* s = find_step(d, "L/b+/c<1.prod5.up");
  ASSERT_NE(s, nullptr);
  ASSERT_EQ(s->conclusion.rhs, W("b^12"));
  s->conclusion.rhs = W("b^11");
  const Verdict v = check_derivation(d, FactBase{});
  EXPECT_EQ(v.status, Verdict::Status::Invalid);
  EXPECT_EQ(v.location, "L/b+/c<1.prod5.up");
}

TEST(Checker, WithoutMirroredFactsTheMirroredBranchFails) {
  FactBase base = h_facts();
  for (const auto& f : h_facts().facts())
    if (f.id.find(".eta") != std::string::npos) base.erase(f.id);
  const Verdict v = check_derivation(script_theorem_main(), base);
  ASSERT_EQ(v.status, Verdict::Status::Invalid);
  EXPECT_NE(v.location.find("|b|<|a|"), std::string::npos) << v.str();
}

TEST(Checker, WithoutF8TheEqualityCaseFails) {
  FactBase base = h_facts();
  base.erase("F8");
  const Verdict v = check_derivation(script_theorem_main(), base);
  ASSERT_EQ(v.status, Verdict::Status::Invalid);
  EXPECT_TRUE(v.location.ends_with(".cmp")) << v.str();
  EXPECT_NE(v.reason.find("F8"), std::string::npos) << v.str();
}

TEST(Checker, UndecidedFactGivesUnknown) {
  FactBase base = h_facts();
  Fact f1 = *base.find("F1");
  base.erase("F1");
  f1.status = FactStatus::Unknown;
  base.add(f1);
  const Verdict v = check_derivation(script_theorem_main(), base);
  EXPECT_EQ(v.status, Verdict::Status::UnknownFacts);
}

TEST(Checker, RefutedFactIsRejected) {
  GeneratorSet g = GeneratorSet::standard();
  g.delta = compose(g.delta, g.beta);
  const Verdict v = check_derivation(script_theorem_main(), h_fact_base(g));
  EXPECT_EQ(v.status, Verdict::Status::Invalid);
  EXPECT_NE(v.reason.find("refuted"), std::string::npos) << v.str();
}

TEST(Checker, DuplicateIdsAreRejected) {
  Derivation d = script_lemma_gen();
  auto& steps = d.root.split->branches[0].steps;
  steps[1].id = steps[0].id;
  const Verdict v = check_derivation(d, FactBase{});
  EXPECT_EQ(v.status, Verdict::Status::Invalid);
  EXPECT_EQ(v.reason, "duplicate id");
}

TEST(Checker, AssumedFactMayNotShadowGroundedFact) {
  Derivation d = script_theorem_main();
  d.assumed_facts.push_back({"F1", FactStatement::commute(W("alpha"), W("gamma")), FactStatus::Assumed, ""});
  EXPECT_EQ(check_derivation(d, h_facts()).status, Verdict::Status::Invalid);
}

TEST(Checker, CommuteNeedsEveryAtomPairCited) {
  JudgmentScope scope{{"p", Judgment::less(W("a d"), W("b^2"))}};
  FactBase base;
  for (const auto& f : lemma_hypotheses()) base.add(f);
  Step s{"s", Rule::Invert, {}, {"p"}, {"A1"}, Judgment::less(W("b^-2"), W("d^-1 a^-1"))};
  s.params.words = {{"u", W("a d")}, {"t", W("b")}};
  s.params.ints = {{"m", 2}};
  s.params.tags = {{"dir", "lt"}};
  EXPECT_EQ(check_step(s, scope, base).status, Verdict::Status::Invalid);
  s.facts = {"A1", "A3"};
  EXPECT_TRUE(check_step(s, scope, base).valid());
}

TEST(Checker, VerdictDoesNotDependOnIndependentStepOrder) {
  const Derivation original = script_lemma_gen();
  const Verdict reference = check_derivation(original, FactBase{});
  std::mt19937_64 rng(41);
  for (int round = 0; round < 20; ++round) {
    Derivation d = original;
    visit(d.root, [&](Branch& b) {
      // Random topological order of the steps, respecting premise order.
      std::vector<Step> pending = b.steps, placed;
      std::set<std::string> done;
      while (!pending.empty()) {
        std::vector<std::size_t> ready;
        for (std::size_t i = 0; i < pending.size(); ++i) {
          const bool ok = std::all_of(pending[i].premises.begin(), pending[i].premises.end(), [&](const auto& p) {
            return done.count(p) || std::none_of(pending.begin(), pending.end(), [&](const Step& s) { return s.id == p; });
          });
          if (ok) ready.push_back(i);
        }
        const std::size_t pick = ready[std::uniform_int_distribution<std::size_t>(0, ready.size() - 1)(rng)];
        done.insert(pending[pick].id);
        placed.push_back(pending[pick]);
        pending.erase(pending.begin() + static_cast<long>(pick));
      }
      b.steps = placed;
    });
    const Verdict v = check_derivation(d, FactBase{});
    ASSERT_EQ(v.status, reference.status);
    ASSERT_EQ(v.steps_checked, reference.steps_checked);
  }
}

TEST(Mutations, EveryMutationIsRejectedAtItsSite) {
  struct Target {
    Derivation d;
    FactBase facts;
  };
  std::vector<Target> targets = {{script_lemma_gen(), FactBase{}}, {script_theorem_main(), h_facts()}};
  std::size_t total = 0;
  for (const auto& t : targets) {
    for (const auto& m : generate_mutations(t.d, 10)) {
      const Verdict v = check_derivation(m.mutated, t.facts);
      EXPECT_EQ(v.status, Verdict::Status::Invalid) << m.description;
      EXPECT_EQ(v.location, m.site) << m.description << ": " << v.str();
      EXPECT_EQ(check_derivation(m.mutated, t.facts).str(), v.str());
      ++total;
    }
  }
  EXPECT_GE(total, 40u);
}

TEST(Soundness, RulesAreSoundInLexicographicZ2) {
  const SoundnessReport r = lattice_soundness(2000, 99);
  EXPECT_EQ(r.false_conclusions, 0u) << r.first_counterexample;
  for (const char* rule : {"R1", "R2", "R3", "R4", "R5.trans", "R5.lmul", "R5.subst", "R5.abs"}) {
    EXPECT_GT(r.per_rule.count(rule) ? r.per_rule.at(rule) : 0u, 0u) << rule;
  }
}
