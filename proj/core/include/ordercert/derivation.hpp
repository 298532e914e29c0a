#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordercert/facts.hpp"
#include "ordercert/free_word.hpp"

namespace ordercert {

/// A statement about the assumed left-order: lhs < rhs, or a contradiction.
struct Judgment {
  enum class Kind { Less, Contradiction };

  Kind kind = Kind::Less;
  FreeWord lhs;
  FreeWord rhs;

  static Judgment less(FreeWord lhs, FreeWord rhs) { return {Kind::Less, std::move(lhs), std::move(rhs)}; }
  static Judgment contradiction() { return {Kind::Contradiction, {}, {}}; }

  std::string str() const;
  friend bool operator==(const Judgment&, const Judgment&) = default;
};

enum class Rule {
  Invert,           // R1: u < t^m  =>  t^-m < u^-1
  Product,          // R2: u < t^m, v < t^n  =>  uv < t^(m+n)
  ConjugateWindow,  // R3: t^(m-1) < u < t^m, t^n1 < v < t^n2  =>  t^(m-2) < u^v < t^(m+1)
  FlipBound,        // R4: u^v = u^-1, t^n1 < v < t^n2, 1 < t  =>  t^-1 < u < t
  Transitivity,     // u < v, v < w  =>  u < w
  LeftMultiply,     // u < v  =>  wu < wv
  Substitute,       // replace one side of a judgment using an identity fact
  AbsElim,          // |x| < |y| hypothesis, 1 < t with t = y^+-1  =>  x < t, x^-1 < t
  Absurd,           // u < u  =>  contradiction
};

enum class SplitRule {
  Trichotomy,  // u < v | u = v | v < u; the equality case closed by a fact
  Window,      // t^n1 < v < t^n2 split into unit windows and interior equalities
};

std::string_view rule_name(Rule r);
std::optional<Rule> parse_rule(std::string_view s);
std::string_view split_rule_name(SplitRule r);
std::optional<SplitRule> parse_split_rule(std::string_view s);

/// Named rule parameters. Which keys a rule reads is fixed per rule.
struct Params {
  std::map<std::string, FreeWord> words;
  std::map<std::string, long> ints;
  std::map<std::string, std::string> tags;

  friend bool operator==(const Params&, const Params&) = default;
};

struct Step {
  std::string id;
  Rule rule = Rule::Transitivity;
  Params params;
  std::vector<std::string> premises;
  std::vector<std::string> facts;
  Judgment conclusion;

  friend bool operator==(const Step&, const Step&) = default;
};

struct Branch;

struct Split {
  std::string id;
  SplitRule rule = SplitRule::Trichotomy;
  Params params;
  std::vector<std::string> premises;
  std::vector<std::string> facts;
  std::vector<Branch> branches;

  friend bool operator==(const Split&, const Split&);
};

/// One case of a derivation. The judgments in `assumptions` are introduced by
/// the parent split and are referenced as "<branch id>.h<index>".
struct Branch {
  std::string id;
  std::vector<Judgment> assumptions;
  std::vector<Step> steps;
  std::optional<Split> split;

  std::string assumption_id(std::size_t i) const { return id + ".h" + std::to_string(i); }
  friend bool operator==(const Branch&, const Branch&) = default;
};

/// |x| < |base^exponent|, where |g| is the larger of g and g^-1.
struct AbsBound {
  FreeWord x;
  FreeWord base;
  long exponent = 1;

  std::string str() const;
  friend bool operator==(const AbsBound&, const AbsBound&) = default;
};

struct Hypothesis {
  std::string id;
  AbsBound bound;
  friend bool operator==(const Hypothesis&, const Hypothesis&) = default;
};

struct Goal {
  enum class Kind { Contradiction, AbsLess };
  Kind kind = Kind::Contradiction;
  AbsBound bound;  // for AbsLess

  std::string str() const;
  friend bool operator==(const Goal&, const Goal&) = default;
};

/// A case-split tree of rule applications. Every leaf must reach a
/// contradiction or, for an AbsLess goal, establish the bound.
struct Derivation {
  std::string name;
  std::vector<Fact> assumed_facts;
  std::vector<Hypothesis> hypotheses;
  Goal goal;
  Branch root;

  /// True when the derivation shows that no left-order exists, using only
  /// grounded facts.
  bool unconditional_refutation() const {
    return goal.kind == Goal::Kind::Contradiction && assumed_facts.empty() && hypotheses.empty();
  }

  std::size_t step_count() const;
  friend bool operator==(const Derivation&, const Derivation&) = default;
};

}  // namespace ordercert
