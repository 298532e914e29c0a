#include "ordercert/derivation.hpp"

namespace ordercert {

std::string Judgment::str() const {
  if (kind == Kind::Contradiction) return "contradiction";
  return lhs.str() + " < " + rhs.str();
}

bool operator==(const Split& a, const Split& b) {
  return a.id == b.id && a.rule == b.rule && a.params == b.params && a.premises == b.premises &&
         a.facts == b.facts && a.branches == b.branches;
}

namespace {

constexpr std::pair<Rule, std::string_view> kRuleNames[] = {
    {Rule::Invert, "R1"},
    {Rule::Product, "R2"},
    {Rule::ConjugateWindow, "R3"},
    {Rule::FlipBound, "R4"},
    {Rule::Transitivity, "R5.trans"},
    {Rule::LeftMultiply, "R5.lmul"},
    {Rule::Substitute, "R5.subst"},
    {Rule::AbsElim, "R5.abs"},
    {Rule::Absurd, "R5.absurd"},
};

constexpr std::pair<SplitRule, std::string_view> kSplitNames[] = {
    {SplitRule::Trichotomy, "R5.trichotomy"},
    {SplitRule::Window, "R5.window"},
};

std::size_t count_steps(const Branch& b) {
  std::size_t n = b.steps.size();
  if (b.split) {
    for (const auto& c : b.split->branches) n += count_steps(c);
  }
  return n;
}

}  // namespace

std::string_view rule_name(Rule r) {
  for (const auto& [rule, name] : kRuleNames) {
    if (rule == r) return name;
  }
  return "?";
}

std::optional<Rule> parse_rule(std::string_view s) {
  for (const auto& [rule, name] : kRuleNames) {
    if (name == s) return rule;
  }
  return std::nullopt;
}

std::string_view split_rule_name(SplitRule r) {
  for (const auto& [rule, name] : kSplitNames) {
    if (rule == r) return name;
  }
  return "?";
}

std::optional<SplitRule> parse_split_rule(std::string_view s) {
  for (const auto& [rule, name] : kSplitNames) {
    if (name == s) return rule;
  }
  return std::nullopt;
}

std::string AbsBound::str() const {
  return "|" + x.str() + "| < |(" + base.str() + ")^" + std::to_string(exponent) + "|";
}

std::string Goal::str() const { return kind == Kind::Contradiction ? "contradiction" : bound.str(); }

std::size_t Derivation::step_count() const { return count_steps(root); }

}  // namespace ordercert
