#include "ordercert/checker.hpp"

#include <algorithm>
#include <set>

namespace ordercert {

std::string_view verdict_status_name(Verdict::Status s) {
  switch (s) {
    case Verdict::Status::Valid: return "valid";
    case Verdict::Status::Invalid: return "invalid";
    case Verdict::Status::UnknownFacts: return "unknown-facts";
  }
  return "?";
}

std::string Verdict::str() const {
  if (valid()) {
    return "valid (" + std::to_string(steps_checked) + " steps, " + std::to_string(leaves) + " leaves)";
  }
  return std::string(verdict_status_name(status)) + " at " + location + ": " + reason;
}

namespace {

struct Failure {
  Verdict::Status status;
  std::string reason;
};

[[noreturn]] void invalid(std::string reason) { throw Failure{Verdict::Status::Invalid, std::move(reason)}; }

Verdict fail_at(const std::string& where, const Failure& f) {
  Verdict v;
  v.status = f.status;
  v.location = where;
  v.reason = f.reason;
  return v;
}

bool single_atom(const FreeWord& w, std::string* name) {
  if (w.syllables().size() != 1) return false;
  const auto& s = w.syllables().front();
  if (s.exponent != 1 && s.exponent != -1) return false;
  *name = s.atom;
  return true;
}

// Shared bookkeeping for steps and splits: parameter access, premise lookup,
// and side conditions discharged by the cited facts only.
class Instance {
 public:
  Instance(const Params& params, const std::vector<std::string>& premises, const std::vector<std::string>& facts,
           const JudgmentScope& scope, const FactBase& base)
      : params_(params), premises_(premises), scope_(scope) {
    for (const auto& id : facts) {
      const Fact* f = base.find(id);
      if (f == nullptr) invalid("cites unknown fact " + id);
      if (f->status == FactStatus::Refuted) invalid("cites refuted fact " + id);
      if (f->status == FactStatus::Unknown) throw Failure{Verdict::Status::UnknownFacts, "fact " + id + " is undecided"};
      cited_.push_back(f);
    }
  }

  const FreeWord& word(const std::string& key) const {
    auto it = params_.words.find(key);
    if (it == params_.words.end()) invalid("missing word parameter '" + key + "'");
    return it->second;
  }

  long integer(const std::string& key) const {
    auto it = params_.ints.find(key);
    if (it == params_.ints.end()) invalid("missing integer parameter '" + key + "'");
    return it->second;
  }

  const std::string& tag(const std::string& key, std::initializer_list<std::string_view> allowed) const {
    auto it = params_.tags.find(key);
    if (it == params_.tags.end()) invalid("missing tag '" + key + "'");
    if (std::find(allowed.begin(), allowed.end(), it->second) == allowed.end()) {
      invalid("tag '" + key + "' has unsupported value '" + it->second + "'");
    }
    return it->second;
  }

  void expect_premise_count(std::size_t n) const {
    if (premises_.size() != n) {
      invalid("expects " + std::to_string(n) + " premises, got " + std::to_string(premises_.size()));
    }
  }

  const Judgment& premise(std::size_t i) const {
    auto it = scope_.find(premises_.at(i));
    if (it == scope_.end()) invalid("premise " + premises_[i] + " is not available here");
    return it->second;
  }

  void expect_premise(std::size_t i, const Judgment& shape) const {
    const Judgment& got = premise(i);
    if (got != shape) {
      invalid("premise " + premises_[i] + " is '" + got.str() + "', rule needs '" + shape.str() + "'");
    }
  }

  const Judgment& less_premise(std::size_t i) const {
    const Judgment& j = premise(i);
    if (j.kind != Judgment::Kind::Less) invalid("premise " + premises_[i] + " is not an inequality");
    return j;
  }

  bool cites_commute(const std::string& x, const std::string& y) const {
    for (const Fact* f : cited_) {
      if (f->statement.kind != FactKind::Commute) continue;
      std::string p, q;
      if (!single_atom(f->statement.first, &p) || !single_atom(f->statement.second, &q)) continue;
      if ((p == x && q == y) || (p == y && q == x)) return true;
    }
    return false;
  }

  // Commute(u, t) follows when every atom of u commutes with every atom of t.
  void require_commute(const FreeWord& u, const FreeWord& t) const {
    for (const Fact* f : cited_) {
      const auto& s = f->statement;
      if (s.kind == FactKind::Commute && ((s.first == u && s.second == t) || (s.first == t && s.second == u))) return;
    }
    for (const auto& x : u.atoms()) {
      for (const auto& y : t.atoms()) {
        if (x == y || cites_commute(x, y)) continue;
        invalid("side condition commute(" + u.str() + ", " + t.str() + ") needs a cited fact for " + x + ", " + y);
      }
    }
  }

  void require_identity(const FreeWord& lhs, const FreeWord& rhs) const {
    for (const Fact* f : cited_) {
      const auto& s = f->statement;
      if (s.kind != FactKind::IdentityEq) continue;
      if ((s.first == lhs && s.second == rhs) || (s.first == rhs && s.second == lhs)) return;
    }
    invalid("side condition " + lhs.str() + " = " + rhs.str() + " not cited");
  }

  static bool closes(const Fact& f, const FreeWord& u, const FreeWord& v) {
    const auto& s = f.statement;
    if (s.kind == FactKind::NonIdentity) {
      for (const FreeWord& w : {inverse(u) * v, inverse(v) * u, u * inverse(v), v * inverse(u)}) {
        if (w == s.first) return true;
      }
      return false;
    }
    if (s.kind == FactKind::NotInSet) {
      auto is_pm = [](const FreeWord& w, const FreeWord& base) { return w == base || w == inverse(base); };
      return (is_pm(u, s.first) && is_pm(v, s.second)) || (is_pm(v, s.first) && is_pm(u, s.second));
    }
    return false;
  }

  void require_distinct(const FreeWord& u, const FreeWord& v) const {
    for (const Fact* f : cited_) {
      if (closes(*f, u, v)) return;
    }
    invalid("case " + u.str() + " = " + v.str() + " is not closed by a cited fact");
  }

  const std::vector<const Fact*>& cited() const { return cited_; }

 private:
  const Params& params_;
  const std::vector<std::string>& premises_;
  const JudgmentScope& scope_;
  std::vector<const Fact*> cited_;
};

Judgment lt(FreeWord a, FreeWord b) { return Judgment::less(std::move(a), std::move(b)); }

Judgment expected_conclusion(const Step& step, const Instance& in) {
  switch (step.rule) {
    case Rule::Invert: {
      const FreeWord& u = in.word("u");
      const FreeWord& t = in.word("t");
      const long m = in.integer("m");
      in.expect_premise_count(1);
      in.require_commute(u, t);
      if (in.tag("dir", {"lt", "gt"}) == "lt") {
        in.expect_premise(0, lt(u, power(t, m)));
        return lt(power(t, -m), inverse(u));
      }
      in.expect_premise(0, lt(power(t, m), u));
      return lt(inverse(u), power(t, -m));
    }
    case Rule::Product: {
      const FreeWord& u = in.word("u");
      const FreeWord& v = in.word("v");
      const FreeWord& t = in.word("t");
      const long m = in.integer("m");
      const long n = in.integer("n");
      in.expect_premise_count(2);
      in.require_commute(u, t);
      in.require_commute(v, t);
      if (in.tag("dir", {"lt", "gt"}) == "lt") {
        in.expect_premise(0, lt(u, power(t, m)));
        in.expect_premise(1, lt(v, power(t, n)));
        return lt(u * v, power(t, m + n));
      }
      in.expect_premise(0, lt(power(t, m), u));
      in.expect_premise(1, lt(power(t, n), v));
      return lt(power(t, m + n), u * v);
    }
    case Rule::ConjugateWindow: {
      const FreeWord& u = in.word("u");
      const FreeWord& v = in.word("v");
      const FreeWord& t = in.word("t");
      const long m = in.integer("m");
      const long n1 = in.integer("n1");
      const long n2 = in.integer("n2");
      const std::string& side = in.tag("side", {"lower", "upper"});
      if (n1 >= n2) invalid("window for v must have n1 < n2");
      in.expect_premise_count(4);
      in.require_commute(u, t);
      in.require_commute(v, t);
      in.expect_premise(0, lt(power(t, m - 1), u));
      in.expect_premise(1, lt(u, power(t, m)));
      in.expect_premise(2, lt(power(t, n1), v));
      in.expect_premise(3, lt(v, power(t, n2)));
      const FreeWord uv = conjugate(u, v);
      return side == "lower" ? lt(power(t, m - 2), uv) : lt(uv, power(t, m + 1));
    }
    case Rule::FlipBound: {
      const FreeWord& u = in.word("u");
      const FreeWord& v = in.word("v");
      const FreeWord& t = in.word("t");
      const long n1 = in.integer("n1");
      const long n2 = in.integer("n2");
      const std::string& side = in.tag("side", {"lower", "upper"});
      if (n1 >= n2) invalid("window for v must have n1 < n2");
      in.expect_premise_count(3);
      in.require_identity(conjugate(u, v), inverse(u));
      in.require_commute(u, t);
      in.require_commute(v, t);
      in.expect_premise(0, lt(power(t, n1), v));
      in.expect_premise(1, lt(v, power(t, n2)));
      in.expect_premise(2, lt(FreeWord(), t));
      return side == "lower" ? lt(inverse(t), u) : lt(u, t);
    }
    case Rule::Transitivity: {
      in.expect_premise_count(2);
      const Judgment& a = in.less_premise(0);
      const Judgment& b = in.less_premise(1);
      if (a.rhs != b.lhs) invalid("transitivity needs matching middle terms: " + a.rhs.str() + " vs " + b.lhs.str());
      return lt(a.lhs, b.rhs);
    }
    case Rule::LeftMultiply: {
      const FreeWord& w = in.word("w");
      in.expect_premise_count(1);
      const Judgment& a = in.less_premise(0);
      return lt(w * a.lhs, w * a.rhs);
    }
    case Rule::Substitute: {
      const std::string& side = in.tag("side", {"left", "right"});
      in.expect_premise_count(1);
      const Judgment& a = in.less_premise(0);
      const FreeWord& target = side == "left" ? a.lhs : a.rhs;
      const Fact* use = nullptr;
      for (const Fact* f : in.cited()) {
        if (f->statement.kind == FactKind::IdentityEq &&
            (f->statement.first == target || f->statement.second == target)) {
          use = f;
          break;
        }
      }
      if (use == nullptr) invalid("no cited identity mentions " + target.str());
      const FreeWord& replacement = use->statement.first == target ? use->statement.second : use->statement.first;
      return side == "left" ? lt(replacement, a.rhs) : lt(a.lhs, replacement);
    }
    case Rule::AbsElim:
      break;  // needs the hypotheses; see expected_abs_elim
    case Rule::Absurd: {
      in.expect_premise_count(1);
      const Judgment& a = in.less_premise(0);
      if (a.lhs != a.rhs) invalid("premise " + a.str() + " is not of the form u < u");
      return Judgment::contradiction();
    }
  }
  invalid("rule cannot be checked here");
}

Judgment expected_abs_elim(const Step& step, const Instance& in, std::span<const Hypothesis> hyps) {
  auto it = step.params.tags.find("hyp");
  if (it == step.params.tags.end()) invalid("missing tag 'hyp'");
  const Hypothesis* h = nullptr;
  for (const auto& cand : hyps) {
    if (cand.id == it->second) h = &cand;
  }
  if (h == nullptr) invalid("unknown hypothesis " + it->second);
  if (h->bound.exponent != 1) invalid("hypothesis " + h->id + " is not of the form |x| < |y|");
  const std::string& part = in.tag("part", {"direct", "inverse"});
  in.expect_premise_count(1);
  const Judgment& sign = in.less_premise(0);
  if (!sign.lhs.empty()) invalid("premise " + sign.str() + " is not of the form 1 < t");
  if (sign.rhs != h->bound.base && sign.rhs != inverse(h->bound.base)) {
    invalid("premise " + sign.str() + " does not fix the sign of " + h->bound.base.str());
  }
  return lt(part == "direct" ? h->bound.x : inverse(h->bound.x), sign.rhs);
}

}  // namespace

Verdict check_step(const Step& step, const JudgmentScope& scope, const FactBase& facts,
                   std::span<const Hypothesis> hypotheses) {
  try {
    Instance in(step.params, step.premises, step.facts, scope, facts);
    const Judgment expected = step.rule == Rule::AbsElim ? expected_abs_elim(step, in, hypotheses)
                                                         : expected_conclusion(step, in);
    if (expected != step.conclusion) {
      invalid(std::string(rule_name(step.rule)) + " yields '" + expected.str() + "', step claims '" +
              step.conclusion.str() + "'");
    }
    Verdict v;
    v.steps_checked = 1;
    return v;
  } catch (const Failure& f) {
    return fail_at(step.id, f);
  }
}

Verdict check_split(const Split& split, const JudgmentScope& scope, const FactBase& facts,
                    std::vector<std::vector<Judgment>>* expected) {
  try {
    Instance in(split.params, split.premises, split.facts, scope, facts);
    std::vector<std::vector<Judgment>> cases;
    if (split.rule == SplitRule::Trichotomy) {
      const FreeWord& u = in.word("u");
      const FreeWord& v = in.word("v");
      in.expect_premise_count(0);
      if (u == v) invalid("trichotomy on identical words");
      in.require_distinct(u, v);
      cases = {{lt(u, v)}, {lt(v, u)}};
    } else {
      const FreeWord& v = in.word("v");
      const FreeWord& t = in.word("t");
      const long n1 = in.integer("n1");
      const long n2 = in.integer("n2");
      if (n1 >= n2) invalid("window needs n1 < n2");
      if (n2 - n1 > 64) invalid("window wider than 64");
      in.expect_premise_count(2);
      in.expect_premise(0, lt(power(t, n1), v));
      in.expect_premise(1, lt(v, power(t, n2)));
      for (long j = n1 + 1; j < n2; ++j) in.require_distinct(v, power(t, j));
      for (long j = n1 + 1; j <= n2; ++j) cases.push_back({lt(power(t, j - 1), v), lt(v, power(t, j))});
    }
    if (expected != nullptr) *expected = std::move(cases);
    return {};
  } catch (const Failure& f) {
    return fail_at(split.id, f);
  }
}

namespace {

class DerivationChecker {
 public:
  DerivationChecker(const Derivation& d, FactBase facts) : d_(d), facts_(std::move(facts)) {}

  Verdict run() {
    try {
      walk(d_.root, JudgmentScope{});
    } catch (const Located& e) {
      Verdict v = e.verdict;
      v.steps_checked = steps_;
      v.leaves = leaves_;
      return v;
    }
    Verdict v;
    v.steps_checked = steps_;
    v.leaves = leaves_;
    return v;
  }

 private:
  struct Located {
    Verdict verdict;
  };

  void claim_id(const std::string& id) {
    if (id.empty()) throw Located{fail_at("?", {Verdict::Status::Invalid, "empty id"})};
    if (!ids_.insert(id).second) throw Located{fail_at(id, {Verdict::Status::Invalid, "duplicate id"})};
  }

  bool goal_met(const JudgmentScope& scope) const {
    if (d_.goal.kind != Goal::Kind::AbsLess) return false;
    const AbsBound& g = d_.goal.bound;
    if (g.exponent < 0) return false;
    auto has = [&](const Judgment& j) {
      return std::any_of(scope.begin(), scope.end(), [&](const auto& kv) { return kv.second == j; });
    };
    for (const FreeWord& t : {g.base, inverse(g.base)}) {
      const FreeWord bound = power(t, g.exponent);
      if (has(lt(FreeWord(), t)) && has(lt(g.x, bound)) && has(lt(inverse(g.x), bound))) return true;
    }
    return false;
  }

  void walk(const Branch& b, JudgmentScope scope) {
    claim_id(b.id);
    for (std::size_t i = 0; i < b.assumptions.size(); ++i) {
      const std::string id = b.assumption_id(i);
      claim_id(id);
      scope[id] = b.assumptions[i];
    }
    bool closed = false;
    for (const auto& step : b.steps) {
      claim_id(step.id);
      Verdict v = check_step(step, scope, facts_, d_.hypotheses);
      if (!v.valid()) throw Located{v};
      ++steps_;
      closed = closed || step.conclusion.kind == Judgment::Kind::Contradiction;
      scope[step.id] = step.conclusion;
    }
    if (b.split) {
      const Split& s = *b.split;
      claim_id(s.id);
      std::vector<std::vector<Judgment>> cases;
      Verdict v = check_split(s, scope, facts_, &cases);
      if (!v.valid()) throw Located{v};
      if (cases.size() != s.branches.size()) {
        throw Located{fail_at(s.id, {Verdict::Status::Invalid, "split needs " + std::to_string(cases.size()) +
                                                                   " branches, found " +
                                                                   std::to_string(s.branches.size())})};
      }
      for (std::size_t i = 0; i < cases.size(); ++i) {
        if (s.branches[i].assumptions != cases[i]) {
          throw Located{fail_at(s.branches[i].id, {Verdict::Status::Invalid,
                                                   "branch assumptions do not match case " + std::to_string(i) +
                                                       " of split " + s.id})};
        }
      }
      for (const auto& child : s.branches) walk(child, scope);
      return;
    }
    ++leaves_;
    if (closed || goal_met(scope)) return;
    throw Located{fail_at(b.id, {Verdict::Status::Invalid, "branch does not reach " + d_.goal.str()})};
  }

  const Derivation& d_;
  FactBase facts_;
  std::set<std::string> ids_;
  std::size_t steps_ = 0;
  std::size_t leaves_ = 0;
};

}  // namespace

Verdict check_derivation(const Derivation& d, const FactBase& facts) {
  FactBase effective = facts;
  for (const auto& f : d.assumed_facts) {
    if (effective.find(f.id) != nullptr) {
      return fail_at(f.id, {Verdict::Status::Invalid, "assumed fact shadows a grounded fact"});
    }
    Fact assumed = f;
    assumed.status = FactStatus::Assumed;
    effective.add(std::move(assumed));
  }
  std::set<std::string> hyp_ids;
  for (const auto& h : d.hypotheses) {
    if (!hyp_ids.insert(h.id).second) return fail_at(h.id, {Verdict::Status::Invalid, "duplicate hypothesis id"});
  }
  return DerivationChecker(d, std::move(effective)).run();
}

}  // namespace ordercert
