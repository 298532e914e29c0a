#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ordercert/derivation.hpp"
#include "ordercert/facts.hpp"

namespace ordercert {

struct Verdict {
  enum class Status { Valid, Invalid, UnknownFacts };

  Status status = Status::Valid;
  std::string location;  // id of the first failing step, split, or branch
  std::string reason;
  std::size_t steps_checked = 0;
  std::size_t leaves = 0;

  bool valid() const { return status == Status::Valid; }
  std::string str() const;
};

std::string_view verdict_status_name(Verdict::Status s);

/// Judgments available to a step, keyed by step or assumption id.
using JudgmentScope = std::map<std::string, Judgment>;

/// Checks a single rule instance: premises must be in scope and match the
/// rule's shape, cited facts must be citable and discharge the side
/// conditions, and the conclusion must be exactly the rule's output.
Verdict check_step(const Step& step, const JudgmentScope& scope, const FactBase& facts,
                   std::span<const Hypothesis> hypotheses = {});

/// Checks a split and returns, through `expected`, the assumptions each
/// branch must carry (in order).
Verdict check_split(const Split& split, const JudgmentScope& scope, const FactBase& facts,
                    std::vector<std::vector<Judgment>>* expected = nullptr);

/// Checks a whole derivation depth-first, reporting the first failure.
/// The derivation's own assumed facts are added to `facts` for the check.
Verdict check_derivation(const Derivation& d, const FactBase& facts);

}  // namespace ordercert
