#include "ordercert/facts.hpp"

#include <stdexcept>

namespace ordercert {

std::string FactStatement::str() const {
  switch (kind) {
    case FactKind::Commute: return "commute(" + first.str() + ", " + second.str() + ")";
    case FactKind::IdentityEq: return first.str() + " = " + second.str();
    case FactKind::NonIdentity: return first.str() + " != 1";
    case FactKind::NotInSet: return first.str() + " not in {" + second.str() + ", (" + second.str() + ")^-1}";
  }
  return "?";
}

std::string_view fact_kind_name(FactKind k) {
  switch (k) {
    case FactKind::Commute: return "commute";
    case FactKind::IdentityEq: return "identity";
    case FactKind::NonIdentity: return "non_identity";
    case FactKind::NotInSet: return "not_in_set";
  }
  return "?";
}

std::optional<FactKind> parse_fact_kind(std::string_view s) {
  if (s == "commute") return FactKind::Commute;
  if (s == "identity") return FactKind::IdentityEq;
  if (s == "non_identity") return FactKind::NonIdentity;
  if (s == "not_in_set") return FactKind::NotInSet;
  return std::nullopt;
}

std::string_view fact_status_name(FactStatus s) {
  switch (s) {
    case FactStatus::Verified: return "verified";
    case FactStatus::Assumed: return "assumed";
    case FactStatus::Refuted: return "refuted";
    case FactStatus::Unknown: return "unknown";
  }
  return "?";
}

std::optional<FactStatus> parse_fact_status(std::string_view s) {
  if (s == "verified") return FactStatus::Verified;
  if (s == "assumed") return FactStatus::Assumed;
  if (s == "refuted") return FactStatus::Refuted;
  if (s == "unknown") return FactStatus::Unknown;
  return std::nullopt;
}

void FactBase::add(Fact fact) {
  const std::string id = fact.id;
  if (!facts_.emplace(id, std::move(fact)).second) throw std::invalid_argument("duplicate fact id " + id);
}

bool FactBase::erase(const std::string& id) { return facts_.erase(id) != 0; }

const Fact* FactBase::find(const std::string& id) const {
  auto it = facts_.find(id);
  return it == facts_.end() ? nullptr : &it->second;
}

std::vector<Fact> FactBase::facts() const {
  std::vector<Fact> out;
  out.reserve(facts_.size());
  for (const auto& [id, f] : facts_) out.push_back(f);
  return out;
}

void AtomTable::bind(std::string name, PlaneWord realization) { atoms_[std::move(name)] = std::move(realization); }

PlaneWord AtomTable::realize(const FreeWord& w) const {
  PlaneWord out;
  for (const auto& s : w.syllables()) {
    auto it = atoms_.find(s.atom);
    if (it == atoms_.end()) throw std::out_of_range("unbound atom '" + s.atom + "'");
    out = out * power(it->second, s.exponent);
  }
  return out;
}

FactStatus ground(const FactStatement& s, const AtomTable& atoms, const WitnessSearch& search) {
  using Kind = EqualityVerdict::Kind;
  auto verdict = [&](const FreeWord& x, const FreeWord& y) {
    return equal_or_unknown(atoms.realize(x), atoms.realize(y), search).kind;
  };
  auto from_equality = [](Kind k) {
    return k == Kind::Equal ? FactStatus::Verified
                            : (k == Kind::Distinct ? FactStatus::Refuted : FactStatus::Unknown);
  };
  auto from_distinctness = [](Kind k) {
    return k == Kind::Distinct ? FactStatus::Verified
                               : (k == Kind::Equal ? FactStatus::Refuted : FactStatus::Unknown);
  };
  switch (s.kind) {
    case FactKind::Commute: return from_equality(verdict(s.first * s.second, s.second * s.first));
    case FactKind::IdentityEq: return from_equality(verdict(s.first, s.second));
    case FactKind::NonIdentity: return from_distinctness(verdict(s.first, FreeWord()));
    case FactKind::NotInSet: {
      const FactStatus a = from_distinctness(verdict(s.first, s.second));
      const FactStatus b = from_distinctness(verdict(s.first, inverse(s.second)));
      if (a == FactStatus::Refuted || b == FactStatus::Refuted) return FactStatus::Refuted;
      if (a == FactStatus::Unknown || b == FactStatus::Unknown) return FactStatus::Unknown;
      return FactStatus::Verified;
    }
  }
  return FactStatus::Unknown;
}

AtomTable h_atom_table(const GeneratorSet& gens) {
  AtomTable t;
  for (auto s : {PlaneSymbol::Alpha, PlaneSymbol::Beta, PlaneSymbol::Gamma, PlaneSymbol::Delta,
                 PlaneSymbol::GammaEta, PlaneSymbol::DeltaEta}) {
    t.bind(std::string(plane_symbol_name(s)), h_generator(s, gens));
  }
  return t;
}

namespace {

FreeWord W(std::string_view text) { return FreeWord::parse(text); }

std::vector<std::pair<std::string, FactStatement>> h_statements() {
  const FreeWord alpha = W("alpha"), beta = W("beta"), gamma = W("gamma"), delta = W("delta");
  const FreeWord gamma_eta = W("gamma_eta"), delta_eta = W("delta_eta");
  return {
      {"F1", FactStatement::commute(alpha, beta)},
      {"F2", FactStatement::commute(beta, gamma)},
      {"F3", FactStatement::commute(beta, delta)},
      {"F4", FactStatement::identity(conjugate(gamma, power(alpha, 3)), inverse(gamma))},
      {"F5", FactStatement::identity(conjugate(delta, power(alpha, 3)), inverse(delta))},
      {"F6", FactStatement::identity(epsilon_word(alpha, gamma, delta), power(beta, -36))},
      {"F7.alpha", FactStatement::non_identity(alpha)},
      {"F7.beta", FactStatement::non_identity(beta)},
      {"F7.gamma", FactStatement::non_identity(gamma)},
      {"F7.delta", FactStatement::non_identity(delta)},
      {"F8", FactStatement::not_in_set(alpha, beta)},
      {"F1.eta", FactStatement::commute(beta, alpha)},
      {"F2.eta", FactStatement::commute(alpha, gamma_eta)},
      {"F3.eta", FactStatement::commute(alpha, delta_eta)},
      {"F4.eta", FactStatement::identity(conjugate(gamma_eta, power(beta, 3)), inverse(gamma_eta))},
      {"F5.eta", FactStatement::identity(conjugate(delta_eta, power(beta, 3)), inverse(delta_eta))},
      {"F6.eta", FactStatement::identity(epsilon_word(beta, gamma_eta, delta_eta), power(alpha, -36))},
      {"F7.eta.gamma_eta", FactStatement::non_identity(gamma_eta)},
      {"F7.eta.delta_eta", FactStatement::non_identity(delta_eta)},
      {"F8.eta", FactStatement::not_in_set(beta, alpha)},
  };
}

}  // namespace

FactBase h_fact_base(const GeneratorSet& gens, const WitnessSearch& search) {
  const AtomTable atoms = h_atom_table(gens);
  FactBase base;
  for (auto& [id, statement] : h_statements()) {
    const FactStatus status = ground(statement, atoms, search);
    base.add({id, statement, status, "exact evaluation in H"});
  }
  return base;
}

std::vector<Fact> lemma_hypotheses() {
  const FreeWord a = W("a"), b = W("b"), c = W("c"), d = W("d");
  auto assumed = [](std::string id, FactStatement s) {
    return Fact{std::move(id), std::move(s), FactStatus::Assumed, "hypothesis"};
  };
  return {
      assumed("A1", FactStatement::commute(a, b)),
      assumed("A2", FactStatement::commute(b, c)),
      assumed("A3", FactStatement::commute(b, d)),
      assumed("A4", FactStatement::identity(conjugate(c, power(a, 3)), inverse(c))),
      assumed("A5", FactStatement::identity(conjugate(d, power(a, 3)), inverse(d))),
      assumed("A7.a", FactStatement::non_identity(a)),
      assumed("A7.b", FactStatement::non_identity(b)),
      assumed("A7.c", FactStatement::non_identity(c)),
      assumed("A7.d", FactStatement::non_identity(d)),
  };
}

}  // namespace ordercert
