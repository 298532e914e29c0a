#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordercert/free_word.hpp"
#include "ordercert/plane.hpp"

namespace ordercert {

enum class FactKind {
  Commute,      // first second = second first
  IdentityEq,   // first = second
  NonIdentity,  // first != 1
  NotInSet,     // first not in {second, second^-1}
};

struct FactStatement {
  FactKind kind = FactKind::Commute;
  FreeWord first;
  FreeWord second;

  static FactStatement commute(FreeWord u, FreeWord t) { return {FactKind::Commute, std::move(u), std::move(t)}; }
  static FactStatement identity(FreeWord lhs, FreeWord rhs) {
    return {FactKind::IdentityEq, std::move(lhs), std::move(rhs)};
  }
  static FactStatement non_identity(FreeWord u) { return {FactKind::NonIdentity, std::move(u), {}}; }
  static FactStatement not_in_set(FreeWord u, FreeWord v) {
    return {FactKind::NotInSet, std::move(u), std::move(v)};
  }

  std::string str() const;
  friend bool operator==(const FactStatement&, const FactStatement&) = default;
};

std::string_view fact_kind_name(FactKind k);
std::optional<FactKind> parse_fact_kind(std::string_view s);

enum class FactStatus {
  Verified,  // checked by exact computation
  Assumed,   // hypothesis of an abstract lemma
  Refuted,   // exact computation shows it false
  Unknown,   // could not be decided
};

std::string_view fact_status_name(FactStatus s);
std::optional<FactStatus> parse_fact_status(std::string_view s);

struct Fact {
  std::string id;
  FactStatement statement;
  FactStatus status = FactStatus::Unknown;
  std::string justification;

  bool citable() const { return status == FactStatus::Verified || status == FactStatus::Assumed; }
  friend bool operator==(const Fact&, const Fact&) = default;
};

class FactBase {
 public:
  /// Throws std::invalid_argument on a duplicate id.
  void add(Fact fact);
  bool erase(const std::string& id);
  const Fact* find(const std::string& id) const;
  std::vector<Fact> facts() const;
  std::size_t size() const { return facts_.size(); }

 private:
  std::map<std::string, Fact> facts_;
};

/// Binds atom names to concrete elements of H.
class AtomTable {
 public:
  void bind(std::string name, PlaneWord realization);
  bool contains(const std::string& name) const { return atoms_.count(name) != 0; }
  /// Throws std::out_of_range for unbound atoms.
  PlaneWord realize(const FreeWord& w) const;
  const std::map<std::string, PlaneWord>& atoms() const { return atoms_; }

 private:
  std::map<std::string, PlaneWord> atoms_;
};

/// Decides a statement by exact evaluation of its realization.
FactStatus ground(const FactStatement& s, const AtomTable& atoms, const WitnessSearch& search = {});

/// Atoms alpha, beta, gamma, delta, gamma_eta, delta_eta.
AtomTable h_atom_table(const GeneratorSet& gens = GeneratorSet::standard());

/// F1..F8 and their eta-images, each grounded against h_atom_table.
FactBase h_fact_base(const GeneratorSet& gens = GeneratorSet::standard(), const WitnessSearch& search = {});

/// The abstract hypotheses A1..A7 on atoms a, b, c, d, all Assumed.
std::vector<Fact> lemma_hypotheses();

}  // namespace ordercert
