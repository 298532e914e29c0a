#include "ordercert/sign_search.hpp"

#include <set>
#include <stdexcept>

namespace ordercert {

FiniteGroupOracle::FiniteGroupOracle(std::vector<std::vector<std::size_t>> table,
                                     std::map<std::string, std::size_t> atoms)
    : table_(std::move(table)), atoms_(std::move(atoms)) {
  const std::size_t n = table_.size();
  if (n == 0) throw std::invalid_argument("empty multiplication table");
  inverse_.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table_[i].size() != n) throw std::invalid_argument("multiplication table is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (table_[i][j] >= n) throw std::invalid_argument("multiplication table entry out of range");
      if (table_[i][j] == 0) inverse_[i] = j;
    }
    if (inverse_[i] == n) throw std::invalid_argument("element without inverse");
  }
  for (const auto& [name, e] : atoms_)
    if (e >= n) throw std::invalid_argument("atom " + name + " out of range");
}

FiniteGroupOracle FiniteGroupOracle::z2(const std::string& atom) { return {{{0, 1}, {1, 0}}, {{atom, 1}}}; }

bool FiniteGroupOracle::is_identity(const FreeWord& w) const {
  std::size_t acc = 0;
  for (const auto& s : w.syllables()) {
    const auto it = atoms_.find(s.atom);
    if (it == atoms_.end()) throw std::out_of_range("unbound atom " + s.atom);
    const std::size_t e = s.exponent > 0 ? it->second : inverse_[it->second];
    for (long k = 0; k < std::abs(s.exponent); ++k) acc = table_[acc][e];
  }
  return acc == 0;
}

LatticeOracle::LatticeOracle(std::map<std::string, std::pair<long, long>> atoms) : atoms_(std::move(atoms)) {}

LatticeOracle LatticeOracle::standard() { return LatticeOracle({{"x", {1, 0}}, {"y", {0, 1}}}); }

std::pair<long, long> LatticeOracle::value(const FreeWord& w) const {
  std::pair<long, long> v{0, 0};
  for (const auto& s : w.syllables()) {
    const auto it = atoms_.find(s.atom);
    if (it == atoms_.end()) throw std::out_of_range("unbound atom " + s.atom);
    v.first += s.exponent * it->second.first;
    v.second += s.exponent * it->second.second;
  }
  return v;
}

bool LatticeOracle::is_identity(const FreeWord& w) const { return value(w) == std::pair<long, long>{0, 0}; }

SkewOracle::SkewOracle(const GeneratorSet& gens) {
  for (Symbol s : {Symbol::Alpha, Symbol::Beta, Symbol::Gamma, Symbol::Delta})
    atoms_.emplace(std::string(symbol_name(s)), gens[s]);
}

bool SkewOracle::is_identity(const FreeWord& w) const {
  SkewElement acc;
  for (const auto& s : w.syllables()) {
    const auto it = atoms_.find(s.atom);
    if (it == atoms_.end()) throw std::out_of_range("atom " + s.atom + " is not a skew generator");
    acc = compose(acc, power(it->second, s.exponent));
  }
  return acc.is_identity();
}

PlaneOracle::PlaneOracle(AtomTable atoms, WitnessSearch search)
    : atoms_(std::move(atoms)), search_(search) {}

bool PlaneOracle::is_identity(const FreeWord& w) const {
  const auto verdict = equal_or_unknown(atoms_.realize(w), PlaneWord(), search_);
  if (verdict.kind == EqualityVerdict::Kind::Unknown)
    throw std::runtime_error("cannot decide whether " + w.str() + " is the identity");
  return verdict.kind == EqualityVerdict::Kind::Equal;
}

FreeWord SignedProduct::word(const std::vector<FreeWord>& atoms) const {
  FreeWord w;
  for (std::size_t i : factors) w = w * power(atoms.at(i), signs.at(i));
  return w;
}

namespace {

std::vector<int> signs_of(std::size_t mask, std::size_t n) {
  std::vector<int> signs(n);
  for (std::size_t i = 0; i < n; ++i) signs[i] = (mask >> i) & 1 ? -1 : 1;
  return signs;
}

struct Node {
  FreeWord word;
  std::vector<std::size_t> factors;
};

// Shortest identity product of the signed atoms, or nothing.
std::optional<std::vector<std::size_t>> identity_product(const std::vector<FreeWord>& signed_atoms,
                                                         const SearchLimits& limits, const IdentityOracle& oracle) {
  std::vector<Node> seen;
  std::vector<Node> layer{{FreeWord(), {}}};
  for (std::size_t len = 1; len <= limits.depth; ++len) {
    std::vector<Node> next;
    for (const auto& node : layer) {
      for (std::size_t i = 0; i < signed_atoms.size(); ++i) {
        Node child{node.word * signed_atoms[i], node.factors};
        child.factors.push_back(i);
        if (oracle.is_identity(child.word)) return child.factors;
        bool fresh = true;
        for (const auto& old : seen) {
          if (oracle.equal(old.word, child.word)) {
            fresh = false;
            break;
          }
        }
        if (!fresh) continue;
        if (seen.size() >= limits.max_products) return std::nullopt;
        seen.push_back(child);
        next.push_back(std::move(child));
      }
    }
    if (next.empty()) return std::nullopt;  // the closure is finite and misses the identity
    layer = std::move(next);
  }
  return std::nullopt;
}

}  // namespace

std::optional<NonLOWitness> sign_search(const std::vector<FreeWord>& atoms, const SearchLimits& limits,
                                        const IdentityOracle& oracle) {
  if (atoms.empty() || atoms.size() >= 8 * sizeof(std::size_t)) return std::nullopt;
  for (const auto& a : atoms)
    if (oracle.is_identity(a)) throw std::invalid_argument("atom " + a.str() + " is the identity");

  NonLOWitness witness{atoms, {}};
  const std::size_t n = atoms.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    const auto signs = signs_of(mask, n);
    std::vector<FreeWord> signed_atoms;
    for (std::size_t i = 0; i < n; ++i) signed_atoms.push_back(power(atoms[i], signs[i]));
    auto product = identity_product(signed_atoms, limits, oracle);
    if (!product) return std::nullopt;
    witness.products.push_back({signs, std::move(*product)});
  }
  return witness;
}

bool verify_nonlo_witness(const NonLOWitness& w, const IdentityOracle& oracle) {
  const std::size_t n = w.atoms.size();
  if (n == 0 || n >= 8 * sizeof(std::size_t)) return false;
  for (const auto& a : w.atoms)
    if (oracle.is_identity(a)) return false;
  std::set<std::vector<int>> covered;
  for (const auto& p : w.products) {
    if (p.signs.size() != n || p.factors.empty()) return false;
    for (int s : p.signs)
      if (s != 1 && s != -1) return false;
    for (std::size_t i : p.factors)
      if (i >= n) return false;
    if (!oracle.is_identity(p.word(w.atoms))) return false;
    covered.insert(p.signs);
  }
  return covered.size() == (std::size_t{1} << n);
}

}  // namespace ordercert
