#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordercert/facts.hpp"
#include "ordercert/free_word.hpp"
#include "ordercert/skew.hpp"

namespace ordercert {

/// Decides whether a word in named atoms is the identity.
class IdentityOracle {
 public:
  virtual ~IdentityOracle() = default;
  virtual bool is_identity(const FreeWord& w) const = 0;
  bool equal(const FreeWord& a, const FreeWord& b) const { return is_identity(a * inverse(b)); }
};

/// Atoms are elements of a finite group given by its multiplication table,
/// table[i][j] = i * j, with element 0 the identity.
class FiniteGroupOracle : public IdentityOracle {
 public:
  FiniteGroupOracle(std::vector<std::vector<std::size_t>> table, std::map<std::string, std::size_t> atoms);
  /// The group of order two, with atom g the non-trivial element.
  static FiniteGroupOracle z2(const std::string& atom = "g");
  bool is_identity(const FreeWord& w) const override;

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::map<std::string, std::size_t> atoms_;
};

/// Atoms are vectors in Z^2.
class LatticeOracle : public IdentityOracle {
 public:
  explicit LatticeOracle(std::map<std::string, std::pair<long, long>> atoms);
  /// x = (1, 0), y = (0, 1).
  static LatticeOracle standard();
  bool is_identity(const FreeWord& w) const override;
  std::pair<long, long> value(const FreeWord& w) const;

 private:
  std::map<std::string, std::pair<long, long>> atoms_;
};

/// Atoms alpha..delta realized as skew elements, compared exactly.
class SkewOracle : public IdentityOracle {
 public:
  explicit SkewOracle(const GeneratorSet& gens = GeneratorSet::standard());
  bool is_identity(const FreeWord& w) const override;

 private:
  std::map<std::string, SkewElement> atoms_;
};

/// Atoms realized in H through an AtomTable. Throws std::runtime_error when
/// equality cannot be decided.
class PlaneOracle : public IdentityOracle {
 public:
  explicit PlaneOracle(AtomTable atoms = h_atom_table(), WitnessSearch search = {});
  bool is_identity(const FreeWord& w) const override;

 private:
  AtomTable atoms_;
  WitnessSearch search_;
};

/// One sign assignment and a product of signed atoms equal to the identity.
struct SignedProduct {
  std::vector<int> signs;             // +1 or -1 per atom
  std::vector<std::size_t> factors;   // indices into the atom list

  FreeWord word(const std::vector<FreeWord>& atoms) const;
  friend bool operator==(const SignedProduct&, const SignedProduct&) = default;
};

/// Atoms such that every sign assignment admits an identity product of the
/// signed atoms. No left-order can make all signed atoms positive.
struct NonLOWitness {
  std::vector<FreeWord> atoms;
  std::vector<SignedProduct> products;
  friend bool operator==(const NonLOWitness&, const NonLOWitness&) = default;
};

struct SearchLimits {
  std::size_t depth = 4;            // longest product tried
  std::size_t max_products = 4096;  // distinct elements kept per sign vector
};

/// Breadth-first closure of the signed atoms for each of the 2^n sign
/// assignments. Returns a witness only if every assignment reaches the
/// identity within the limits; otherwise nothing. Throws
/// std::invalid_argument if an atom is the identity.
std::optional<NonLOWitness> sign_search(const std::vector<FreeWord>& atoms, const SearchLimits& limits,
                                        const IdentityOracle& oracle);

/// Re-checks atoms, coverage of all sign vectors, and every product.
bool verify_nonlo_witness(const NonLOWitness& w, const IdentityOracle& oracle);

}  // namespace ordercert
