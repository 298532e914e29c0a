#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordercert/pl_cocycle.hpp"
#include "ordercert/pl_map.hpp"

namespace ordercert {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Plane homeomorphism (x, y) -> (phi(x), y + psi(x)).
///
/// Each vertical line is carried onto a vertical line by a translation. The
/// group law is postfix, like the rest of the library: compose(g, h) sends p
/// to h(g(p)).
struct SkewElement {
  PLMap x_part;
  PLCocycle shift;

  static SkewElement identity() { return {}; }
  bool is_identity() const { return x_part.is_identity() && shift.is_zero(); }
  /// True when the element is (x, y) -> (x + a, y + b).
  bool is_translation() const { return x_part.is_translation() && shift.is_constant(); }

  Point operator()(const Point& p) const { return {x_part(p.x), p.y + shift(p.x)}; }

  friend bool operator==(const SkewElement&, const SkewElement&) = default;
};

SkewElement compose(const SkewElement& first, const SkewElement& second);
SkewElement inverse(const SkewElement& g);
SkewElement power(const SkewElement& g, long n);
/// h^-1 g h, written g^h.
SkewElement conjugate(const SkewElement& g, const SkewElement& h);
bool commutes(const SkewElement& g, const SkewElement& h);
inline Point evaluate(const SkewElement& g, const Point& p) { return g(p); }

/// x-coordinates (mod 1) where either component fails to be differentiable.
std::vector<Rational> breakpoint_xs(const SkewElement& g);

enum class Symbol { Alpha, Beta, Gamma, Delta };

std::string_view symbol_name(Symbol s);
/// Accepts ASCII aliases (a, b, c, d), full names, and Greek letters.
std::optional<Symbol> parse_symbol(std::string_view text);

/// The generators alpha, beta, gamma, delta. `standard()` is the construction
/// used throughout; other sets exist for perturbation experiments.
struct GeneratorSet {
  SkewElement alpha;
  SkewElement beta;
  SkewElement gamma;
  SkewElement delta;

  static GeneratorSet standard();
  const SkewElement& operator[](Symbol s) const;
};

/// The base map of delta: 1/3 -> 1/6 and 2/3 -> 5/6, equivariant.
PLMap delta_base();
/// The vertical profile of gamma: 3 at integers, -3 at half-integers.
PLCocycle gamma_profile();

SkewElement generator(Symbol s);

/// Freely reduced word in alpha, beta, gamma, delta.
class GeneratorWord {
 public:
  struct Letter {
    Symbol symbol;
    long exponent;
    friend bool operator==(const Letter&, const Letter&) = default;
  };

  GeneratorWord() = default;
  explicit GeneratorWord(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::string str() const;

  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;

 private:
  std::vector<Letter> letters_;
};

SkewElement word_to_element(const GeneratorWord& w, const GeneratorSet& gens = GeneratorSet::standard());

/// The six conjugates gamma^(delta alpha^k), k = 0..5, in order.
std::array<SkewElement, 6> epsilon_factors(const GeneratorSet& gens = GeneratorSet::standard());
/// Their product, computed by exact component algebra.
SkewElement compute_epsilon(const GeneratorSet& gens = GeneratorSet::standard());

struct Relation {
  std::string id;
  std::string statement;
  bool holds = false;
};

/// Ordered, named list of verified identities.
struct RelationReport {
  std::vector<Relation> entries;

  bool all_hold() const;
  const Relation* find(std::string_view id) const;
};

/// F1..F8 (with F6a, F6b) for the given generators.
RelationReport verify_relations(const GeneratorSet& gens = GeneratorSet::standard());

}  // namespace ordercert
