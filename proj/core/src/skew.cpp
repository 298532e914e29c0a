#include "ordercert/skew.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordercert {

SkewElement compose(const SkewElement& first, const SkewElement& second) {
  return {compose(first.x_part, second.x_part), first.shift + pullback(second.shift, first.x_part)};
}

SkewElement inverse(const SkewElement& g) {
  PLMap back = inverse(g.x_part);
  PLCocycle shift = -pullback(g.shift, back);
  return {std::move(back), std::move(shift)};
}

SkewElement power(const SkewElement& g, long n) {
  SkewElement base = n < 0 ? inverse(g) : g;
  unsigned long e = n < 0 ? 0UL - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
  SkewElement result;
  while (e != 0) {
    if (e & 1UL) result = compose(result, base);
    e >>= 1;
    if (e != 0) base = compose(base, base);
  }
  return result;
}

SkewElement conjugate(const SkewElement& g, const SkewElement& h) {
  return compose(compose(inverse(h), g), h);
}

bool commutes(const SkewElement& g, const SkewElement& h) { return compose(g, h) == compose(h, g); }

std::vector<Rational> breakpoint_xs(const SkewElement& g) {
  std::vector<Rational> xs = g.x_part.breakpoint_xs();
  for (const auto& x : g.shift.breakpoint_xs()) xs.push_back(x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

std::string_view symbol_name(Symbol s) {
  switch (s) {
    case Symbol::Alpha: return "alpha";
    case Symbol::Beta: return "beta";
    case Symbol::Gamma: return "gamma";
    case Symbol::Delta: return "delta";
  }
  return "?";
}

std::optional<Symbol> parse_symbol(std::string_view text) {
  if (text == "a" || text == "alpha" || text == "α") return Symbol::Alpha;
  if (text == "b" || text == "beta" || text == "β") return Symbol::Beta;
  if (text == "c" || text == "gamma" || text == "γ") return Symbol::Gamma;
  if (text == "d" || text == "delta" || text == "δ") return Symbol::Delta;
  return std::nullopt;
}

PLMap delta_base() {
  return PLMap::from_points({{Rational(1, 3), Rational(1, 6)}, {Rational(2, 3), Rational(5, 6)}});
}

PLCocycle gamma_profile() {
  return PLCocycle::from_points({{Rational(0), Rational(3)}, {Rational(1, 2), Rational(-3)}});
}

GeneratorSet GeneratorSet::standard() {
  GeneratorSet g;
  g.alpha = {PLMap::translation(Rational(1, 6)), PLCocycle()};
  g.beta = {PLMap(), PLCocycle::constant(Rational(1, 6))};
  g.gamma = {PLMap(), gamma_profile()};
  g.delta = {delta_base(), PLCocycle()};
  return g;
}

const SkewElement& GeneratorSet::operator[](Symbol s) const {
  switch (s) {
    case Symbol::Alpha: return alpha;
    case Symbol::Beta: return beta;
    case Symbol::Gamma: return gamma;
    case Symbol::Delta: return delta;
  }
  throw std::invalid_argument("unknown generator symbol");
}

SkewElement generator(Symbol s) { return GeneratorSet::standard()[s]; }

GeneratorWord::GeneratorWord(std::vector<Letter> letters) {
  for (const auto& l : letters) {
    if (l.exponent == 0) continue;
    if (!letters_.empty() && letters_.back().symbol == l.symbol) {
      letters_.back().exponent += l.exponent;
      if (letters_.back().exponent == 0) letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

std::string GeneratorWord::str() const {
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += symbol_name(l.symbol);
    if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
  }
  return out;
}

SkewElement word_to_element(const GeneratorWord& w, const GeneratorSet& gens) {
  SkewElement result;
  for (const auto& l : w.letters()) result = compose(result, power(gens[l.symbol], l.exponent));
  return result;
}

std::array<SkewElement, 6> epsilon_factors(const GeneratorSet& gens) {
  const SkewElement base = conjugate(gens.gamma, gens.delta);
  std::array<SkewElement, 6> out;
  for (long k = 0; k < 6; ++k) out[k] = conjugate(base, power(gens.alpha, k));
  return out;
}

SkewElement compute_epsilon(const GeneratorSet& gens) {
  SkewElement eps;
  for (const auto& f : epsilon_factors(gens)) eps = compose(eps, f);
  return eps;
}

bool RelationReport::all_hold() const {
  return std::all_of(entries.begin(), entries.end(), [](const Relation& r) { return r.holds; });
}

const Relation* RelationReport::find(std::string_view id) const {
  for (const auto& r : entries) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

RelationReport verify_relations(const GeneratorSet& gens) {
  const auto& [a, b, c, d] = gens;
  const SkewElement a3 = power(a, 3);
  const auto factors = epsilon_factors(gens);

  bool factors_commute = true;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      factors_commute = factors_commute && commutes(factors[i], factors[j]);
    }
  }

  RelationReport report;
  auto add = [&](std::string id, std::string statement, bool holds) {
    report.entries.push_back({std::move(id), std::move(statement), holds});
  };
  add("F1", "alpha beta = beta alpha", commutes(a, b));
  add("F2", "beta gamma = gamma beta", commutes(b, c));
  add("F3", "beta delta = delta beta", commutes(b, d));
  add("F4", "gamma^(alpha^3) = gamma^-1", conjugate(c, a3) == inverse(c));
  add("F5", "delta^(alpha^3) = delta^-1", conjugate(d, a3) == inverse(d));
  add("F6", "epsilon = beta^-36", compute_epsilon(gens) == power(b, -36));
  add("F6a", "gamma^(delta alpha^6) = gamma^delta",
      conjugate(c, compose(d, power(a, 6))) == conjugate(c, d));
  add("F6b", "the six conjugates gamma^(delta alpha^k) pairwise commute", factors_commute);
  add("F7", "alpha, beta, gamma, delta are not the identity",
      !a.is_identity() && !b.is_identity() && !c.is_identity() && !d.is_identity());
  add("F8", "alpha is neither beta nor beta^-1", a != b && a != inverse(b));
  return report;
}

}  // namespace ordercert
