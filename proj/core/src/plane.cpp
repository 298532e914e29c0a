#include "ordercert/plane.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace ordercert {

namespace {

// For a translation (x + a, y + b), the element with the coordinates swapped:
// (x + b, y + a). Converts between the V and H readings of a translation.
SkewElement swap_translation(const SkewElement& t) {
  return {PLMap::translation(t.shift.knots().front().y), PLCocycle::constant(t.x_part.knots().front().y)};
}

LetterKind other(LetterKind k) { return k == LetterKind::V ? LetterKind::H : LetterKind::V; }

}  // namespace

Point PlaneLetter::operator()(const Point& p) const {
  return kind == LetterKind::V ? element(p) : HSkewElement{element}(p);
}

Point evaluate_letters(std::span<const PlaneLetter> letters, const Point& p) {
  Point q = p;
  for (const auto& l : letters) q = l(q);
  return q;
}

std::vector<PlaneLetter> simplify(std::vector<PlaneLetter> letters) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<PlaneLetter> out;
    out.reserve(letters.size());
    for (auto& l : letters) {
      if (l.element.is_identity()) {
        changed = true;
        continue;
      }
      if (l.kind == LetterKind::H && l.element.is_translation()) {
        l = {LetterKind::V, swap_translation(l.element)};
      }
      if (!out.empty() && out.back().kind == l.kind) {
        out.back().element = compose(out.back().element, l.element);
        changed = true;
        continue;
      }
      out.push_back(std::move(l));
    }
    // A translation flanked only by H letters joins the H copy.
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i].kind != LetterKind::V || !out[i].element.is_translation()) continue;
      const SkewElement as_h = swap_translation(out[i].element);
      if (i > 0 && out[i - 1].kind == LetterKind::H) {
        out[i - 1].element = compose(out[i - 1].element, as_h);
      } else if (i + 1 < out.size() && out[i + 1].kind == LetterKind::H) {
        out[i + 1].element = compose(as_h, out[i + 1].element);
      } else {
        continue;
      }
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
      changed = true;
      break;
    }
    letters = std::move(out);
  }
  return letters;
}

PlaneWord::PlaneWord(std::vector<PlaneLetter> letters) : letters_(simplify(std::move(letters))) {}

PlaneWord PlaneWord::vertical(SkewElement g) { return PlaneWord({{LetterKind::V, std::move(g)}}); }

PlaneWord PlaneWord::horizontal(SkewElement inner) { return PlaneWord({{LetterKind::H, std::move(inner)}}); }

PlaneWord operator*(const PlaneWord& a, const PlaneWord& b) {
  std::vector<PlaneLetter> letters = a.letters_;
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return PlaneWord(std::move(letters));
}

PlaneWord inverse(const PlaneWord& w) {
  std::vector<PlaneLetter> letters;
  letters.reserve(w.letters().size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    letters.push_back({it->kind, inverse(it->element)});
  }
  return PlaneWord(std::move(letters));
}

PlaneWord power(const PlaneWord& w, long n) {
  PlaneWord base = n < 0 ? inverse(w) : w;
  unsigned long e = n < 0 ? 0UL - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
  PlaneWord result;
  while (e != 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

PlaneWord conjugate(const PlaneWord& w, const PlaneWord& by) { return inverse(by) * w * by; }

std::string_view plane_symbol_name(PlaneSymbol s) {
  switch (s) {
    case PlaneSymbol::Alpha: return "alpha";
    case PlaneSymbol::Beta: return "beta";
    case PlaneSymbol::Gamma: return "gamma";
    case PlaneSymbol::Delta: return "delta";
    case PlaneSymbol::GammaEta: return "gamma_eta";
    case PlaneSymbol::DeltaEta: return "delta_eta";
  }
  return "?";
}

std::optional<PlaneSymbol> parse_plane_symbol(std::string_view text) {
  if (auto s = parse_symbol(text)) return static_cast<PlaneSymbol>(*s);
  if (text == "ch" || text == "gamma_eta" || text == "γη" || text == "γ^η") return PlaneSymbol::GammaEta;
  if (text == "dh" || text == "delta_eta" || text == "δη" || text == "δ^η") return PlaneSymbol::DeltaEta;
  return std::nullopt;
}

PlaneWord h_generator(PlaneSymbol s, const GeneratorSet& gens) {
  switch (s) {
    case PlaneSymbol::Alpha: return PlaneWord::vertical(gens.alpha);
    case PlaneSymbol::Beta: return PlaneWord::vertical(gens.beta);
    case PlaneSymbol::Gamma: return PlaneWord::vertical(gens.gamma);
    case PlaneSymbol::Delta: return PlaneWord::vertical(gens.delta);
    case PlaneSymbol::GammaEta: return PlaneWord::horizontal(gens.gamma);
    case PlaneSymbol::DeltaEta: return PlaneWord::horizontal(gens.delta);
  }
  throw std::invalid_argument("unknown plane generator");
}

PlaneWord eta_conjugate(const PlaneWord& w) {
  std::vector<PlaneLetter> letters;
  letters.reserve(w.letters().size());
  for (const auto& l : w.letters()) letters.push_back({other(l.kind), l.element});
  return PlaneWord(std::move(letters));
}

EqualityVerdict equal_or_unknown(const PlaneWord& a, const PlaneWord& b, const WitnessSearch& search) {
  using Kind = EqualityVerdict::Kind;
  if (a.letters() == b.letters()) return {Kind::Equal, std::nullopt};

  auto separates = [&](const Point& p) { return a(p) != b(p); };

  for (long q = 1; q <= search.max_denominator; ++q) {
    const long lim = search.grid_bound * q;
    for (long i = -lim; i <= lim; ++i) {
      for (long j = -lim; j <= lim; ++j) {
        if (std::gcd(std::gcd(std::labs(i), std::labs(j)), q) != 1) continue;  // seen at a smaller q
        Point p{Rational(i, q), Rational(j, q)};
        if (separates(p)) return {Kind::Distinct, std::move(p)};
      }
    }
  }

  std::mt19937_64 rng(search.seed);
  std::uniform_int_distribution<long> den(1, std::max(1L, search.random_max_denominator));
  for (int k = 0; k < search.random_points; ++k) {
    const long dx = den(rng);
    const long dy = den(rng);
    std::uniform_int_distribution<long> nx(-search.grid_bound * dx, search.grid_bound * dx);
    std::uniform_int_distribution<long> ny(-search.grid_bound * dy, search.grid_bound * dy);
    Point p{Rational(nx(rng), dx), Rational(ny(rng), dy)};
    if (separates(p)) return {Kind::Distinct, std::move(p)};
  }
  return {Kind::Unknown, std::nullopt};
}

PlaneWord mirrored_epsilon(const GeneratorSet& gens) {
  const PlaneWord beta = h_generator(PlaneSymbol::Beta, gens);
  const PlaneWord c = h_generator(PlaneSymbol::GammaEta, gens);
  const PlaneWord d = h_generator(PlaneSymbol::DeltaEta, gens);
  PlaneWord eps;
  for (long k = 0; k < 6; ++k) eps = eps * conjugate(c, d * power(beta, k));
  return eps;
}

RelationReport verify_mirrored_relations(const GeneratorSet& gens, const WitnessSearch& search) {
  using Kind = EqualityVerdict::Kind;
  const PlaneWord A = h_generator(PlaneSymbol::Alpha, gens);
  const PlaneWord B = h_generator(PlaneSymbol::Beta, gens);
  const PlaneWord C = h_generator(PlaneSymbol::GammaEta, gens);
  const PlaneWord D = h_generator(PlaneSymbol::DeltaEta, gens);
  const PlaneWord identity;

  auto equal = [&](const PlaneWord& x, const PlaneWord& y) {
    return equal_or_unknown(x, y, search).kind == Kind::Equal;
  };
  auto distinct = [&](const PlaneWord& x, const PlaneWord& y) {
    return equal_or_unknown(x, y, search).kind == Kind::Distinct;
  };

  std::vector<PlaneWord> factors;
  for (long k = 0; k < 6; ++k) factors.push_back(conjugate(C, D * power(B, k)));
  bool factors_commute = true;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      factors_commute = factors_commute && equal(factors[i] * factors[j], factors[j] * factors[i]);
    }
  }

  RelationReport report;
  auto add = [&](std::string id, std::string statement, bool holds) {
    report.entries.push_back({std::move(id), std::move(statement), holds});
  };
  add("F1.eta", "beta alpha = alpha beta", equal(B * A, A * B));
  add("F2.eta", "alpha gamma_eta = gamma_eta alpha", equal(A * C, C * A));
  add("F3.eta", "alpha delta_eta = delta_eta alpha", equal(A * D, D * A));
  add("F4.eta", "gamma_eta^(beta^3) = gamma_eta^-1", equal(conjugate(C, power(B, 3)), inverse(C)));
  add("F5.eta", "delta_eta^(beta^3) = delta_eta^-1", equal(conjugate(D, power(B, 3)), inverse(D)));
  add("F6.eta", "epsilon^eta = alpha^-36", equal(mirrored_epsilon(gens), power(A, -36)));
  add("F6a.eta", "gamma_eta^(delta_eta beta^6) = gamma_eta^delta_eta",
      equal(conjugate(C, D * power(B, 6)), conjugate(C, D)));
  add("F6b.eta", "the six conjugates gamma_eta^(delta_eta beta^k) pairwise commute", factors_commute);
  add("F7.eta", "alpha, beta, gamma_eta, delta_eta are not the identity",
      distinct(A, identity) && distinct(B, identity) && distinct(C, identity) && distinct(D, identity));
  add("F8.eta", "beta is neither alpha nor alpha^-1", distinct(B, A) && distinct(B, inverse(A)));
  return report;
}

}  // namespace ordercert
