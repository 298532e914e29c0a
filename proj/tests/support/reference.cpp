#include "reference.hpp"

#include <cstdlib>

namespace ordercert::testing {

namespace {

const Rational kHalf(1, 2);
const Rational kThird(1, 3);
const Rational kTwoThirds(2, 3);
const Rational kSixth(1, 6);
const Rational kFiveSixths(5, 6);

}  // namespace

// 3 at integers, -3 at half-integers, linear between.
Rational ref_gamma0(const Rational& x) {
  const Rational f = x - Rational(x.floor());
  if (f <= kHalf) return Rational(3) - Rational(12) * f;
  return Rational(-3) + Rational(12) * (f - kHalf);
}

// n -> n, n + 1/3 -> n + 1/6, n + 2/3 -> n + 5/6, n + 1 -> n + 1.
Rational ref_delta0(const Rational& x) {
  const Rational n(x.floor());
  const Rational f = x - n;
  if (f <= kThird) return n + f / Rational(2);
  if (f <= kTwoThirds) return n + kSixth + Rational(2) * (f - kThird);
  return n + kFiveSixths + (f - kTwoThirds) / Rational(2);
}

Rational ref_delta0_inverse(const Rational& y) {
  const Rational n(y.floor());
  const Rational g = y - n;
  if (g <= kSixth) return n + Rational(2) * g;
  if (g <= kFiveSixths) return n + kThird + (g - kSixth) / Rational(2);
  return n + kTwoThirds + Rational(2) * (g - kFiveSixths);
}

Point ref_apply(PlaneSymbol s, int sign, const Point& p) {
  const Rational k(sign);
  switch (s) {
    case PlaneSymbol::Alpha: return {p.x + k * kSixth, p.y};
    case PlaneSymbol::Beta: return {p.x, p.y + k * kSixth};
    case PlaneSymbol::Gamma: return {p.x, p.y + k * ref_gamma0(p.x)};
    case PlaneSymbol::Delta: return {sign > 0 ? ref_delta0(p.x) : ref_delta0_inverse(p.x), p.y};
    // eta g eta with eta(x, y) = (y, x).
    case PlaneSymbol::GammaEta: return {p.x + k * ref_gamma0(p.y), p.y};
    case PlaneSymbol::DeltaEta: return {p.x, sign > 0 ? ref_delta0(p.y) : ref_delta0_inverse(p.y)};
  }
  return p;
}

Point ref_eval(const std::vector<RefLetter>& word, Point p) {
  for (const auto& l : word) {
    const int sign = l.exponent > 0 ? 1 : -1;
    for (long i = 0; i < std::labs(l.exponent); ++i) p = ref_apply(l.symbol, sign, p);
  }
  return p;
}

}  // namespace ordercert::testing
