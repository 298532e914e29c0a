#include "ordercert/pl_cocycle.hpp"

#include "periodic_pl.hpp"

namespace ordercert {

namespace {

const Rational kFlat{0};

PLCocycle sample(std::vector<Rational> xs, auto&& f) {
  std::vector<Knot> points;
  for (auto& x : detail::merge_xs(std::move(xs))) {
    Rational v = f(x);
    points.push_back({std::move(x), std::move(v)});
  }
  return PLCocycle::from_points(std::move(points));
}

}  // namespace

PLCocycle::PLCocycle() : knots_{{Rational(0), Rational(0)}} {}

PLCocycle PLCocycle::from_points(std::vector<Knot> points) {
  return PLCocycle(detail::canonicalize(detail::normalize(std::move(points), kFlat), kFlat));
}

PLCocycle PLCocycle::constant(const Rational& value) { return PLCocycle({{Rational(0), value}}); }

Rational PLCocycle::operator()(const Rational& x) const { return detail::interpolate(knots_, kFlat, x); }

bool PLCocycle::is_zero() const { return is_constant() && knots_.front().y.is_zero(); }

std::vector<Rational> PLCocycle::breakpoint_xs() const { return detail::essential_xs(knots_); }

PLCocycle operator+(const PLCocycle& a, const PLCocycle& b) {
  if (a.is_constant() && b.is_constant()) {
    return PLCocycle::constant(a.knots().front().y + b.knots().front().y);
  }
  std::vector<Rational> xs = a.breakpoint_xs();
  for (const auto& x : b.breakpoint_xs()) xs.push_back(x);
  return sample(std::move(xs), [&](const Rational& x) { return a(x) + b(x); });
}

PLCocycle operator-(const PLCocycle& a) {
  std::vector<Knot> points;
  points.reserve(a.knots().size());
  for (const auto& k : a.knots()) points.push_back({k.x, -k.y});
  return PLCocycle::from_points(std::move(points));
}

PLCocycle pullback(const PLCocycle& psi, const PLMap& phi) {
  if (psi.is_constant()) return psi;
  std::vector<Rational> xs = phi.breakpoint_xs();
  const PLMap back = inverse(phi);
  for (const auto& u : psi.breakpoint_xs()) xs.push_back(back(u));
  return sample(std::move(xs), [&](const Rational& x) { return psi(phi(x)); });
}

}  // namespace ordercert
