#include "ordercert/pl_map.hpp"

#include <stdexcept>

#include "periodic_pl.hpp"

namespace ordercert {

namespace {

const Rational kRise{1};

}  // namespace

PLMap::PLMap() : knots_{{Rational(0), Rational(0)}} {}

PLMap PLMap::from_points(std::vector<Knot> points) {
  auto knots = detail::normalize(std::move(points), kRise);
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (!(knots[i - 1].y < knots[i].y)) {
      throw std::invalid_argument("PL map values must increase strictly with x (not a bijection)");
    }
  }
  if (!(knots.back().y < knots.front().y + kRise)) {
    throw std::invalid_argument("PL map wraps non-monotonically across the period (not a bijection)");
  }
  return PLMap(detail::canonicalize(std::move(knots), kRise));
}

PLMap PLMap::translation(const Rational& amount) { return PLMap({{Rational(0), amount}}); }

Rational PLMap::operator()(const Rational& x) const { return detail::interpolate(knots_, kRise, x); }

bool PLMap::is_identity() const { return is_translation() && knots_.front().y.is_zero(); }

std::vector<Rational> PLMap::breakpoint_xs() const { return detail::essential_xs(knots_); }

PLMap compose(const PLMap& first, const PLMap& second) {
  if (first.is_translation() && second.is_translation()) {
    return PLMap::translation(first.knots().front().y + second.knots().front().y);
  }
  // The composite can only bend at breakpoints of `first` or at preimages
  // under `first` of breakpoints of `second`.
  std::vector<Rational> xs = first.breakpoint_xs();
  if (!second.is_translation()) {
    const PLMap back = inverse(first);
    for (const auto& u : second.breakpoint_xs()) xs.push_back(back(u));
  }
  std::vector<Knot> points;
  for (auto& x : detail::merge_xs(std::move(xs))) {
    Rational y = second(first(x));
    points.push_back({std::move(x), std::move(y)});
  }
  return PLMap::from_points(std::move(points));
}

PLMap inverse(const PLMap& map) {
  std::vector<Knot> swapped;
  swapped.reserve(map.knots().size());
  for (const auto& k : map.knots()) swapped.push_back({k.y, k.x});
  return PLMap::from_points(std::move(swapped));
}

}  // namespace ordercert
