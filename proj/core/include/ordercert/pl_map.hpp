#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ordercert/rational.hpp"

namespace ordercert {

/// A vertex (x, value) of a piecewise-linear graph.
struct Knot {
  Rational x;
  Rational y;

  friend bool operator==(const Knot&, const Knot&) = default;
};

/// Piecewise-linear homeomorphism of the line commuting with x -> x + 1.
///
/// One period is stored as knots with x in [0, 1); the function is the linear
/// interpolant of those knots extended by phi(x + 1) = phi(x) + 1. The knot
/// list is canonical: every stored knot is a genuine breakpoint, except that a
/// translation x -> x + c is stored as the single knot (0, c). Two maps are
/// equal as functions iff their knot lists are identical.
///
/// Composition is postfix throughout the library: compose(f, g) applies f
/// first, then g, i.e. x -> g(f(x)).
class PLMap {
 public:
  /// The identity map.
  PLMap();

  /// Interpolating map through the given points. Each (x, y) is first reduced
  /// to (x mod 1, y - floor(x)). Throws std::invalid_argument if the points
  /// are empty, contain inconsistent duplicates, or do not describe a strictly
  /// increasing bijection.
  static PLMap from_points(std::vector<Knot> points);
  static PLMap translation(const Rational& amount);

  Rational operator()(const Rational& x) const;

  const std::vector<Knot>& knots() const { return knots_; }
  bool is_translation() const { return knots_.size() == 1; }
  bool is_identity() const;
  /// Non-differentiable points in [0, 1); empty for translations.
  std::vector<Rational> breakpoint_xs() const;

  friend bool operator==(const PLMap&, const PLMap&) = default;

 private:
  explicit PLMap(std::vector<Knot> canonical) : knots_(std::move(canonical)) {}
  std::vector<Knot> knots_;
};

PLMap compose(const PLMap& first, const PLMap& second);
PLMap inverse(const PLMap& map);
inline Rational evaluate(const PLMap& map, const Rational& x) { return map(x); }

}  // namespace ordercert
