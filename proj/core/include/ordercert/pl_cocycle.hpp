#pragma once

#include <vector>

#include "ordercert/pl_map.hpp"

namespace ordercert {

/// Period-1 continuous piecewise-linear function on the line.
///
/// Stored like PLMap over one period [0, 1), but extended by psi(x + 1) =
/// psi(x). Constant functions are stored as the single knot (0, c).
class PLCocycle {
 public:
  /// The zero function.
  PLCocycle();

  /// Interpolating periodic function; (x, v) is reduced to (x mod 1, v).
  /// Throws std::invalid_argument on empty input or inconsistent duplicates.
  static PLCocycle from_points(std::vector<Knot> points);
  static PLCocycle constant(const Rational& value);

  Rational operator()(const Rational& x) const;

  const std::vector<Knot>& knots() const { return knots_; }
  bool is_constant() const { return knots_.size() == 1; }
  bool is_zero() const;
  std::vector<Rational> breakpoint_xs() const;

  friend bool operator==(const PLCocycle&, const PLCocycle&) = default;

 private:
  explicit PLCocycle(std::vector<Knot> canonical) : knots_(std::move(canonical)) {}
  std::vector<Knot> knots_;
};

PLCocycle operator+(const PLCocycle& a, const PLCocycle& b);
PLCocycle operator-(const PLCocycle& a);
inline PLCocycle operator-(const PLCocycle& a, const PLCocycle& b) { return a + (-b); }

/// x -> psi(phi(x)).
PLCocycle pullback(const PLCocycle& psi, const PLMap& phi);

inline Rational evaluate(const PLCocycle& psi, const Rational& x) { return psi(x); }

}  // namespace ordercert
