#include "periodic_pl.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordercert::detail {

Knots normalize(Knots points, const Rational& rise) {
  if (points.empty()) throw std::invalid_argument("piecewise-linear function needs at least one point");
  for (auto& p : points) {
    const Rational shift = p.x.floor();
    p.x -= shift;
    p.y -= shift * rise;
  }
  std::sort(points.begin(), points.end(), [](const Knot& a, const Knot& b) { return a.x < b.x; });
  Knots out;
  out.reserve(points.size());
  for (auto& p : points) {
    if (!out.empty() && out.back().x == p.x) {
      if (out.back().y != p.y) {
        throw std::invalid_argument("inconsistent values at x = " + p.x.str() + " (mod 1): " +
                                    out.back().y.str() + " vs " + p.y.str());
      }
      continue;
    }
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

// Knot i of the periodic extension, for any integer i.
Knot extended(const Knots& k, const Rational& rise, long i) {
  const long n = static_cast<long>(k.size());
  long q = i / n;
  long r = i % n;
  if (r < 0) {
    r += n;
    q -= 1;
  }
  return {k[r].x + Rational(q), k[r].y + Rational(q) * rise};
}

Rational slope(const Knot& a, const Knot& b) { return (b.y - a.y) / (b.x - a.x); }

}  // namespace

Knots canonicalize(Knots sorted, const Rational& rise) {
  const long n = static_cast<long>(sorted.size());
  std::vector<Rational> slopes;
  slopes.reserve(n);
  for (long i = 0; i < n; ++i) {
    slopes.push_back(slope(extended(sorted, rise, i), extended(sorted, rise, i + 1)));
  }
  Knots out;
  for (long i = 0; i < n; ++i) {
    const Rational& before = slopes[(i + n - 1) % n];
    if (before != slopes[i]) out.push_back(sorted[i]);
  }
  if (out.empty()) {
    // Affine: all segments share a slope.
    out.push_back({Rational(0), interpolate(sorted, rise, Rational(0))});
  }
  return out;
}

Rational interpolate(const Knots& knots, const Rational& rise, const Rational& x) {
  const Rational period = x.floor();
  const Rational f = x - period;
  auto it = std::upper_bound(knots.begin(), knots.end(), f,
                             [](const Rational& v, const Knot& k) { return v < k.x; });
  const long hi = static_cast<long>(it - knots.begin());
  const Knot a = extended(knots, rise, hi - 1);
  const Knot b = extended(knots, rise, hi);
  const Rational value = a.y + (f - a.x) * (b.y - a.y) / (b.x - a.x);
  return value + period * rise;
}

std::vector<Rational> essential_xs(const Knots& canonical) {
  std::vector<Rational> xs;
  if (canonical.size() < 2) return xs;
  xs.reserve(canonical.size());
  for (const auto& k : canonical) xs.push_back(k.x);
  return xs;
}

std::vector<Rational> merge_xs(std::vector<Rational> xs) {
  for (auto& x : xs) x = x.frac();
  xs.emplace_back(0);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace ordercert::detail
