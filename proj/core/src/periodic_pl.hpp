#pragma once

// Shared machinery for knot lists over one period [0, 1). `rise` is the
// increase of the function across one period: 1 for PLMap, 0 for PLCocycle.

#include <vector>

#include "ordercert/pl_map.hpp"

namespace ordercert::detail {

using Knots = std::vector<Knot>;

/// Reduces x mod 1, sorts, and merges duplicates. Throws on conflicts.
Knots normalize(Knots points, const Rational& rise);

/// Drops knots lying on the line through their neighbours. An affine result
/// is stored as the single knot (0, f(0)).
Knots canonicalize(Knots sorted, const Rational& rise);

/// Value of the periodic extension at x.
Rational interpolate(const Knots& knots, const Rational& rise, const Rational& x);

/// x-coordinates of a canonical knot list that are genuine breakpoints.
std::vector<Rational> essential_xs(const Knots& canonical);

/// Sorted, deduplicated union of fractional parts, always containing 0.
std::vector<Rational> merge_xs(std::vector<Rational> xs);

}  // namespace ordercert::detail
