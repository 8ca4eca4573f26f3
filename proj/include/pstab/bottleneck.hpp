#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pstab/persistence.hpp"

namespace pstab {

// Pairs of point indices (into D0.points, D1.points). Points listed in
// `diagonal0` / `diagonal1` are matched to their diagonal projection; both are
// empty for a bijection.
struct Matching {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::size_t> diagonal0;
  std::vector<std::size_t> diagonal1;

  bool is_bijection() const noexcept { return diagonal0.empty() && diagonal1.empty(); }
  friend bool operator==(const Matching&, const Matching&) = default;
};

// L-infinity distance max(|b - b'|, |d - d'|) with |inf - inf| = 0 and
// finite-vs-infinite = +inf. Throws Error(dimension_mismatch).
Extended pair_cost(const DiagramPoint& p, const DiagramPoint& q);

// (d - b) / 2; +inf for essential points.
Extended diagonal_cost(const DiagramPoint& p);

// Max cost over the matching; 0 for an empty matching. Throws
// Error(invalid_matching) unless every point of both diagrams is covered
// exactly once and matched points share a dimension.
Extended matching_cost(const Diagram& d0, const Diagram& d1, const Matching& m);

struct BottleneckResult {
  Extended cost;
  Matching matching;  // an optimal witness
};

// Exact minimum over dimension-respecting bijections. Throws
// Error(count_mismatch) when some dimension has different point counts or
// essential counts in the two diagrams.
BottleneckResult bottleneck_bijection(const Diagram& d0, const Diagram& d1);

// Exact bottleneck distance where points may also be matched to the
// diagonal. Essential points must still be matched to essential points; if
// their counts differ the distance is +inf and the witness is empty.
BottleneckResult bottleneck_diagonal(const Diagram& d0, const Diagram& d1);

// Enumerates every dimension-respecting bijection. Test oracle only.
// Throws Error(count_mismatch), or Error(too_large) above 8 points in a dimension.
Extended brute_force_bottleneck(const Diagram& d0, const Diagram& d1);

}  // namespace pstab
