#pragma once

#include <span>
#include <string>
#include <vector>

#include "pstab/bottleneck.hpp"
#include "pstab/exec.hpp"
#include "pstab/interpolation.hpp"
#include "pstab/persistence.hpp"

namespace pstab {

// The matching between Dgm(f_lo) and Dgm(f_hi) obtained by running the
// reduction under the single order induced at the interval midpoint and
// pairing points with the same pivot pair.
struct IntervalCertificate {
  Rational t_lo;
  Rational t_hi;
  TotalOrder order_used;
  Diagram lo;  // Dgm(f_{t_lo}) under order_used
  Diagram hi;  // Dgm(f_{t_hi}) under order_used
  Matching matching;
  Extended cost;
  // (t_hi - t_lo) * ||f0 - f1||
  Rational bound;
};

// Throws Error(order_not_constant) if some pair swaps inside the interval,
// Error(non_unique_values) if the midpoint has ties, and
// Error(internal_proof_violation) if the endpoint pair lists differ.
IntervalCertificate interval_matching(const SimplicialComplex& k, const FiltrationFunction& f0,
                                      const FiltrationFunction& f1, const Rational& t_lo,
                                      const Rational& t_hi);

// Zero-cost bijection between two diagrams of the same function computed
// under different orders. Within each dimension, points are sorted by
// (birth, death, order position of the birth simplex) and matched
// positionally. Throws Error(multiset_mismatch) if the value multisets differ.
Matching breakpoint_matching(const Diagram& left, const Diagram& right);

// Relational composition of a chain of bijections D_0 -> D_1 -> ... -> D_m.
// Throws Error(chain_mismatch) if a link is not a bijection or sizes differ.
Matching compose_matchings(std::span<const Matching> chain);

struct StabilityReport {
  Rational sup_norm;
  CrossingSchedule schedule;
  std::vector<IntervalCertificate> intervals;
  std::vector<Extended> breakpoint_costs;  // one per crossing; all zero
  Diagram dgm0;
  Diagram dgm1;
  Matching composed;
  Extended composed_cost;
  Extended link_cost_sum;
  Rational telescoped_bound;  // sum of interval bounds; equals sup_norm
  Extended exact_bottleneck;
  bool holds = false;
};

// Runs the interpolation argument end to end and checks every inequality
// exactly:
//   each interval cost <= its bound, each breakpoint cost == 0,
//   composed cost <= sum of link costs, composed cost <= sup norm,
//   exact bottleneck <= composed cost, sum of bounds == sup norm.
// f0 and f1 must be monotone with unique values. A failed check throws
// Error(internal_proof_violation).
StabilityReport verify_stability(const SimplicialComplex& k, const FiltrationFunction& f0,
                                 const FiltrationFunction& f1, Exec exec = Exec::parallel);

// Human-readable report, or "key value" lines when `machine` is set.
std::string format_report(const StabilityReport& r, bool machine);

}  // namespace pstab
