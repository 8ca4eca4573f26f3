#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pstab/complex.hpp"
#include "pstab/exec.hpp"

namespace pstab {

// f_t(s) = (1 - t) f0(s) + t f1(s), exactly.
// Throws Error(domain_mismatch) or Error(t_out_of_range) for t outside [0, 1].
FiltrationFunction interpolate(const FiltrationFunction& f0, const FiltrationFunction& f1,
                               const Rational& t);

// max_s |f0(s) - f1(s)|; 0 for empty functions.
Rational sup_norm(const FiltrationFunction& f0, const FiltrationFunction& f1);

struct Crossing {
  Rational t;
  // Simplex index pairs (i < j) with f_t(i) == f_t(j), ascending.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

struct CrossingSchedule {
  // Strictly increasing in t, every t in (0, 1).
  std::vector<Crossing> crossings;

  std::size_t size() const noexcept { return crossings.size(); }
  bool empty() const noexcept { return crossings.empty(); }
  std::vector<Rational> times() const;
};

// All parameters in (0, 1) where two interpolated values coincide.
// Requires unique values in both f0 and f1; throws Error(non_unique_values)
// naming the function and the tied pair otherwise.
CrossingSchedule crossing_times(const FiltrationFunction& f0, const FiltrationFunction& f1,
                                Exec exec = Exec::parallel);

// 0, t(1), ..., t(k), 1.
std::vector<Rational> breakpoints(const CrossingSchedule& schedule);

// Midpoint of every interval between consecutive breakpoints.
std::vector<Rational> interval_midpoints(const CrossingSchedule& schedule);

}  // namespace pstab
