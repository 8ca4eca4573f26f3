#include "pstab/interpolation.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <iterator>
#include <string>

namespace pstab {

namespace {

void require_same_domain(const FiltrationFunction& f0, const FiltrationFunction& f1) {
  if (f0.size() != f1.size())
    throw Error(Errc::domain_mismatch, std::to_string(f0.size()) + " vs " +
                                           std::to_string(f1.size()) + " values");
}

struct RawCrossing {
  Rational t;
  std::size_t i;
  std::size_t j;
};

// Crossings of row i against every j > i, appended to `out`.
void scan_row(const FiltrationFunction& f0, const FiltrationFunction& f1, std::size_t i,
              std::vector<RawCrossing>& out) {
  Rational d0, d1;
  for (std::size_t j = i + 1; j < f0.size(); ++j) {
    d0 = f0[i] - f0[j];
    d1 = f1[i] - f1[j];
    const int s0 = sgn(d0);
    const int s1 = sgn(d1);
    if (s0 == s1) continue;
    Rational t = d0 / (d0 - d1);
    if (s0 == 0 || s1 == 0 || t <= 0 || t >= 1)
      throw Error(Errc::non_unique_values, "crossing of simplices " + std::to_string(i) + " and " +
                                               std::to_string(j) + " at an endpoint");
    out.push_back({std::move(t), i, j});
  }
}

CrossingSchedule group(std::vector<RawCrossing> raw) {
  std::sort(raw.begin(), raw.end(), [](const RawCrossing& a, const RawCrossing& b) {
    if (const int c = cmp(a.t, b.t); c != 0) return c < 0;
    return std::pair{a.i, a.j} < std::pair{b.i, b.j};
  });
  CrossingSchedule s;
  for (auto& c : raw) {
    if (s.crossings.empty() || s.crossings.back().t != c.t)
      s.crossings.push_back({std::move(c.t), {}});
    s.crossings.back().pairs.emplace_back(c.i, c.j);
  }
  return s;
}

}  // namespace

FiltrationFunction interpolate(const FiltrationFunction& f0, const FiltrationFunction& f1,
                               const Rational& t) {
  require_same_domain(f0, f1);
  if (t < 0 || t > 1) throw Error(Errc::t_out_of_range, "t = " + to_fraction(t));
  if (t == 0) return f0;
  if (t == 1) return f1;
  const Rational s = 1 - t;
  std::vector<Rational> out(f0.size());
  for (std::size_t i = 0; i < f0.size(); ++i) out[i] = s * f0[i] + t * f1[i];
  return FiltrationFunction(std::move(out));
}

Rational sup_norm(const FiltrationFunction& f0, const FiltrationFunction& f1) {
  require_same_domain(f0, f1);
  Rational best = 0;
  for (std::size_t i = 0; i < f0.size(); ++i) {
    Rational d = abs(f0[i] - f1[i]);
    if (d > best) best = d;
  }
  return best;
}

std::vector<Rational> CrossingSchedule::times() const {
  std::vector<Rational> out;
  out.reserve(crossings.size());
  for (const auto& c : crossings) out.push_back(c.t);
  return out;
}

CrossingSchedule crossing_times(const FiltrationFunction& f0, const FiltrationFunction& f1,
                                Exec exec) {
  require_same_domain(f0, f1);
  for (int which = 0; which < 2; ++which) {
    if (auto tie = find_tie(which == 0 ? f0 : f1))
      throw Error(Errc::non_unique_values, "f" + std::to_string(which) + " ties simplices " +
                                               std::to_string(tie->first) + " and " +
                                               std::to_string(tie->second));
  }

  const auto n = static_cast<std::ptrdiff_t>(f0.size());
  std::vector<RawCrossing> raw;
  if (exec == Exec::serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) scan_row(f0, f1, static_cast<std::size_t>(i), raw);
    return group(std::move(raw));
  }

  std::vector<std::vector<RawCrossing>> per_thread(static_cast<std::size_t>(omp_get_max_threads()));
  std::exception_ptr failure;
#pragma omp parallel
  {
    auto& local = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      try {
        scan_row(f0, f1, static_cast<std::size_t>(i), local);
      } catch (...) {
#pragma omp critical(pstab_crossing_failure)
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
  for (auto& local : per_thread) {
    std::move(local.begin(), local.end(), std::back_inserter(raw));
  }
  return group(std::move(raw));
}

std::vector<Rational> breakpoints(const CrossingSchedule& schedule) {
  std::vector<Rational> out;
  out.reserve(schedule.size() + 2);
  out.emplace_back(0);
  for (const auto& c : schedule.crossings) out.push_back(c.t);
  out.emplace_back(1);
  return out;
}

std::vector<Rational> interval_midpoints(const CrossingSchedule& schedule) {
  const std::vector<Rational> b = breakpoints(schedule);
  std::vector<Rational> out;
  out.reserve(b.size() - 1);
  for (std::size_t i = 0; i + 1 < b.size(); ++i) out.push_back((b[i] + b[i + 1]) / 2);
  return out;
}

}  // namespace pstab
