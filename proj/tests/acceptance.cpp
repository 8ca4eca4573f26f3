// Standalone acceptance run: one PASS/FAIL line per criterion, nonzero exit
// status if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "pstab/bottleneck.hpp"
#include "pstab/interpolation.hpp"
#include "pstab/stability.hpp"
#include "support.hpp"

namespace {

using namespace pstab;
namespace t = pstab::testing;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string first_failure;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) first_failure = what;
    pass = pass && ok;
  }
};

constexpr std::size_t kCorpusSize = 500;

// Instances shared by criteria 1-3 and 8: at most 40 simplices, dimension <= 3.
std::vector<InstanceFile> corpus() {
  std::vector<InstanceFile> out;
  out.reserve(kCorpusSize);
  for (std::size_t i = 0; i < kCorpusSize; ++i) out.push_back(t::bounded_instance(i, 40, 3));
  return out;
}

Outcome stability_sandwich(const std::vector<InstanceFile>& instances,
                           std::vector<StabilityReport>& reports) {
  Outcome o;
  std::size_t max_size = 0;
  int max_dim = 0;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& inst = instances[i];
    max_size = std::max(max_size, inst.complex.size());
    max_dim = std::max(max_dim, inst.complex.max_dim());
    try {
      reports.push_back(verify_stability(inst.complex, inst.functions[0], inst.functions[1]));
    } catch (const Error& e) {
      o.require(false, "instance " + std::to_string(i) + ": " + e.what());
      reports.emplace_back();
      continue;
    }
    const auto& r = reports.back();
    o.require(r.holds, "instance " + std::to_string(i) + " does not hold");
    o.require(r.exact_bottleneck <= r.composed_cost,
              "instance " + std::to_string(i) + ": exact > composed");
    o.require(r.composed_cost <= Extended(r.sup_norm),
              "instance " + std::to_string(i) + ": composed > sup norm");
  }
  o.require(max_size <= 40 && max_dim <= 3, "corpus out of bounds");
  o.detail = std::to_string(instances.size()) + " instances, max " + std::to_string(max_size) +
             " simplices, max dim " + std::to_string(max_dim);
  return o;
}

Outcome interval_certificates(const std::vector<StabilityReport>& reports) {
  Outcome o;
  std::size_t intervals = 0;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    o.require(!r.intervals.empty(), "instance " + std::to_string(i) + " has no certificates");
    for (const auto& c : r.intervals) {
      ++intervals;
      o.require(c.bound == (c.t_hi - c.t_lo) * r.sup_norm,
                "instance " + std::to_string(i) + ": bound is not (t_hi - t_lo) * sup norm");
      o.require(c.cost <= Extended(c.bound),
                "instance " + std::to_string(i) + ": certificate cost " + to_token(c.cost) +
                    " > bound " + to_token(c.bound));
    }
  }
  o.detail = std::to_string(intervals) + " certificates";
  return o;
}

Outcome crossing_bound(const std::vector<InstanceFile>& instances) {
  Outcome o;
  std::size_t most = 0;
  std::size_t midpoints = 0;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& inst = instances[i];
    const std::size_t n = inst.complex.size();
    const auto s = crossing_times(inst.functions[0], inst.functions[1]);
    most = std::max(most, s.size());
    o.require(s.size() <= n * (n - 1) / 2, "instance " + std::to_string(i) + " exceeds n(n-1)/2");
    const auto bps = breakpoints(s);
    const auto mids = interval_midpoints(s);
    for (std::size_t j = 0; j < mids.size(); ++j) {
      ++midpoints;
      o.require(has_unique_values(interpolate(inst.functions[0], inst.functions[1], mids[j])),
                "instance " + std::to_string(i) + ": tie at midpoint " + to_fraction(mids[j]));
      o.require(is_order_constant(inst.functions[0], inst.functions[1], bps[j], bps[j + 1]),
                "instance " + std::to_string(i) + ": order changes inside an interval");
    }
  }
  o.detail = "max " + std::to_string(most) + " breakpoints, " + std::to_string(midpoints) +
             " midpoints unique";
  return o;
}

Outcome counts_invariant() {
  Outcome o;
  constexpr int complexes = 12;
  constexpr int filtrations = 25;
  for (int c = 0; c < complexes; ++c) {
    const auto k = t::bounded_complex(10000 + static_cast<unsigned>(c), 40, 3);
    t::Rng rng(static_cast<unsigned>(c));
    const auto reference = diagram(k, t::random_monotone(k, rng, 0, 10)).counts_by_dim();
    for (int f = 0; f < filtrations; ++f) {
      const auto g = (f % 2 == 0) ? t::random_monotone(k, rng, 0, 3 + f)
                                  : t::random_unique_monotone(k, rng, -5, 5);
      o.require(diagram(k, g).counts_by_dim() == reference,
                "complex " + std::to_string(c) + " filtration " + std::to_string(f));
    }
  }
  o.detail = std::to_string(complexes) + " complexes x " + std::to_string(filtrations) +
             " filtrations";
  return o;
}

Outcome diagonal_below_bijection() {
  Outcome o;
  constexpr int pairs = 250;
  for (int i = 0; i < pairs; ++i) {
    const auto k = t::bounded_complex(20000 + static_cast<unsigned>(i), 40, 3);
    t::Rng rng(static_cast<unsigned>(i) + 77);
    const auto a = diagram(k, t::random_monotone(k, rng, 0, 8));
    const auto b = diagram(k, t::random_monotone(k, rng, 0, 8));
    const Extended diag = bottleneck_diagonal(a, b).cost;
    const Extended bij = bottleneck_bijection(a, b).cost;
    o.require(diag <= bij, "pair " + std::to_string(i) + ": " + to_token(diag) + " > " +
                               to_token(bij));
  }
  o.detail = std::to_string(pairs) + " pairs";
  return o;
}

Outcome tie_break_independence() {
  Outcome o;
  constexpr int filtrations = 120;
  constexpr int orders = 8;
  int found = 0;
  for (unsigned seed = 0; found < filtrations; ++seed) {
    const auto k = t::bounded_complex(30000 + seed, 40, 3);
    t::Rng rng(seed);
    const auto f = t::random_monotone(k, rng, 0, 2);
    if (has_unique_values(f)) continue;
    ++found;
    const auto reference = t::value_points(diagram(k, f));
    for (int j = 0; j < orders; ++j) {
      const auto ord = t::random_compatible_order(k, f, rng);
      o.require(t::value_points(diagram_with_order(k, f, ord)) == reference,
                "filtration " + std::to_string(found) + " order " + std::to_string(j));
    }
  }
  o.detail = std::to_string(filtrations) + " tied filtrations x " + std::to_string(orders) +
             " orders";
  return o;
}

Outcome oracles() {
  Outcome o;
  constexpr int bottleneck_trials = 300;
  t::Rng rng(424242);
  for (int i = 0; i < bottleneck_trials; ++i) {
    const auto [a, b] = t::random_diagram_pair(rng, 3, 7);
    const Extended fast = bottleneck_bijection(a, b).cost;
    const Extended slow = brute_force_bottleneck(a, b);
    o.require(fast == slow, "diagram pair " + std::to_string(i) + ": " + to_token(fast) +
                                " vs " + to_token(slow));
  }

  constexpr int rank_trials = 150;
  std::size_t queries = 0;
  for (int i = 0; i < rank_trials; ++i) {
    const auto k = t::bounded_complex(40000 + static_cast<unsigned>(i), 12, 3);
    t::Rng frng(static_cast<unsigned>(i));
    const auto f = t::random_monotone(k, frng, 0, 4);
    const auto d = diagram(k, f);
    std::vector<Rational> values = f.values();
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (int dim = 0; dim <= k.max_dim(); ++dim)
      for (std::size_t a = 0; a < values.size(); ++a)
        for (std::size_t b = a; b < values.size(); ++b) {
          std::size_t count = 0;
          for (const auto& p : d.points)
            if (p.dim == dim && p.birth <= values[a] && p.death > Extended(values[b])) ++count;
          ++queries;
          o.require(count == t::persistent_betti(k, f, dim, values[a], values[b]),
                    "complex " + std::to_string(i) + " dim " + std::to_string(dim));
        }
  }
  o.detail = std::to_string(bottleneck_trials) + " brute-force trials, " +
             std::to_string(rank_trials) + " rank-oracle complexes (" + std::to_string(queries) +
             " queries)";
  return o;
}

Outcome determinism(const std::vector<InstanceFile>& instances,
                    const std::vector<StabilityReport>& reports) {
  Outcome o;
  constexpr std::size_t sample = 100;
  for (std::size_t i = 0; i < sample; ++i) {
    const auto& inst = instances[i];
    for (const auto& f : inst.functions) {
      const auto a = diagram(inst.complex, f);
      const auto b = diagram(inst.complex, f);
      o.require(a.pivot_pairs == b.pivot_pairs, "pair list differs on instance " + std::to_string(i));
      o.require(format_diagram(inst.complex, a) == format_diagram(inst.complex, b),
                "diagram text differs on instance " + std::to_string(i));
    }
    const auto serial =
        verify_stability(inst.complex, inst.functions[0], inst.functions[1], Exec::serial);
    const auto again =
        verify_stability(inst.complex, inst.functions[0], inst.functions[1], Exec::parallel);
    for (bool machine : {true, false}) {
      const std::string text = format_report(reports[i], machine);
      o.require(text == format_report(serial, machine) && text == format_report(again, machine),
                "report differs on instance " + std::to_string(i));
    }
    o.require(serial.composed == again.composed, "composed matching differs on " + std::to_string(i));
  }
  o.detail = std::to_string(sample) + " instances, diagrams and reports byte-identical";
  return o;
}

// f1 = f0 + eps * o where o takes the distinct values k/(n-1), k = 0..n-1, so
// max |f1 - f0| is exactly eps. Random placements are tried first; the rank
// placement always keeps f1 monotone and unique.
FiltrationFunction perturb(const SimplicialComplex& k, const FiltrationFunction& f0,
                           const Rational& eps, t::Rng& rng) {
  const std::size_t n = f0.size();
  std::vector<Rational> offsets(n);
  for (std::size_t i = 0; i < n; ++i) {
    offsets[i] = Rational(static_cast<long>(i), static_cast<long>(n - 1));
    offsets[i].canonicalize();
  }
  auto build = [&](const std::vector<std::size_t>& slot) {
    std::vector<Rational> v(n);
    for (std::size_t s = 0; s < n; ++s) v[s] = f0[s] + eps * offsets[slot[s]];
    return FiltrationFunction(v);
  };
  std::vector<std::size_t> slot(n);
  for (int attempt = 0; attempt < 20; ++attempt) {
    for (std::size_t i = 0; i < n; ++i) slot[i] = i;
    std::shuffle(slot.begin(), slot.end(), rng);
    auto f1 = build(slot);
    if (validate_filtration(k, f1).ok() && has_unique_values(f1)) return f1;
  }
  const TotalOrder ord = total_order(k, f0);
  for (std::size_t s = 0; s < n; ++s) slot[s] = ord.position_of(s);
  return build(slot);
}

Outcome perturbation() {
  Outcome o;
  constexpr int per_eps = 60;
  std::string worst;
  for (const char* text : {"1/10", "1/100", "1/1000"}) {
    const Rational eps = t::Q(text);
    Extended largest;
    for (int i = 0; i < per_eps; ++i) {
      const auto inst = t::bounded_instance(50000 + static_cast<unsigned>(i), 40, 3);
      t::Rng rng(static_cast<unsigned>(i));
      const auto& f0 = inst.functions[0];
      const auto f1 = perturb(inst.complex, f0, eps, rng);
      const auto r = verify_stability(inst.complex, f0, f1);
      o.require(r.sup_norm == eps, std::string("sup norm differs from ") + text);
      o.require(r.exact_bottleneck <= Extended(eps),
                std::string("bottleneck ") + to_token(r.exact_bottleneck) + " > " + text);
      largest = max(largest, r.exact_bottleneck);
    }
    worst += std::string(worst.empty() ? "" : ", ") + "eps " + text + " max " + to_token(largest);
  }
  o.detail = worst;
  return o;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  int failures = 0;

  auto report = [&](int id, const char* name, const std::function<Outcome()>& run) {
    const auto t0 = clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(clock::now() - t0).count();
    std::printf("criterion %d %-28s %s  %s  (%.1fs)\n", id, name, o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), secs);
    if (!o.pass) {
      std::printf("    first failure: %s\n", o.first_failure.c_str());
      ++failures;
    }
    std::fflush(stdout);
  };

  const auto instances = corpus();
  std::vector<StabilityReport> reports;
  reports.reserve(instances.size());

  report(1, "stability-sandwich", [&] { return stability_sandwich(instances, reports); });
  report(2, "interval-certificates", [&] { return interval_certificates(reports); });
  report(3, "crossing-bound", [&] { return crossing_bound(instances); });
  report(4, "point-counts-invariant", counts_invariant);
  report(5, "diagonal-below-bijection", diagonal_below_bijection);
  report(6, "tie-break-independence", tie_break_independence);
  report(7, "oracle-equivalence", oracles);
  report(8, "determinism", [&] { return determinism(instances, reports); });
  report(9, "perturbation", perturbation);

  const double total = std::chrono::duration<double>(clock::now() - start).count();
  std::printf("%d/9 criteria passed in %.1fs\n", 9 - failures, total);
  return failures == 0 ? 0 : 1;
}
