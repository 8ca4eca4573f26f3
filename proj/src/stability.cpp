#include "pstab/stability.hpp"

#include <algorithm>
#include <exception>
#include <map>

namespace pstab {

namespace {

std::vector<std::size_t> as_permutation(const Matching& m, std::size_t link) {
  if (!m.is_bijection())
    throw Error(Errc::chain_mismatch, "link " + std::to_string(link) + " uses the diagonal");
  const std::size_t n = m.pairs.size();
  std::vector<std::size_t> map(n, n);
  std::vector<bool> hit(n, false);
  for (const auto& [a, b] : m.pairs) {
    if (a >= n || b >= n || map[a] != n || hit[b])
      throw Error(Errc::chain_mismatch, "link " + std::to_string(link) + " is not a bijection");
    map[a] = b;
    hit[b] = true;
  }
  return map;
}

std::string show(const Rational& r) {
  if (has_terminating_decimal(r)) return to_token(r);
  return to_decimal(r) + " (" + to_fraction(r) + ")";
}

std::string show(const Extended& e) { return e.is_infinite() ? "inf" : show(e.value()); }

}  // namespace

IntervalCertificate interval_matching(const SimplicialComplex& k, const FiltrationFunction& f0,
                                      const FiltrationFunction& f1, const Rational& t_lo,
                                      const Rational& t_hi) {
  if (!(t_lo < t_hi))
    throw Error(Errc::t_out_of_range, "empty interval [" + to_fraction(t_lo) + ", " +
                                          to_fraction(t_hi) + "]");
  if (!is_order_constant(f0, f1, t_lo, t_hi))
    throw Error(Errc::order_not_constant,
                "on [" + to_fraction(t_lo) + ", " + to_fraction(t_hi) + "]");

  const Rational mid = (t_lo + t_hi) / 2;
  const FiltrationFunction f_mid = interpolate(f0, f1, mid);
  if (auto tie = find_tie(f_mid))
    throw Error(Errc::non_unique_values, "midpoint " + to_fraction(mid) + " ties simplices " +
                                             std::to_string(tie->first) + " and " +
                                             std::to_string(tie->second));

  IntervalCertificate c;
  c.t_lo = t_lo;
  c.t_hi = t_hi;
  c.order_used = total_order(k, f_mid);
  c.lo = diagram_with_order(k, interpolate(f0, f1, t_lo), c.order_used);
  c.hi = diagram_with_order(k, interpolate(f0, f1, t_hi), c.order_used);
  if (c.lo.pivot_pairs != c.hi.pivot_pairs)
    throw Error(Errc::internal_proof_violation, "pivot pairs differ under one order");

  std::map<PivotPair, std::size_t> hi_index;
  for (std::size_t i = 0; i < c.hi.size(); ++i) hi_index.emplace(c.hi.points[i].pivot, i);
  c.matching.pairs.reserve(c.lo.size());
  for (std::size_t i = 0; i < c.lo.size(); ++i)
    c.matching.pairs.emplace_back(i, hi_index.at(c.lo.points[i].pivot));

  c.cost = matching_cost(c.lo, c.hi, c.matching);
  c.bound = (t_hi - t_lo) * sup_norm(f0, f1);
  return c;
}

Matching breakpoint_matching(const Diagram& left, const Diagram& right) {
  if (left.size() != right.size())
    throw Error(Errc::multiset_mismatch, std::to_string(left.size()) + " vs " +
                                             std::to_string(right.size()) + " points");
  auto sorted = [](const Diagram& d) {
    std::vector<std::size_t> idx(d.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      const auto& p = d.points[a];
      const auto& q = d.points[b];
      if (p.dim != q.dim) return p.dim < q.dim;
      if (const int c = cmp(p.birth, q.birth); c != 0) return c < 0;
      if (p.death != q.death) return p.death < q.death;
      return d.order.position_of(p.pivot.birth) < d.order.position_of(q.pivot.birth);
    });
    return idx;
  };
  const auto l = sorted(left);
  const auto r = sorted(right);

  Matching m;
  m.pairs.reserve(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    const auto& p = left.points[l[i]];
    const auto& q = right.points[r[i]];
    if (p.dim != q.dim || p.birth != q.birth || p.death != q.death)
      throw Error(Errc::multiset_mismatch,
                  "(" + std::to_string(p.dim) + ", " + to_token(p.birth) + ", " +
                      to_token(p.death) + ") vs (" + std::to_string(q.dim) + ", " +
                      to_token(q.birth) + ", " + to_token(q.death) + ")");
    m.pairs.emplace_back(l[i], r[i]);
  }
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

Matching compose_matchings(std::span<const Matching> chain) {
  if (chain.empty()) throw Error(Errc::chain_mismatch, "empty chain");
  std::vector<std::size_t> total = as_permutation(chain.front(), 0);
  for (std::size_t link = 1; link < chain.size(); ++link) {
    const auto next = as_permutation(chain[link], link);
    if (next.size() != total.size())
      throw Error(Errc::chain_mismatch, "link " + std::to_string(link) + " has " +
                                            std::to_string(next.size()) + " points, expected " +
                                            std::to_string(total.size()));
    for (auto& v : total) v = next[v];
  }
  Matching m;
  m.pairs.reserve(total.size());
  for (std::size_t a = 0; a < total.size(); ++a) m.pairs.emplace_back(a, total[a]);
  return m;
}

StabilityReport verify_stability(const SimplicialComplex& k, const FiltrationFunction& f0,
                                 const FiltrationFunction& f1, Exec exec) {
  require_valid_filtration(k, f0);
  require_valid_filtration(k, f1);

  StabilityReport r;
  r.sup_norm = sup_norm(f0, f1);
  r.schedule = crossing_times(f0, f1, exec);  // rejects ties in f0 or f1

  const std::vector<Rational> bps = breakpoints(r.schedule);
  const auto m = static_cast<std::ptrdiff_t>(bps.size() - 1);
  r.intervals.resize(static_cast<std::size_t>(m));

  if (exec == Exec::serial) {
    for (std::ptrdiff_t i = 0; i < m; ++i) {
      const auto u = static_cast<std::size_t>(i);
      r.intervals[u] = interval_matching(k, f0, f1, bps[u], bps[u + 1]);
    }
  } else {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < m; ++i) {
      const auto u = static_cast<std::size_t>(i);
      try {
        r.intervals[u] = interval_matching(k, f0, f1, bps[u], bps[u + 1]);
      } catch (...) {
#pragma omp critical(pstab_interval_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  r.dgm0 = diagram(k, f0, 0);
  r.dgm1 = diagram(k, f1, 1);

  std::vector<std::string> violations;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) violations.push_back(what);
  };

  std::vector<Matching> chain;
  chain.reserve(2 * r.intervals.size() + 1);
  const Matching head = breakpoint_matching(r.dgm0, r.intervals.front().lo);
  check(matching_cost(r.dgm0, r.intervals.front().lo, head) == Extended(), "start link cost");
  chain.push_back(head);
  for (std::size_t i = 0; i < r.intervals.size(); ++i) {
    const auto& cert = r.intervals[i];
    check(cert.cost <= Extended(cert.bound),
          "interval " + std::to_string(i) + " cost " + to_token(cert.cost) + " exceeds " +
              to_token(cert.bound));
    chain.push_back(cert.matching);
    if (i + 1 < r.intervals.size()) {
      const auto& next = r.intervals[i + 1];
      Matching bp = breakpoint_matching(cert.hi, next.lo);
      Extended bp_cost = matching_cost(cert.hi, next.lo, bp);
      check(bp_cost == Extended(), "breakpoint " + std::to_string(i + 1) + " has nonzero cost");
      r.breakpoint_costs.push_back(bp_cost);
      chain.push_back(std::move(bp));
    }
  }
  const Matching tail = breakpoint_matching(r.intervals.back().hi, r.dgm1);
  check(matching_cost(r.intervals.back().hi, r.dgm1, tail) == Extended(), "end link cost");
  chain.push_back(tail);

  r.composed = compose_matchings(chain);
  r.composed_cost = matching_cost(r.dgm0, r.dgm1, r.composed);

  r.link_cost_sum = Extended();
  r.telescoped_bound = 0;
  for (const auto& cert : r.intervals) {
    r.link_cost_sum = r.link_cost_sum + cert.cost;
    r.telescoped_bound += cert.bound;
  }
  for (const auto& c : r.breakpoint_costs) r.link_cost_sum = r.link_cost_sum + c;

  r.exact_bottleneck = bottleneck_bijection(r.dgm0, r.dgm1).cost;
  r.holds = r.exact_bottleneck <= Extended(r.sup_norm);

  check(r.telescoped_bound == r.sup_norm, "telescoped bound differs from sup norm");
  check(r.composed_cost <= r.link_cost_sum, "composed cost exceeds sum of link costs");
  check(r.composed_cost <= Extended(r.sup_norm), "composed cost exceeds sup norm");
  check(r.exact_bottleneck <= r.composed_cost, "exact bottleneck exceeds composed cost");
  check(r.holds, "bottleneck distance exceeds sup norm");

  if (!violations.empty()) {
    std::string msg;
    for (const auto& v : violations) msg += (msg.empty() ? "" : "; ") + v;
    throw Error(Errc::internal_proof_violation, msg);
  }
  return r;
}

std::string format_report(const StabilityReport& r, bool machine) {
  std::string out;
  if (machine) {
    auto kv = [&](const std::string& key, const std::string& value) {
      out += key + "=" + value + "\n";
    };
    kv("sup_norm", to_token(r.sup_norm));
    kv("breakpoints", std::to_string(r.schedule.size()));
    for (std::size_t i = 0; i < r.schedule.size(); ++i)
      kv("breakpoint." + std::to_string(i), to_token(r.schedule.crossings[i].t));
    kv("intervals", std::to_string(r.intervals.size()));
    for (std::size_t i = 0; i < r.intervals.size(); ++i) {
      const auto& c = r.intervals[i];
      const std::string p = "interval." + std::to_string(i) + ".";
      kv(p + "lo", to_token(c.t_lo));
      kv(p + "hi", to_token(c.t_hi));
      kv(p + "cost", to_token(c.cost));
      kv(p + "bound", to_token(c.bound));
    }
    kv("composed_cost", to_token(r.composed_cost));
    kv("link_cost_sum", to_token(r.link_cost_sum));
    kv("exact_bottleneck", to_token(r.exact_bottleneck));
    kv("holds", r.holds ? "true" : "false");
    return out;
  }

  out += "sup norm          " + show(r.sup_norm) + "\n";
  out += "breakpoints       " + std::to_string(r.schedule.size()) + "\n";
  for (std::size_t i = 0; i < r.intervals.size(); ++i) {
    const auto& c = r.intervals[i];
    out += "  interval " + std::to_string(i) + " [" + to_fraction(c.t_lo) + ", " +
           to_fraction(c.t_hi) + "]  cost " + show(c.cost) + "  bound " + show(c.bound) + "\n";
  }
  out += "composed cost     " + show(r.composed_cost) + "\n";
  out += "link cost sum     " + show(r.link_cost_sum) + "\n";
  out += "exact bottleneck  " + show(r.exact_bottleneck) + "\n";
  out += r.holds ? "HOLDS\n" : "FAILS\n";
  return out;
}

}  // namespace pstab
