#include "pstab/bottleneck.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "hopcroft_karp.hpp"

namespace pstab {

namespace {

struct Edge {
  std::size_t u;
  std::size_t v;
  Rational cost;
};

struct ThresholdResult {
  bool feasible = false;
  Rational cost;
  std::vector<std::size_t> mate;  // left -> right
};

bool perfect_at(std::size_t n, const std::vector<Edge>& edges, const Rational& threshold,
                std::vector<std::size_t>* mate) {
  detail::HopcroftKarp hk(n, n);
  for (const auto& e : edges)
    if (e.cost <= threshold) hk.add_edge(e.u, e.v);
  if (hk.run() != n) return false;
  if (mate) {
    mate->resize(n);
    for (std::size_t u = 0; u < n; ++u) (*mate)[u] = hk.mate(u);
  }
  return true;
}

// Smallest edge cost c such that edges of cost <= c contain a perfect
// matching of the n x n bipartite graph: binary search over the sorted
// distinct costs with a maximum-matching feasibility test.
ThresholdResult min_bottleneck_perfect_matching(std::size_t n, const std::vector<Edge>& edges) {
  ThresholdResult out;
  if (n == 0) {
    out.feasible = true;
    out.cost = 0;
    return out;
  }
  std::vector<Rational> candidates;
  candidates.reserve(edges.size());
  for (const auto& e : edges) candidates.push_back(e.cost);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  if (candidates.empty() || !perfect_at(n, edges, candidates.back(), nullptr)) return out;

  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;  // feasible
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (perfect_at(n, edges, candidates[mid], nullptr)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  out.feasible = true;
  out.cost = candidates[hi];
  perfect_at(n, edges, out.cost, &out.mate);
  return out;
}

struct DimGroups {
  std::set<int> dims;
  std::vector<std::size_t> of(const Diagram& d, int dim) const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < d.points.size(); ++i)
      if (d.points[i].dim == dim) idx.push_back(i);
    return idx;
  }
};

DimGroups dims_of(const Diagram& d0, const Diagram& d1) {
  DimGroups g;
  for (const auto& p : d0.points) g.dims.insert(p.dim);
  for (const auto& p : d1.points) g.dims.insert(p.dim);
  return g;
}

std::size_t count_essential(const Diagram& d, const std::vector<std::size_t>& idx) {
  return static_cast<std::size_t>(std::count_if(
      idx.begin(), idx.end(), [&](std::size_t i) { return d.points[i].essential(); }));
}

void require_same_counts(const Diagram& d0, const Diagram& d1, int dim,
                         const std::vector<std::size_t>& i0, const std::vector<std::size_t>& i1) {
  if (i0.size() != i1.size())
    throw Error(Errc::count_mismatch, "dim " + std::to_string(dim) + ": " +
                                          std::to_string(i0.size()) + " vs " +
                                          std::to_string(i1.size()) + " points");
  const std::size_t e0 = count_essential(d0, i0);
  const std::size_t e1 = count_essential(d1, i1);
  if (e0 != e1)
    throw Error(Errc::count_mismatch, "dim " + std::to_string(dim) + ": " + std::to_string(e0) +
                                          " vs " + std::to_string(e1) + " essential points");
}

}  // namespace

Extended pair_cost(const DiagramPoint& p, const DiagramPoint& q) {
  if (p.dim != q.dim)
    throw Error(Errc::dimension_mismatch,
                "dim " + std::to_string(p.dim) + " vs dim " + std::to_string(q.dim));
  if (p.death.is_infinite() != q.death.is_infinite()) return Extended::infinity();
  Rational cost = abs(p.birth - q.birth);
  if (p.death.is_finite()) {
    Rational dd = abs(p.death.value() - q.death.value());
    if (dd > cost) cost = dd;
  }
  return Extended(std::move(cost));
}

Extended diagonal_cost(const DiagramPoint& p) {
  if (p.essential()) return Extended::infinity();
  return Extended(Rational((p.death.value() - p.birth) / 2));
}

Extended matching_cost(const Diagram& d0, const Diagram& d1, const Matching& m) {
  std::vector<bool> used0(d0.size(), false);
  std::vector<bool> used1(d1.size(), false);
  auto claim = [](std::vector<bool>& used, std::size_t i, const char* side) {
    if (i >= used.size() || used[i])
      throw Error(Errc::invalid_matching, std::string("point ") + std::to_string(i) + " of " +
                                              side + " is out of range or used twice");
    used[i] = true;
  };

  Extended cost;
  for (const auto& [a, b] : m.pairs) {
    claim(used0, a, "D0");
    claim(used1, b, "D1");
    if (d0.points[a].dim != d1.points[b].dim)
      throw Error(Errc::invalid_matching, "pair (" + std::to_string(a) + ", " +
                                              std::to_string(b) + ") crosses dimensions");
    cost = max(cost, pair_cost(d0.points[a], d1.points[b]));
  }
  for (std::size_t a : m.diagonal0) {
    claim(used0, a, "D0");
    cost = max(cost, diagonal_cost(d0.points[a]));
  }
  for (std::size_t b : m.diagonal1) {
    claim(used1, b, "D1");
    cost = max(cost, diagonal_cost(d1.points[b]));
  }
  if (std::find(used0.begin(), used0.end(), false) != used0.end() ||
      std::find(used1.begin(), used1.end(), false) != used1.end())
    throw Error(Errc::invalid_matching, "matching does not cover every point");
  return cost;
}

BottleneckResult bottleneck_bijection(const Diagram& d0, const Diagram& d1) {
  const DimGroups g = dims_of(d0, d1);
  BottleneckResult result;
  for (int dim : g.dims) {
    const auto i0 = g.of(d0, dim);
    const auto i1 = g.of(d1, dim);
    require_same_counts(d0, d1, dim, i0, i1);

    std::vector<Edge> edges;
    edges.reserve(i0.size() * i1.size());
    for (std::size_t u = 0; u < i0.size(); ++u) {
      for (std::size_t v = 0; v < i1.size(); ++v) {
        Extended c = pair_cost(d0.points[i0[u]], d1.points[i1[v]]);
        if (c.is_finite()) edges.push_back({u, v, c.value()});
      }
    }
    const ThresholdResult t = min_bottleneck_perfect_matching(i0.size(), edges);
    // Equal essential counts make essential-to-essential bijections possible.
    if (!t.feasible) throw Error(Errc::internal_proof_violation, "no finite bijection");
    result.cost = max(result.cost, Extended(t.cost));
    for (std::size_t u = 0; u < i0.size(); ++u) result.matching.pairs.emplace_back(i0[u], i1[t.mate[u]]);
  }
  std::sort(result.matching.pairs.begin(), result.matching.pairs.end());
  return result;
}

BottleneckResult bottleneck_diagonal(const Diagram& d0, const Diagram& d1) {
  const DimGroups g = dims_of(d0, d1);
  BottleneckResult result;
  for (int dim : g.dims) {
    const auto i0 = g.of(d0, dim);
    const auto i1 = g.of(d1, dim);
    if (count_essential(d0, i0) != count_essential(d1, i1)) {
      return {Extended::infinity(), {}};
    }
    // Left: points of D0, then diagonal copies of D1 points.
    // Right: points of D1, then diagonal copies of D0 points.
    const std::size_t n0 = i0.size();
    const std::size_t n1 = i1.size();
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < n0; ++a) {
      for (std::size_t b = 0; b < n1; ++b) {
        Extended c = pair_cost(d0.points[i0[a]], d1.points[i1[b]]);
        if (c.is_finite()) edges.push_back({a, b, c.value()});
      }
      if (Extended c = diagonal_cost(d0.points[i0[a]]); c.is_finite())
        edges.push_back({a, n1 + a, c.value()});
    }
    for (std::size_t b = 0; b < n1; ++b) {
      if (Extended c = diagonal_cost(d1.points[i1[b]]); c.is_finite())
        edges.push_back({n0 + b, b, c.value()});
      for (std::size_t a = 0; a < n0; ++a) edges.push_back({n0 + b, n1 + a, Rational(0)});
    }
    const ThresholdResult t = min_bottleneck_perfect_matching(n0 + n1, edges);
    if (!t.feasible) throw Error(Errc::internal_proof_violation, "no diagonal matching");
    result.cost = max(result.cost, Extended(t.cost));
    for (std::size_t a = 0; a < n0; ++a) {
      if (t.mate[a] < n1) {
        result.matching.pairs.emplace_back(i0[a], i1[t.mate[a]]);
      } else {
        result.matching.diagonal0.push_back(i0[a]);
      }
    }
    for (std::size_t b = 0; b < n1; ++b)
      if (t.mate[n0 + b] == b) result.matching.diagonal1.push_back(i1[b]);
  }
  std::sort(result.matching.pairs.begin(), result.matching.pairs.end());
  std::sort(result.matching.diagonal0.begin(), result.matching.diagonal0.end());
  std::sort(result.matching.diagonal1.begin(), result.matching.diagonal1.end());
  return result;
}

Extended brute_force_bottleneck(const Diagram& d0, const Diagram& d1) {
  constexpr std::size_t limit = 8;
  const DimGroups g = dims_of(d0, d1);
  Extended total;
  for (int dim : g.dims) {
    const auto i0 = g.of(d0, dim);
    const auto i1 = g.of(d1, dim);
    require_same_counts(d0, d1, dim, i0, i1);
    if (i0.size() > limit)
      throw Error(Errc::too_large, std::to_string(i0.size()) + " points in dim " +
                                       std::to_string(dim));
    std::vector<std::size_t> perm(i1.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Extended best = Extended::infinity();
    do {
      Extended c;
      for (std::size_t u = 0; u < i0.size() && c < best; ++u)
        c = max(c, pair_cost(d0.points[i0[u]], d1.points[i1[perm[u]]]));
      if (c < best) best = c;
    } while (std::next_permutation(perm.begin(), perm.end()));
    total = max(total, best);
  }
  return total;
}

}  // namespace pstab
