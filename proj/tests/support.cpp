#include "support.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>

namespace pstab::testing {

SimplicialComplex make_complex(std::initializer_list<std::vector<Vertex>> simplices) {
  std::vector<std::vector<Vertex>> v(simplices);
  return validate_complex(v);
}

FiltrationFunction make_function(std::initializer_list<const char*> values) {
  std::vector<Rational> out;
  for (const char* s : values) out.push_back(parse_rational(s));
  return FiltrationFunction(std::move(out));
}

SimplicialComplex edge_complex() { return make_complex({{0}, {1}, {0, 1}}); }

SimplicialComplex triangle_boundary() {
  return make_complex({{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}});
}

FiltrationFunction random_monotone(const SimplicialComplex& k, Rng& rng, int lo, int hi) {
  std::uniform_int_distribution<int> draw(lo, hi);
  std::vector<Rational> v(k.size());
  for (auto& x : v) x = draw(rng);
  // facets may come later in the list, so repeat until stable
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < k.size(); ++i)
      for (std::size_t face : k.facets(i))
        if (v[face] > v[i]) {
          v[i] = v[face];
          changed = true;
        }
  }
  return FiltrationFunction(std::move(v));
}

FiltrationFunction random_unique_monotone(const SimplicialComplex& k, Rng& rng, int lo, int hi) {
  FiltrationFunction base = random_monotone(k, rng, lo, hi);
  const TotalOrder ord = random_compatible_order(k, base, rng);
  std::vector<Rational> v = base.values();
  const Rational step(1, static_cast<unsigned long>(k.size() + 1));
  for (std::size_t p = 0; p < ord.size(); ++p)
    v[ord.simplex_at(p)] += step * static_cast<unsigned long>(p);
  return FiltrationFunction(std::move(v));
}

TotalOrder random_compatible_order(const SimplicialComplex& k, const FiltrationFunction& f,
                                   Rng& rng) {
  std::vector<std::size_t> idx(k.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return f[a] < f[b]; });

  std::vector<std::size_t> perm;
  perm.reserve(k.size());
  std::vector<bool> placed(k.size(), false);
  std::size_t begin = 0;
  while (begin < idx.size()) {
    std::size_t end = begin;
    while (end < idx.size() && f[idx[end]] == f[idx[begin]]) ++end;
    // random topological sort of the value class
    std::vector<std::size_t> pending(idx.begin() + static_cast<std::ptrdiff_t>(begin),
                                     idx.begin() + static_cast<std::ptrdiff_t>(end));
    while (!pending.empty()) {
      std::vector<std::size_t> ready;
      for (std::size_t i = 0; i < pending.size(); ++i) {
        const auto& facets = k.facets(pending[i]);
        if (std::all_of(facets.begin(), facets.end(), [&](std::size_t x) { return placed[x]; }))
          ready.push_back(i);
      }
      if (ready.empty()) throw std::logic_error("filtration is not monotone");
      std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
      const std::size_t chosen = ready[pick(rng)];
      placed[pending[chosen]] = true;
      perm.push_back(pending[chosen]);
      pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(chosen));
    }
    begin = end;
  }
  return TotalOrder(std::move(perm));
}

InstanceFile bounded_instance(std::uint64_t seed, std::size_t max_simplices, int max_dim) {
  Rng meta(seed);
  for (;;) {
    GeneratorConfig cfg;
    cfg.seed = meta();
    cfg.num_vertices = std::uniform_int_distribution<unsigned>(2, 8)(meta);
    cfg.max_dimension = std::uniform_int_distribution<int>(1, max_dim)(meta);
    cfg.fill_probability = std::uniform_real_distribution<double>(0.2, 0.95)(meta);
    cfg.value_min = 0;
    cfg.value_max = std::uniform_int_distribution<int>(1, 12)(meta);
    InstanceFile inst = generate_instance(cfg);
    if (inst.complex.size() <= max_simplices) return inst;
  }
}

SimplicialComplex bounded_complex(std::uint64_t seed, std::size_t max_simplices, int max_dim) {
  return bounded_instance(seed, max_simplices, max_dim).complex;
}

std::pair<Diagram, Diagram> random_diagram_pair(Rng& rng, int dims, std::size_t max_per_dim) {
  std::uniform_int_distribution<std::size_t> count(0, max_per_dim);
  std::uniform_int_distribution<int> coord(0, 24);
  Diagram d0;
  Diagram d1;
  for (int dim = 0; dim < dims; ++dim) {
    const std::size_t n = count(rng);
    const std::size_t essentials = std::uniform_int_distribution<std::size_t>(0, n)(rng);
    for (Diagram* d : {&d0, &d1}) {
      for (std::size_t i = 0; i < n; ++i) {
        DiagramPoint p;
        p.dim = dim;
        p.birth = Rational(coord(rng), 4);
        p.birth.canonicalize();
        if (i < essentials) {
          p.death = Extended::infinity();
        } else {
          Rational death(coord(rng), 4);
          death.canonicalize();
          p.death = Extended(Rational(p.birth + death));
        }
        p.pivot = {i, i < essentials ? std::nullopt : std::optional<std::size_t>(i + n)};
        d->points.push_back(std::move(p));
      }
    }
  }
  return {std::move(d0), std::move(d1)};
}

namespace {

using Mask = std::uint64_t;

struct Eliminator {
  std::map<int, Mask> pivots;  // highest bit -> reduced vector

  // Reduces v against the basis; returns the remainder.
  Mask reduce(Mask v) const {
    while (v) {
      const int top = 63 - __builtin_clzll(v);
      auto it = pivots.find(top);
      if (it == pivots.end()) break;
      v ^= it->second;
    }
    return v;
  }
  bool insert(Mask v) {
    v = reduce(v);
    if (!v) return false;
    pivots.emplace(63 - __builtin_clzll(v), v);
    return true;
  }
};

std::size_t rank_of(const std::vector<Mask>& vectors) {
  Eliminator e;
  std::size_t r = 0;
  for (Mask v : vectors) r += e.insert(v) ? 1 : 0;
  return r;
}

}  // namespace

std::size_t persistent_betti(const SimplicialComplex& k, const FiltrationFunction& f, int dim,
                             const Rational& alpha, const Rational& beta) {
  // Local numbering of simplices per dimension.
  std::vector<std::size_t> local(k.size());
  std::map<int, std::size_t> counter;
  for (std::size_t i = 0; i < k.size(); ++i) local[i] = counter[k.dim(i)]++;
  if (counter[dim] > 64 || counter[dim - 1] > 64) throw std::logic_error("oracle limited to 64");

  auto boundary = [&](std::size_t s) {
    Mask m = 0;
    for (std::size_t face : k.facets(s)) m |= Mask{1} << local[face];
    return m;
  };

  // Kernel of the boundary on dim-chains of K_alpha, by elimination with a
  // record of which simplices were combined.
  std::vector<Mask> cycles;
  {
    std::vector<std::pair<Mask, Mask>> basis;  // (reduced boundary, combination)
    for (std::size_t s = 0; s < k.size(); ++s) {
      if (k.dim(s) != dim || f[s] > alpha) continue;
      Mask b = boundary(s);
      Mask combo = Mask{1} << local[s];
      bool progress = true;
      while (b && progress) {
        progress = false;
        const int top = 63 - __builtin_clzll(b);
        for (const auto& [vb, vc] : basis) {
          if (vb && 63 - __builtin_clzll(vb) == top) {
            b ^= vb;
            combo ^= vc;
            progress = true;
            break;
          }
        }
      }
      if (b == 0) {
        cycles.push_back(combo);
      } else {
        basis.emplace_back(b, combo);
      }
    }
  }

  std::vector<Mask> boundaries;
  for (std::size_t s = 0; s < k.size(); ++s)
    if (k.dim(s) == dim + 1 && f[s] <= beta) boundaries.push_back(boundary(s));

  const std::size_t dim_z = cycles.size();
  const std::size_t dim_b = rank_of(boundaries);
  std::vector<Mask> both = cycles;
  both.insert(both.end(), boundaries.begin(), boundaries.end());
  const std::size_t dim_sum = rank_of(both);
  const std::size_t dim_intersection = dim_z + dim_b - dim_sum;
  return dim_z - dim_intersection;
}

std::vector<std::string> value_points(const Diagram& d) {
  std::vector<std::string> out;
  for (const auto& p : d.points)
    out.push_back(std::to_string(p.dim) + " " + to_fraction(p.birth) + " " + to_token(p.death));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pstab::testing
