#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "pstab/bottleneck.hpp"
#include "pstab/complex.hpp"
#include "pstab/instance.hpp"
#include "pstab/order.hpp"
#include "pstab/persistence.hpp"

namespace pstab::testing {

using Rng = std::mt19937_64;

inline Rational Q(const std::string& text) { return parse_rational(text); }

SimplicialComplex make_complex(std::initializer_list<std::vector<Vertex>> simplices);
FiltrationFunction make_function(std::initializer_list<const char*> values);

// Edge {0},{1},{0,1} and the boundary of the triangle 012 (vertices, then
// edges 01, 02, 12).
SimplicialComplex edge_complex();
SimplicialComplex triangle_boundary();

// Integer values in [lo, hi], raised along faces so the result is monotone.
// Ties are likely for narrow ranges.
FiltrationFunction random_monotone(const SimplicialComplex& k, Rng& rng, int lo, int hi);

// random_monotone plus distinct rank offsets: monotone and unique-valued.
FiltrationFunction random_unique_monotone(const SimplicialComplex& k, Rng& rng, int lo, int hi);

// A uniformly shuffled linear extension: values non-decreasing, faces before
// cofaces, otherwise random among simplices sharing a value.
TotalOrder random_compatible_order(const SimplicialComplex& k, const FiltrationFunction& f,
                                   Rng& rng);

// Generated complex with at most `max_simplices` simplices (resampling the
// seed deterministically) and two unique-valued functions.
InstanceFile bounded_instance(std::uint64_t seed, std::size_t max_simplices, int max_dim);

// Complex only (functions ignored), at most `max_simplices` simplices.
SimplicialComplex bounded_complex(std::uint64_t seed, std::size_t max_simplices, int max_dim);

// Two synthetic diagrams with equal per-dimension point and essential counts,
// at most `max_per_dim` points per dimension, small-denominator coordinates
// (ties are frequent).
std::pair<Diagram, Diagram> random_diagram_pair(Rng& rng, int dims, std::size_t max_per_dim);

// Persistent Betti number rank_k(H_k(K_alpha) -> H_k(K_beta)) over GF(2),
// computed from boundary-operator ranks on the sublevel complexes.
std::size_t persistent_betti(const SimplicialComplex& k, const FiltrationFunction& f, int dim,
                             const Rational& alpha, const Rational& beta);

// Multiset of (dim, birth, death) triples, sorted.
std::vector<std::string> value_points(const Diagram& d);

}  // namespace pstab::testing
