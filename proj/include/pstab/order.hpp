#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pstab/complex.hpp"

namespace pstab {

// A linear order on the simplices of a complex: permutation()[p] is the
// simplex index at order position p.
class TotalOrder {
 public:
  TotalOrder() = default;
  // Throws Error(incompatible_order) if `permutation` is not a permutation.
  explicit TotalOrder(std::vector<std::size_t> permutation);

  std::size_t size() const noexcept { return permutation_.size(); }
  std::size_t simplex_at(std::size_t position) const { return permutation_[position]; }
  std::size_t position_of(std::size_t simplex) const { return position_[simplex]; }
  const std::vector<std::size_t>& permutation() const noexcept { return permutation_; }

  friend bool operator==(const TotalOrder& a, const TotalOrder& b) {
    return a.permutation_ == b.permutation_;
  }

 private:
  std::vector<std::size_t> permutation_;
  std::vector<std::size_t> position_;
};

// Sorts by (value, dimension, vertex sequence), all ascending.
// Throws Error(invalid_filtration) if f is not monotone on k.
TotalOrder total_order(const SimplicialComplex& k, const FiltrationFunction& f);

// Why `ord` cannot be used to compute the persistence of f on k (wrong size,
// f decreasing along the order, or a coface before one of its faces), or
// nullopt when it is compatible.
std::optional<std::string> order_incompatibility(const SimplicialComplex& k,
                                                 const FiltrationFunction& f,
                                                 const TotalOrder& ord);

// True iff no pair of simplices strictly swaps its relative order anywhere
// on [alpha, beta] along f_t = (1-t) f0 + t f1. Ties are compatible with
// either side. Since f_t(s) - f_t(u) is linear in t, it suffices to check
// the endpoints.
bool is_order_constant(const FiltrationFunction& f0, const FiltrationFunction& f1,
                       const Rational& alpha, const Rational& beta);

}  // namespace pstab
