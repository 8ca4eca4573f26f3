#include "pstab/order.hpp"

#include <algorithm>
#include <numeric>

#include "pstab/interpolation.hpp"

namespace pstab {

TotalOrder::TotalOrder(std::vector<std::size_t> permutation)
    : permutation_(std::move(permutation)), position_(permutation_.size(), permutation_.size()) {
  for (std::size_t p = 0; p < permutation_.size(); ++p) {
    const std::size_t s = permutation_[p];
    if (s >= permutation_.size() || position_[s] != permutation_.size())
      throw Error(Errc::incompatible_order, "not a permutation of 0.." +
                                                std::to_string(permutation_.size()) + "-1");
    position_[s] = p;
  }
}

TotalOrder total_order(const SimplicialComplex& k, const FiltrationFunction& f) {
  require_valid_filtration(k, f);
  std::vector<std::size_t> perm(k.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (const int c = cmp(f[a], f[b]); c != 0) return c < 0;
    if (k.dim(a) != k.dim(b)) return k.dim(a) < k.dim(b);
    return k[a].vertices() < k[b].vertices();
  });
  return TotalOrder(std::move(perm));
}

std::optional<std::string> order_incompatibility(const SimplicialComplex& k,
                                                 const FiltrationFunction& f,
                                                 const TotalOrder& ord) {
  if (ord.size() != k.size() || f.size() != k.size())
    return "order has " + std::to_string(ord.size()) + " entries, complex has " +
           std::to_string(k.size()) + " simplices";
  for (std::size_t p = 1; p < ord.size(); ++p) {
    const std::size_t prev = ord.simplex_at(p - 1);
    const std::size_t cur = ord.simplex_at(p);
    if (f[prev] > f[cur])
      return "value decreases from {" + k[prev].to_string() + "} to {" + k[cur].to_string() +
             "} at position " + std::to_string(p);
  }
  for (std::size_t s = 0; s < k.size(); ++s) {
    for (std::size_t face : k.facets(s)) {
      if (ord.position_of(face) > ord.position_of(s))
        return "{" + k[s].to_string() + "} precedes its face {" + k[face].to_string() + "}";
    }
  }
  return std::nullopt;
}

bool is_order_constant(const FiltrationFunction& f0, const FiltrationFunction& f1,
                       const Rational& alpha, const Rational& beta) {
  const FiltrationFunction a = interpolate(f0, f1, alpha);
  const FiltrationFunction b = interpolate(f0, f1, beta);
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const int sa = cmp(a[i], a[j]);
      const int sb = cmp(b[i], b[j]);
      if ((sa < 0 && sb > 0) || (sa > 0 && sb < 0)) return false;
    }
  }
  return true;
}

}  // namespace pstab
