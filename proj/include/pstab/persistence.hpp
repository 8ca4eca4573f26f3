#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pstab/complex.hpp"
#include "pstab/order.hpp"

namespace pstab {

// Sparse GF(2) matrix; columns[j] holds the sorted order positions of the
// nonzero rows of column j.
struct BoundaryMatrix {
  std::vector<std::vector<std::size_t>> columns;

  std::size_t size() const noexcept { return columns.size(); }
  friend bool operator==(const BoundaryMatrix&, const BoundaryMatrix&) = default;
};

// Column j = order positions of the codimension-1 faces of the simplex at
// position j.
BoundaryMatrix boundary_matrix(const SimplicialComplex& k, const TotalOrder& ord);

struct Reduction {
  BoundaryMatrix reduced;
  // (low(j), j) for every non-zero reduced column j, in column order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  // Positions that are neither a pivot row nor a non-zero column.
  std::vector<std::size_t> essentials;
};

// Standard left-to-right column reduction over GF(2).
Reduction reduce(BoundaryMatrix m);

// The (birth, death) simplices behind a diagram point, as simplex indices.
struct PivotPair {
  std::size_t birth = 0;
  std::optional<std::size_t> death;  // nullopt for an essential class

  friend auto operator<=>(const PivotPair&, const PivotPair&) = default;
};

struct DiagramPoint {
  int dim = 0;
  Rational birth;
  Extended death;
  PivotPair pivot;

  bool essential() const noexcept { return death.is_infinite(); }
};

struct Diagram {
  // Sorted by (dim, birth, death, order position of the birth simplex).
  std::vector<DiagramPoint> points;
  TotalOrder order;
  int function_id = 0;

  std::size_t size() const noexcept { return points.size(); }
  // Pivot pairs in reduction order (finite pairs by death column, then
  // essentials by position). Identical orders give identical lists.
  std::vector<PivotPair> pivot_pairs;

  // dim -> number of points; dim -> number of essential points.
  std::map<int, std::size_t> counts_by_dim() const;
  std::map<int, std::size_t> essential_counts_by_dim() const;
};

// Throws Error(invalid_filtration) when f is not monotone on k.
Diagram diagram(const SimplicialComplex& k, const FiltrationFunction& f, int function_id = 0);

// Throws Error(incompatible_order) when ord is not compatible with f.
Diagram diagram_with_order(const SimplicialComplex& k, const FiltrationFunction& f,
                           const TotalOrder& ord, int function_id = 0);

// One line per point: "dim birth death birth_simplex death_simplex", with
// "inf" and "-" for essential classes. `only_dim` restricts the output.
std::string format_diagram(const SimplicialComplex& k, const Diagram& d,
                           std::optional<int> only_dim = std::nullopt);

}  // namespace pstab
