#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pstab/error.hpp"
#include "pstab/rational.hpp"

namespace pstab {

using Vertex = std::uint32_t;

// A simplex in canonical form: strictly increasing, non-empty vertex list.
class Simplex {
 public:
  // Sorts the input; returns nullopt for an empty list or repeated vertices.
  static std::optional<Simplex> canonical(std::vector<Vertex> vertices);

  int dim() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }

  // Codimension-1 faces in lexicographic order.
  std::vector<Simplex> facets() const;

  // Vertex ids joined by commas, e.g. "0,2,5".
  std::string to_string() const;

  friend auto operator<=>(const Simplex&, const Simplex&) = default;

 private:
  explicit Simplex(std::vector<Vertex> v) : vertices_(std::move(v)) {}
  std::vector<Vertex> vertices_;
};

struct ComplexIssue {
  Errc kind;  // missing_face, duplicate_simplex or malformed_simplex
  std::size_t position;            // index of the offending entry in the input list
  std::vector<Vertex> simplex;     // raw input for malformed, canonical otherwise
  std::vector<Vertex> missing;     // missing face, for missing_face only

  std::string message() const;
};

class ComplexError : public Error {
 public:
  explicit ComplexError(std::vector<ComplexIssue> issues);
  const std::vector<ComplexIssue>& issues() const noexcept { return issues_; }

 private:
  std::vector<ComplexIssue> issues_;
};

// A finite simplicial complex. Simplices keep the order they were given in;
// "simplex index" everywhere in this library means position in that list.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  std::size_t size() const noexcept { return simplices_.size(); }
  bool empty() const noexcept { return simplices_.empty(); }
  const Simplex& operator[](std::size_t i) const { return simplices_[i]; }
  const std::vector<Simplex>& simplices() const noexcept { return simplices_; }
  int dim(std::size_t i) const { return simplices_[i].dim(); }
  int max_dim() const noexcept { return max_dim_; }

  // Indices of the codimension-1 faces of simplex i.
  const std::vector<std::size_t>& facets(std::size_t i) const { return facets_[i]; }

  std::optional<std::size_t> find(const Simplex& s) const;

  friend SimplicialComplex validate_complex(std::span<const std::vector<Vertex>>);

 private:
  std::vector<Simplex> simplices_;
  std::map<Simplex, std::size_t> index_;
  std::vector<std::vector<std::size_t>> facets_;
  int max_dim_ = -1;
};

// Canonicalizes and checks face closure. Reports every violation at once by
// throwing ComplexError; list order is preserved on success.
SimplicialComplex validate_complex(std::span<const std::vector<Vertex>> simplices);

// One finite value per simplex of an associated complex, indexed by position.
class FiltrationFunction {
 public:
  FiltrationFunction() = default;
  explicit FiltrationFunction(std::vector<Rational> values) : values_(std::move(values)) {}

  // Exact conversion; throws Error(non_finite_value) on NaN or infinities.
  static FiltrationFunction from_doubles(std::span<const double> values);

  std::size_t size() const noexcept { return values_.size(); }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  const std::vector<Rational>& values() const noexcept { return values_; }

  friend bool operator==(const FiltrationFunction&, const FiltrationFunction&) = default;

 private:
  std::vector<Rational> values_;
};

struct FiltrationIssue {
  Errc kind;  // non_monotone or size_mismatch
  std::size_t face = 0;
  std::size_t coface = 0;
  Rational face_value;
  Rational coface_value;

  std::string message(const SimplicialComplex& k) const;
};

struct FiltrationReport {
  std::vector<FiltrationIssue> issues;
  bool ok() const noexcept { return issues.empty(); }
};

// Checks monotonicity on every (facet, simplex) pair; monotone on facets
// implies monotone on all faces.
FiltrationReport validate_filtration(const SimplicialComplex& k, const FiltrationFunction& f);

// Throws Error(invalid_filtration) summarizing the report when it is not ok.
void require_valid_filtration(const SimplicialComplex& k, const FiltrationFunction& f);

// Indices of all simplices with f <= alpha, ascending.
std::vector<std::size_t> sublevel_indices(const FiltrationFunction& f, const Rational& alpha);

// The sublevel subcomplex f^{-1}(-inf, alpha], preserving simplex order.
SimplicialComplex sublevel(const SimplicialComplex& k, const FiltrationFunction& f,
                           const Rational& alpha);

bool has_unique_values(const FiltrationFunction& f);

// First pair of simplex indices sharing a value, if any.
std::optional<std::pair<std::size_t, std::size_t>> find_tie(const FiltrationFunction& f);

}  // namespace pstab
