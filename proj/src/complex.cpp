#include "pstab/complex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace pstab {

namespace {

std::string join(const std::vector<Vertex>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string summarize(const std::vector<ComplexIssue>& issues) {
  std::string out = std::to_string(issues.size()) + " issue(s)";
  for (const auto& issue : issues) out += "\n  " + issue.message();
  return out;
}

}  // namespace

std::optional<Simplex> Simplex::canonical(std::vector<Vertex> vertices) {
  if (vertices.empty()) return std::nullopt;
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) return std::nullopt;
  return Simplex(std::move(vertices));
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  if (vertices_.size() < 2) return out;
  out.reserve(vertices_.size());
  // dropping the last vertex first yields lexicographic order
  for (std::size_t drop = vertices_.size(); drop-- > 0;) {
    std::vector<Vertex> face;
    face.reserve(vertices_.size() - 1);
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (i != drop) face.push_back(vertices_[i]);
    out.push_back(Simplex(std::move(face)));
  }
  return out;
}

std::string Simplex::to_string() const { return join(vertices_); }

std::string ComplexIssue::message() const {
  const std::string at = "entry " + std::to_string(position) + ": ";
  switch (kind) {
    case Errc::missing_face:
      return at + "MissingFace({" + join(simplex) + "}, {" + join(missing) + "})";
    case Errc::duplicate_simplex:
      return at + "DuplicateSimplex({" + join(simplex) + "})";
    default:
      return at + "MalformedSimplex([" + join(simplex) + "])";
  }
}

ComplexError::ComplexError(std::vector<ComplexIssue> issues)
    : Error(issues.empty() ? Errc::malformed_simplex : issues.front().kind, summarize(issues)),
      issues_(std::move(issues)) {}

std::optional<std::size_t> SimplicialComplex::find(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SimplicialComplex validate_complex(std::span<const std::vector<Vertex>> simplices) {
  SimplicialComplex k;
  std::vector<ComplexIssue> issues;
  std::vector<std::size_t> input_position;

  for (std::size_t pos = 0; pos < simplices.size(); ++pos) {
    auto s = Simplex::canonical(simplices[pos]);
    if (!s) {
      issues.push_back({Errc::malformed_simplex, pos, simplices[pos], {}});
      continue;
    }
    if (k.index_.contains(*s)) {
      issues.push_back({Errc::duplicate_simplex, pos, s->vertices(), {}});
      continue;
    }
    k.index_.emplace(*s, k.simplices_.size());
    k.max_dim_ = std::max(k.max_dim_, s->dim());
    k.simplices_.push_back(std::move(*s));
    input_position.push_back(pos);
  }

  k.facets_.resize(k.simplices_.size());
  for (std::size_t i = 0; i < k.simplices_.size(); ++i) {
    for (const Simplex& face : k.simplices_[i].facets()) {
      auto it = k.index_.find(face);
      if (it == k.index_.end()) {
        issues.push_back({Errc::missing_face, input_position[i], k.simplices_[i].vertices(),
                          face.vertices()});
      } else {
        k.facets_[i].push_back(it->second);
      }
    }
  }

  if (!issues.empty()) {
    std::stable_sort(issues.begin(), issues.end(),
                     [](const auto& a, const auto& b) { return a.position < b.position; });
    throw ComplexError(std::move(issues));
  }
  return k;
}

FiltrationFunction FiltrationFunction::from_doubles(std::span<const double> values) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]))
      throw Error(Errc::non_finite_value, "value of simplex " + std::to_string(i));
    out.emplace_back(values[i]);
  }
  return FiltrationFunction(std::move(out));
}

std::string FiltrationIssue::message(const SimplicialComplex& k) const {
  if (kind == Errc::size_mismatch) return "SizeMismatch";
  return "NonMonotone({" + k[face].to_string() + "}, {" + k[coface].to_string() + "}, " +
         to_token(face_value) + ", " + to_token(coface_value) + ")";
}

FiltrationReport validate_filtration(const SimplicialComplex& k, const FiltrationFunction& f) {
  FiltrationReport report;
  if (f.size() != k.size()) {
    report.issues.push_back({Errc::size_mismatch, 0, 0, Rational(0), Rational(0)});
    return report;
  }
  for (std::size_t s = 0; s < k.size(); ++s) {
    for (std::size_t face : k.facets(s)) {
      if (f[face] > f[s])
        report.issues.push_back({Errc::non_monotone, face, s, f[face], f[s]});
    }
  }
  return report;
}

void require_valid_filtration(const SimplicialComplex& k, const FiltrationFunction& f) {
  const FiltrationReport report = validate_filtration(k, f);
  if (report.ok()) return;
  if (report.issues.front().kind == Errc::size_mismatch)
    throw Error(Errc::size_mismatch, "function has " + std::to_string(f.size()) +
                                         " values for " + std::to_string(k.size()) + " simplices");
  std::string msg;
  for (const auto& issue : report.issues) msg += (msg.empty() ? "" : "; ") + issue.message(k);
  throw Error(Errc::invalid_filtration, msg);
}

std::vector<std::size_t> sublevel_indices(const FiltrationFunction& f, const Rational& alpha) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] <= alpha) out.push_back(i);
  return out;
}

SimplicialComplex sublevel(const SimplicialComplex& k, const FiltrationFunction& f,
                           const Rational& alpha) {
  std::vector<std::vector<Vertex>> kept;
  for (std::size_t i : sublevel_indices(f, alpha)) kept.push_back(k[i].vertices());
  return validate_complex(kept);
}

std::optional<std::pair<std::size_t, std::size_t>> find_tie(const FiltrationFunction& f) {
  std::vector<std::size_t> idx(f.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const int c = cmp(f[a], f[b]);
    return c != 0 ? c < 0 : a < b;
  });
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (f[idx[i - 1]] == f[idx[i]]) return std::pair{idx[i - 1], idx[i]};
  return std::nullopt;
}

bool has_unique_values(const FiltrationFunction& f) { return !find_tie(f).has_value(); }

}  // namespace pstab
