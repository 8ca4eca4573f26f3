#include "pstab/persistence.hpp"

#include <algorithm>
#include <iterator>

namespace pstab {

BoundaryMatrix boundary_matrix(const SimplicialComplex& k, const TotalOrder& ord) {
  BoundaryMatrix m;
  m.columns.resize(k.size());
  for (std::size_t j = 0; j < k.size(); ++j) {
    auto& col = m.columns[j];
    for (std::size_t face : k.facets(ord.simplex_at(j))) col.push_back(ord.position_of(face));
    std::sort(col.begin(), col.end());
  }
  return m;
}

Reduction reduce(BoundaryMatrix m) {
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  const std::size_t n = m.size();
  std::vector<std::size_t> column_with_low(n, none);
  std::vector<bool> is_pivot_row(n, false);
  std::vector<std::size_t> scratch;

  Reduction r;
  for (std::size_t j = 0; j < n; ++j) {
    auto& col = m.columns[j];
    while (!col.empty() && column_with_low[col.back()] != none) {
      const auto& other = m.columns[column_with_low[col.back()]];
      scratch.clear();
      std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                    std::back_inserter(scratch));
      col.swap(scratch);
    }
    if (!col.empty()) {
      column_with_low[col.back()] = j;
      is_pivot_row[col.back()] = true;
      r.pairs.emplace_back(col.back(), j);
    }
  }
  for (std::size_t p = 0; p < n; ++p)
    if (m.columns[p].empty() && !is_pivot_row[p]) r.essentials.push_back(p);
  r.reduced = std::move(m);
  return r;
}

std::map<int, std::size_t> Diagram::counts_by_dim() const {
  std::map<int, std::size_t> out;
  for (const auto& p : points) ++out[p.dim];
  return out;
}

std::map<int, std::size_t> Diagram::essential_counts_by_dim() const {
  std::map<int, std::size_t> out;
  for (const auto& p : points)
    if (p.essential()) ++out[p.dim];
  return out;
}

Diagram diagram(const SimplicialComplex& k, const FiltrationFunction& f, int function_id) {
  return diagram_with_order(k, f, total_order(k, f), function_id);
}

Diagram diagram_with_order(const SimplicialComplex& k, const FiltrationFunction& f,
                           const TotalOrder& ord, int function_id) {
  if (auto why = order_incompatibility(k, f, ord)) throw Error(Errc::incompatible_order, *why);

  const Reduction r = reduce(boundary_matrix(k, ord));

  Diagram d;
  d.order = ord;
  d.function_id = function_id;
  d.points.reserve(r.pairs.size() + r.essentials.size());
  d.pivot_pairs.reserve(r.pairs.size() + r.essentials.size());
  for (const auto& [row, col] : r.pairs) {
    const std::size_t birth = ord.simplex_at(row);
    const std::size_t death = ord.simplex_at(col);
    d.pivot_pairs.push_back({birth, death});
    d.points.push_back({k.dim(birth), f[birth], Extended(f[death]), {birth, death}});
  }
  for (std::size_t pos : r.essentials) {
    const std::size_t birth = ord.simplex_at(pos);
    d.pivot_pairs.push_back({birth, std::nullopt});
    d.points.push_back({k.dim(birth), f[birth], Extended::infinity(), {birth, std::nullopt}});
  }
  std::sort(d.points.begin(), d.points.end(), [&](const DiagramPoint& a, const DiagramPoint& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (const int c = cmp(a.birth, b.birth); c != 0) return c < 0;
    if (a.death != b.death) return a.death < b.death;
    return ord.position_of(a.pivot.birth) < ord.position_of(b.pivot.birth);
  });
  return d;
}

std::string format_diagram(const SimplicialComplex& k, const Diagram& d,
                           std::optional<int> only_dim) {
  std::string out;
  for (const auto& p : d.points) {
    if (only_dim && p.dim != *only_dim) continue;
    out += std::to_string(p.dim);
    out += ' ';
    out += to_token(p.birth);
    out += ' ';
    out += to_token(p.death);
    out += ' ';
    out += k[p.pivot.birth].to_string();
    out += ' ';
    out += p.pivot.death ? k[*p.pivot.death].to_string() : std::string("-");
    out += '\n';
  }
  return out;
}

}  // namespace pstab
