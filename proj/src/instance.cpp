#include "pstab/instance.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <random>
#include <sstream>

#include "pstab/order.hpp"

namespace pstab {

namespace {

[[noreturn]] void parse_fail(const std::string& path, std::size_t line, const std::string& msg) {
  throw Error(Errc::parse_error, path + ":" + std::to_string(line) + ": " + msg);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Turns a library error about entry positions into one keyed by file lines.
[[noreturn]] void rethrow_with_lines(const InstanceFile& inst, const ComplexError& e) {
  std::string msg;
  for (const auto& issue : e.issues()) {
    std::string text = issue.message();
    text = text.substr(text.find(": ") + 2);
    msg += "\n  " + inst.path + ":" + std::to_string(inst.line_of[issue.position]) + ": " + text;
  }
  throw Error(e.code(), std::to_string(e.issues().size()) + " issue(s)" + msg);
}

}  // namespace

InstanceFile parse_instance(std::istream& in, const std::string& path) {
  InstanceFile inst;
  inst.path = path;
  std::vector<std::vector<Vertex>> simplices;
  std::vector<std::vector<Rational>> columns;

  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (split_ws(line).empty()) continue;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) parse_fail(path, lineno, "missing ':'");
    const auto vertex_tokens = split_ws(line.substr(0, colon));
    const auto value_tokens = split_ws(line.substr(colon + 1));
    if (vertex_tokens.empty()) parse_fail(path, lineno, "no vertices");
    if (value_tokens.empty() || value_tokens.size() > 2)
      parse_fail(path, lineno, "expected one or two values");
    if (columns.empty()) columns.resize(value_tokens.size());
    if (value_tokens.size() != columns.size())
      parse_fail(path, lineno, "expected " + std::to_string(columns.size()) + " value(s)");

    std::vector<Vertex> vertices;
    for (auto tok : vertex_tokens) {
      Vertex v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        parse_fail(path, lineno, "bad vertex id '" + std::string(tok) + "'");
      vertices.push_back(v);
    }
    for (std::size_t c = 0; c < value_tokens.size(); ++c) {
      try {
        columns[c].push_back(parse_rational(value_tokens[c]));
      } catch (const Error& e) {
        parse_fail(path, lineno, e.what());
      }
    }
    simplices.push_back(std::move(vertices));
    inst.line_of.push_back(lineno);
  }
  if (columns.empty()) columns.resize(1);

  try {
    inst.complex = validate_complex(simplices);
  } catch (const ComplexError& e) {
    rethrow_with_lines(inst, e);
  }
  for (auto& col : columns) inst.functions.emplace_back(std::move(col));

  std::string problems;
  Errc code = Errc::invalid_filtration;
  for (std::size_t c = 0; c < inst.functions.size(); ++c) {
    const FiltrationReport report = validate_filtration(inst.complex, inst.functions[c]);
    for (const auto& issue : report.issues) {
      code = issue.kind;
      problems += "\n  " + path + ":" + std::to_string(inst.line_of[issue.coface]) + ": f" +
                  std::to_string(c) + " " + issue.message(inst.complex);
    }
  }
  if (!problems.empty()) throw Error(code, "function is not monotone" + problems);
  return inst;
}

InstanceFile parse_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path.string());
  return parse_instance(in, path.string());
}

InstanceFile make_instance(const std::vector<std::vector<Vertex>>& simplices,
                           std::vector<FiltrationFunction> functions) {
  InstanceFile inst;
  inst.complex = validate_complex(simplices);
  inst.functions = std::move(functions);
  for (std::size_t i = 0; i < simplices.size(); ++i) inst.line_of.push_back(i + 1);
  for (const auto& f : inst.functions) require_valid_filtration(inst.complex, f);
  return inst;
}

std::string print_instance(const InstanceFile& inst) {
  std::string out;
  for (std::size_t i = 0; i < inst.complex.size(); ++i) {
    for (Vertex v : inst.complex[i].vertices()) out += std::to_string(v) + ' ';
    out += ':';
    for (const auto& f : inst.functions) out += ' ' + to_token(f[i]);
    out += '\n';
  }
  return out;
}

InstanceFile generate_instance(const GeneratorConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  std::bernoulli_distribution keep(std::clamp(cfg.fill_probability, 0.0, 1.0));

  std::vector<std::vector<Vertex>> simplices;
  for (Vertex v = 0; v < cfg.num_vertices; ++v) simplices.push_back({v});

  // Dimension by dimension: extend each (d-1)-simplex by a larger vertex and
  // keep the candidate if all of its facets already exist.
  std::map<std::vector<Vertex>, bool> present;
  for (const auto& s : simplices) present[s] = true;
  std::size_t layer_begin = 0;
  for (int d = 1; d <= cfg.max_dimension; ++d) {
    const std::size_t layer_end = simplices.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (Vertex v = simplices[i].back() + 1; v < cfg.num_vertices; ++v) {
        std::vector<Vertex> cand = simplices[i];
        cand.push_back(v);
        bool closed = true;
        for (std::size_t drop = 0; drop + 1 < cand.size() && closed; ++drop) {
          std::vector<Vertex> face = cand;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
          closed = present.contains(face);
        }
        if (closed && keep(rng)) {
          present[cand] = true;
          simplices.push_back(std::move(cand));
        }
      }
    }
    layer_begin = layer_end;
  }

  InstanceFile inst;
  inst.complex = validate_complex(simplices);
  for (std::size_t i = 0; i < simplices.size(); ++i) inst.line_of.push_back(i + 1);

  const std::size_t n = inst.complex.size();
  mpz_class scale = 10;
  while (scale <= static_cast<unsigned long>(n)) scale *= 10;
  const int lo = std::min(cfg.value_min, cfg.value_max);
  const int hi = std::max(cfg.value_min, cfg.value_max);
  std::uniform_int_distribution<int> draw(lo, hi);

  for (unsigned fn = 0; fn < std::max(1u, cfg.num_functions); ++fn) {
    std::vector<Rational> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = draw(rng);
    // Simplices are listed faces-first, so one forward pass repairs monotonicity.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t face : inst.complex.facets(i))
        if (values[face] > values[i]) values[i] = values[face];
    FiltrationFunction repaired(values);
    const TotalOrder ord = total_order(inst.complex, repaired);
    for (std::size_t p = 0; p < n; ++p) {
      const std::size_t s = ord.simplex_at(p);
      Rational offset(mpz_class(static_cast<unsigned long>(p)), scale);
      offset.canonicalize();
      values[s] += offset;
    }
    inst.functions.emplace_back(std::move(values));
  }
  return inst;
}

}  // namespace pstab
