#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "pstab/complex.hpp"

namespace pstab {

// A complex with one or two filtration functions, as stored on disk:
//
//   # comment
//   v0 v1 ... vk : f0_value [f1_value]
//
// Values are decimal literals or fractions and are read exactly.
struct InstanceFile {
  std::string path;
  SimplicialComplex complex;
  std::vector<FiltrationFunction> functions;
  std::vector<std::size_t> line_of;  // source line of each simplex, 1-based

  friend bool operator==(const InstanceFile& a, const InstanceFile& b) {
    return a.complex.simplices() == b.complex.simplices() && a.functions == b.functions;
  }
};

// Throws Error(parse_error) with the line number on syntax errors; complex
// and monotonicity violations are reported together, each with its line.
InstanceFile parse_instance(std::istream& in, const std::string& path = "<input>");
InstanceFile parse_instance_file(const std::filesystem::path& path);

InstanceFile make_instance(const std::vector<std::vector<Vertex>>& simplices,
                           std::vector<FiltrationFunction> functions);

// Inverse of parse_instance: parse(print(x)) == x.
std::string print_instance(const InstanceFile& inst);

struct GeneratorConfig {
  std::uint64_t seed = 0;
  unsigned num_vertices = 6;
  int max_dimension = 2;
  // Probability of keeping each candidate simplex whose facets are all present.
  double fill_probability = 0.5;
  int value_min = 0;
  int value_max = 10;
  unsigned num_functions = 2;
};

// Random clique-style complex with monotone, unique-valued filtrations.
// Integer values are drawn per simplex, raised to the max over their facets,
// then offset by rank / 10^k (rank in the induced total order) so that all
// values differ while staying monotone. Same config gives the same instance.
InstanceFile generate_instance(const GeneratorConfig& cfg);

}  // namespace pstab
