#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pstab {

enum class Errc {
  // input / precondition failures
  parse_error,
  malformed_simplex,
  duplicate_simplex,
  missing_face,
  non_finite_value,
  non_monotone,
  size_mismatch,
  invalid_filtration,
  incompatible_order,
  dimension_mismatch,
  count_mismatch,
  invalid_matching,
  too_large,
  domain_mismatch,
  t_out_of_range,
  non_unique_values,
  order_not_constant,
  chain_mismatch,
  // the mathematics failed: always an implementation bug
  multiset_mismatch,
  internal_proof_violation,
};

std::string_view errc_name(Errc code);

// True for codes that signal a broken invariant rather than bad input.
constexpr bool is_internal(Errc code) {
  return code == Errc::multiset_mismatch ||
         code == Errc::internal_proof_violation;
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }
  bool internal() const noexcept { return is_internal(code_); }

 private:
  Errc code_;
};

}  // namespace pstab
