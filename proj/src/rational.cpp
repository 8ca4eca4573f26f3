#include "pstab/rational.hpp"

#include <cctype>

#include "pstab/error.hpp"

namespace pstab {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::parse_error: return "ParseError";
    case Errc::malformed_simplex: return "MalformedSimplex";
    case Errc::duplicate_simplex: return "DuplicateSimplex";
    case Errc::missing_face: return "MissingFace";
    case Errc::non_finite_value: return "NonFiniteValue";
    case Errc::non_monotone: return "NonMonotone";
    case Errc::size_mismatch: return "SizeMismatch";
    case Errc::invalid_filtration: return "InvalidFiltration";
    case Errc::incompatible_order: return "IncompatibleOrder";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::count_mismatch: return "CountMismatch";
    case Errc::invalid_matching: return "InvalidMatching";
    case Errc::too_large: return "TooLarge";
    case Errc::domain_mismatch: return "DomainMismatch";
    case Errc::t_out_of_range: return "TOutOfRange";
    case Errc::non_unique_values: return "NonUniqueValues";
    case Errc::order_not_constant: return "OrderNotConstant";
    case Errc::chain_mismatch: return "ChainMismatch";
    case Errc::multiset_mismatch: return "MultisetMismatch";
    case Errc::internal_proof_violation: return "InternalProofViolation";
  }
  return "Unknown";
}

namespace {

[[noreturn]] void bad_literal(std::string_view text, const char* why) {
  throw Error(Errc::parse_error,
              "invalid number '" + std::string(text) + "': " + why);
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) bad_literal(text, "empty");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    bool negative = false;
    if (!num.empty() && (num[0] == '-' || num[0] == '+')) {
      negative = num[0] == '-';
      num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) bad_literal(text, "malformed fraction");
    mpz_class d(std::string(den), 10);
    if (d == 0) bad_literal(text, "zero denominator");
    Rational r(mpz_class(std::string(num), 10), d);
    r.canonicalize();
    if (negative) r = -r;
    return r;
  }

  std::string_view rest = text;
  bool negative = false;
  if (rest[0] == '-' || rest[0] == '+') {
    negative = rest[0] == '-';
    rest.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = rest.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp = rest.substr(e + 1);
    rest = rest.substr(0, e);
    bool exp_negative = false;
    if (!exp.empty() && (exp[0] == '-' || exp[0] == '+')) {
      exp_negative = exp[0] == '-';
      exp.remove_prefix(1);
    }
    if (!all_digits(exp) || exp.size() > 6) bad_literal(text, "malformed exponent");
    exponent = std::stol(std::string(exp));
    if (exp_negative) exponent = -exponent;
  }

  std::string_view int_part = rest;
  std::string_view frac_part;
  if (auto dot = rest.find('.'); dot != std::string_view::npos) {
    int_part = rest.substr(0, dot);
    frac_part = rest.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) bad_literal(text, "no digits");
  if (!int_part.empty() && !all_digits(int_part)) bad_literal(text, "not a decimal literal");
  if (!frac_part.empty() && !all_digits(frac_part)) bad_literal(text, "not a decimal literal");

  std::string digits = std::string(int_part) + std::string(frac_part);
  mpz_class mantissa(digits.empty() ? std::string("0") : digits, 10);
  exponent -= static_cast<long>(frac_part.size());

  Rational r(mantissa);
  if (exponent > 0) {
    r *= Rational(pow10(static_cast<unsigned long>(exponent)));
  } else if (exponent < 0) {
    r /= Rational(pow10(static_cast<unsigned long>(-exponent)));
  }
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string to_fraction(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool has_terminating_decimal(const Rational& value) {
  mpz_class den = value.get_den();
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) den /= 2;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) den /= 5;
  return den == 1;
}

std::string to_token(const Rational& value) {
  if (!has_terminating_decimal(value)) return to_fraction(value);
  if (value.get_den() == 1) return value.get_num().get_str();

  // den = 2^a 5^b; scale by 10^max(a,b) to get an integer.
  mpz_class den = value.get_den();
  unsigned long places = 0;
  while (den != 1) {
    if (mpz_divisible_ui_p(den.get_mpz_t(), 10)) {
      den /= 10;
    } else if (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
      den /= 2;
    } else {
      den /= 5;
    }
    ++places;
  }
  mpz_class scaled = value.get_num() * pow10(places) / value.get_den();
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.get_str();
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  while (digits.back() == '0') digits.pop_back();
  if (digits.back() == '.') digits.pop_back();
  return negative ? "-" + digits : digits;
}

std::string to_token(const Extended& value) {
  return value.is_infinite() ? std::string("inf") : to_token(value.value());
}

std::string to_decimal(const Rational& value, int digits) {
  const mpz_class scale = pow10(static_cast<unsigned long>(digits));
  // round half away from zero
  mpz_class scaled_num = value.get_num() * scale;
  const bool negative = scaled_num < 0;
  if (negative) scaled_num = -scaled_num;
  mpz_class q = (2 * scaled_num + value.get_den()) / (2 * value.get_den());
  std::string s = q.get_str();
  const auto places = static_cast<std::size_t>(digits);
  if (places > 0) {
    if (s.size() <= places) s.insert(0, places - s.size() + 1, '0');
    s.insert(s.size() - places, ".");
  }
  return (negative && q != 0) ? "-" + s : s;
}

std::strong_ordering compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace pstab
