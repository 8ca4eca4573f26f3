#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace pstab {

// All filtration values, interpolation parameters and costs are exact.
using Rational = mpq_class;

// Parses a decimal literal ("-1.25", "3", "2.5e-3") or a fraction ("7/3").
// Non-finite spellings (inf, nan) are rejected. Throws Error(parse_error).
Rational parse_rational(std::string_view text);

// "p/q", or "p" for integers.
std::string to_fraction(const Rational& value);

// True iff the value has a finite decimal expansion.
bool has_terminating_decimal(const Rational& value);

// Exact decimal for terminating values, otherwise the fraction. Always
// parseable by parse_rational and round-trips exactly.
std::string to_token(const Rational& value);

// Rounded decimal with `digits` places after the point, for display only.
std::string to_decimal(const Rational& value, int digits = 10);

// A rational extended by +infinity. Used for deaths of essential classes and
// for matching costs (infeasible pairs cost +infinity).
class Extended {
 public:
  Extended() = default;
  Extended(Rational value) : value_(std::move(value)) {}  // NOLINT: implicit by intent

  static Extended infinity() {
    Extended e;
    e.infinite_ = true;
    return e;
  }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }
  // Precondition: is_finite().
  const Rational& value() const noexcept { return value_; }

  friend bool operator==(const Extended& a, const Extended& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Extended& a, const Extended& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend Extended operator+(const Extended& a, const Extended& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Extended(Rational(a.value_ + b.value_));
  }

 private:
  Rational value_{0};
  bool infinite_ = false;
};

inline Extended max(const Extended& a, const Extended& b) { return a < b ? b : a; }

// "inf" for +infinity, otherwise to_token.
std::string to_token(const Extended& value);

std::strong_ordering compare(const Rational& a, const Rational& b);

}  // namespace pstab
