#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace afrokhlin {

using Integer = mpz_class;
using Rational = mpq_class;

/// Malformed or out-of-contract input (CLI exit code 2).
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Factor index or stage outside the defined range of a spec.
class RangeError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

/// Closed interval with exact rational endpoints, lo <= hi.
struct RationalInterval {
  Rational lo;
  Rational hi;

  static RationalInterval point(const Rational &x) { return {x, x}; }

  bool contains(const Rational &x) const { return lo <= x && x <= hi; }
  bool is_point() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  bool overlaps(const RationalInterval &o) const {
    return lo <= o.hi && o.lo <= hi;
  }
};

RationalInterval operator+(const RationalInterval &a, const RationalInterval &b);
RationalInterval operator-(const RationalInterval &a, const RationalInterval &b);
RationalInterval operator*(const RationalInterval &a, const Rational &c);
RationalInterval operator*(const RationalInterval &a, const RationalInterval &b);

std::string to_string(const Integer &x);
std::string to_string(const Rational &x);

/// Decimal rendering with `digits` fractional digits. Rounds toward -inf
/// when `round_up` is false, toward +inf otherwise, so interval endpoints
/// stay outward-rounded.
std::string to_decimal(const Rational &x, unsigned digits, bool round_up = false);

/// Parses "a", "-a" or "a/b".
Rational parse_rational(const std::string &text);

/// Converts to int64, throwing InputError when it does not fit.
std::int64_t to_int64(const Integer &x);

} // namespace afrokhlin
