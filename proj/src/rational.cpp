#include "afrokhlin/rational.hpp"

#include <algorithm>
#include <limits>

namespace afrokhlin {

RationalInterval operator+(const RationalInterval &a, const RationalInterval &b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RationalInterval operator-(const RationalInterval &a, const RationalInterval &b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

RationalInterval operator*(const RationalInterval &a, const Rational &c) {
  Rational x = a.lo * c;
  Rational y = a.hi * c;
  if (x <= y)
    return {x, y};
  return {y, x};
}

RationalInterval operator*(const RationalInterval &a, const RationalInterval &b) {
  Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

std::string to_string(const Integer &x) { return x.get_str(); }

std::string to_string(const Rational &x) { return x.get_str(); }

std::string to_decimal(const Rational &x, unsigned digits, bool round_up) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  Rational scaled = x * Rational(scale);
  Integer q;
  if (round_up)
    mpz_cdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  else
    mpz_fdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());

  bool negative = q < 0;
  Integer mag = abs(q);
  std::string body = mag.get_str();
  if (body.size() <= digits)
    body.insert(0, digits + 1 - body.size(), '0');
  std::string out = body.substr(0, body.size() - digits);
  if (digits > 0)
    out += "." + body.substr(body.size() - digits);
  return negative ? "-" + out : out;
}

Rational parse_rational(const std::string &text) {
  if (text.empty())
    throw InputError("empty rational literal");
  Rational r;
  if (r.set_str(text, 10) != 0 || r.get_den() == 0)
    throw InputError("malformed rational literal '" + text + "'");
  r.canonicalize();
  return r;
}

std::int64_t to_int64(const Integer &x) {
  if (x < std::numeric_limits<std::int64_t>::min() ||
      x > std::numeric_limits<std::int64_t>::max())
    throw InputError("integer " + x.get_str() + " does not fit in 64 bits");
  return x.get_si();
}

} // namespace afrokhlin
