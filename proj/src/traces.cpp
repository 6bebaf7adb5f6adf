#include "afrokhlin/traces.hpp"

#include "afrokhlin/classifier.hpp"

namespace afrokhlin {

TMatrix::TMatrix(const Rational &x) : x_(x) {
  if (x < 0 || x > 1)
    throw InputError("T(x) needs 0 <= x <= 1, got " + to_string(x));
}

TMatrix TMatrix::operator*(const TMatrix &o) const { return TMatrix(x_ * o.x_); }

std::pair<RationalInterval, RationalInterval>
TMatrix::apply(const RationalInterval &x, const RationalInterval &r, const RationalInterval &s) {
  // T(x)(r, s) = ((r + s)/2 + x (r - s)/2, (r + s)/2 - x (r - s)/2).
  RationalInterval half_sum = (r + s) * Rational(1, 2);
  RationalInterval half_diff = x * ((r - s) * Rational(1, 2));
  return {half_sum + half_diff, half_sum - half_diff};
}

TMatrix t_matrix(const Rational &x) { return TMatrix(x); }

TraceVector extreme_trace_vector(const ActionSpec &spec, int extreme, std::uint64_t n,
                                 std::uint64_t cutoff) {
  if (extreme != 0 && extreme != 1)
    throw InputError("extreme trace index must be 0 or 1");
  Verdict tr = tracial_rokhlin_verdict(spec, cutoff);
  if (tr.yes())
    throw InputError("'" + spec.name() +
                     "' has a unique trace; only the invariant trace vector exists");
  RationalInterval L = limit_interval(big_lambda_limit(spec, n, cutoff));
  RationalInterval big{(1 + L.lo) / 2, (1 + L.hi) / 2};
  RationalInterval small{(1 - L.hi) / 2, (1 - L.lo) / 2};
  if (extreme == 1)
    return {n, big, small};
  return {n, small, big};
}

TraceVector invariant_trace_vector(std::uint64_t n) {
  Rational half(1, 2);
  return {n, RationalInterval::point(half), RationalInterval::point(half)};
}

RationalInterval trace_of_element(const ActionSpec &spec, const K0Element &el,
                                  const TraceVector &tv) {
  if (el.stage != tv.stage)
    throw InputError("trace vector is at stage " + std::to_string(tv.stage) +
                     " but the element is at stage " + std::to_string(el.stage));
  Rational inv_t(Integer(1), spec.dimension_at(el.stage));
  inv_t.canonicalize();
  RationalInterval val = tv.r * Rational(el.a) + tv.s * Rational(el.b);
  return val * inv_t;
}

} // namespace afrokhlin
