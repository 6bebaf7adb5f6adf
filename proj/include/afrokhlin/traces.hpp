#pragma once

#include <cstdint>

#include "afrokhlin/ktheory.hpp"
#include "afrokhlin/lambda_engine.hpp"

namespace afrokhlin {

/// tau_n(a, b) = r tr(a) + s tr(b) on M_t(n) (+) M_t(n), r + s = 1.
struct TraceVector {
  std::uint64_t stage = 0;
  RationalInterval r;
  RationalInterval s;
};

/// T(x) = 1/2 [[1 + x, 1 - x], [1 - x, 1 + x]] for x in [0, 1].
class TMatrix {
public:
  /// Throws InputError unless 0 <= x <= 1.
  explicit TMatrix(const Rational &x);

  const Rational &parameter() const { return x_; }
  Rational diagonal() const { return (1 + x_) / 2; }
  Rational off_diagonal() const { return (1 - x_) / 2; }

  TMatrix operator*(const TMatrix &o) const;
  bool operator==(const TMatrix &o) const { return x_ == o.x_; }

  /// Applies T(x) for every x in an interval parameter to an interval
  /// vector; the result brackets all of them.
  static std::pair<RationalInterval, RationalInterval>
  apply(const RationalInterval &x, const RationalInterval &r, const RationalInterval &s);

private:
  Rational x_;
};

TMatrix t_matrix(const Rational &x);

/// Stage-n vector of extreme trace 1 (r -> 1 as n grows) or 0 (s -> 1).
/// Throws InputError when the tracial Rokhlin verdict is Yes (unique trace).
TraceVector extreme_trace_vector(const ActionSpec &spec, int extreme, std::uint64_t n,
                                 std::uint64_t cutoff = kDefaultCutoff);

/// The flip-invariant trace: (1/2, 1/2) at every stage.
TraceVector invariant_trace_vector(std::uint64_t n);

/// (r a + s b) / t(n). Throws InputError on a stage mismatch.
RationalInterval trace_of_element(const ActionSpec &spec, const K0Element &el,
                                  const TraceVector &tv);

} // namespace afrokhlin
