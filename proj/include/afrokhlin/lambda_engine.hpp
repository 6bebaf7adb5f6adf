#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>

#include "afrokhlin/action_model.hpp"
#include "afrokhlin/rational.hpp"

namespace afrokhlin {

inline constexpr std::uint64_t kDefaultCutoff = 64;

/// lambda_n = (p_n - q_n) / (p_n + q_n) of the normalized factor n.
Rational lambda(const ActionSpec &spec, std::uint64_t n);
Rational lambda(const RankPair &rp);

/// Lambda(m, n) = lambda_{m+1} ... lambda_n;  Lambda(m, m) = 1.
Rational big_lambda(const ActionSpec &spec, std::uint64_t m, std::uint64_t n);

/// Lambda(m, inf) vanishes because lambda_n = 0 at this index.
struct ZeroFactorWitness {
  std::uint64_t index;
};

/// Lambda(m, inf) vanishes because sum (1 - lambda_n) diverges.
struct DivergenceWitness {
  std::string test;        ///< "periodic-comparison" or "limit-below-one"
  Rational lambda_bound;   ///< lambda_n <= bound infinitely often / eventually
  std::string detail;
};

struct TailZero {
  std::variant<ZeroFactorWitness, DivergenceWitness> witness;
};

/// 0 < lower <= Lambda(m, inf) <= upper <= 1.
struct TailPositive {
  RationalInterval bounds;
  std::uint64_t last_factor;  ///< partial product ran over m+1..last_factor
};

/// Certificate not reached within the cutoff; `partial` still brackets the limit.
struct TailUnknown {
  std::uint64_t cutoff;
  RationalInterval partial;
};

using TailProductResult = std::variant<TailZero, TailPositive, TailUnknown>;

/// Decides Lambda(m, inf). The partial product covers factors
/// m+1..m+cutoff; a geometric tail bound certifies the rest.
TailProductResult big_lambda_limit(const ActionSpec &spec, std::uint64_t m,
                                   std::uint64_t cutoff = kDefaultCutoff);

/// Interval bracketing Lambda(m, inf): [0,0] for Zero, the bounds otherwise.
RationalInterval limit_interval(const TailProductResult &r);

/// Collapses factors m+1..n into one factor (P, Q) with
/// P + Q = prod k_j and P - Q = prod (p_j - q_j).
RankPair condense(const ActionSpec &spec, std::uint64_t m, std::uint64_t n);
RankPair condense(std::span<const RankPair> factors);

} // namespace afrokhlin
