#include "afrokhlin/lambda_engine.hpp"

namespace afrokhlin {

Rational lambda(const RankPair &rp) {
  RankPair n = normalize(rp);
  Rational r(n.p - n.q, n.size());
  r.canonicalize();
  return r;
}

Rational lambda(const ActionSpec &spec, std::uint64_t n) {
  return lambda(spec.factor_at(n));
}

Rational big_lambda(const ActionSpec &spec, std::uint64_t m, std::uint64_t n) {
  if (n < m)
    throw RangeError("big_lambda needs m <= n");
  Integer num = 1, den = 1;
  for (std::uint64_t j = m + 1; j <= n; ++j) {
    RankPair rp = spec.factor_at(j);
    num *= rp.p - rp.q;
    den *= rp.size();
    if (num == 0)
      break;
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

// Tail bound for an AffinePower tail with lim lambda = 1: for offsets
// j >= settle, 1 - lambda = c / (A*B^j). Sum over j > J is c / (A*B^J*(B-1)).
struct AffineTailBound {
  std::uint64_t settle;  // first offset from which the closed form holds
  std::int64_t c;
};

AffineTailBound affine_tail_bound(const AffinePowerTail &t) {
  // p - q = (alpha-gamma)*B^j + (beta-delta). With |alpha-gamma| = A one of
  // alpha, gamma is zero; the difference keeps the sign of the slope once
  // |slope|*B^j >= |beta-delta|.
  std::int64_t slope = t.alpha - t.gamma;
  std::int64_t off = t.beta - t.delta;
  std::int64_t sign = slope > 0 ? 1 : -1;
  std::int64_t c = -sign * off;  // 1 - lambda = c / (A*B^j)
  std::uint64_t settle = 0;
  Integer bj = 1;
  while (Integer(slope < 0 ? -slope : slope) * bj < Integer(off < 0 ? -off : off)) {
    bj *= t.B;
    ++settle;
  }
  return {settle, c};
}

} // namespace

TailProductResult big_lambda_limit(const ActionSpec &spec, std::uint64_t m,
                                   std::uint64_t cutoff) {
  if (!spec.is_infinite())
    throw InputError("big_lambda_limit needs an infinite action");
  if (cutoff == 0)
    throw InputError("cutoff must be positive");

  if (auto idx = next_symmetric_index(spec, m))
    return TailZero{ZeroFactorWitness{*idx}};

  const std::uint64_t n0 = spec.prefix_length();

  if (auto *per = std::get_if<PeriodicTail>(&spec.tail())) {
    Rational worst = 1;
    for (const auto &rp : per->pairs)
      worst = std::min(worst, lambda(rp));
    if (worst < 1)
      return TailZero{DivergenceWitness{
          "periodic-comparison", worst,
          "a period entry has lambda <= " + to_string(worst) +
              " < 1, so sum(1 - lambda_n) diverges"}};
    // Every tail factor has lambda = 1: the value is the prefix product.
    std::uint64_t last = std::max(m, n0);
    Rational v = big_lambda(spec, m, last);
    return TailPositive{RationalInterval::point(v), last};
  }

  const auto &aff = std::get<AffinePowerTail>(spec.tail());
  std::int64_t slope_abs = aff.alpha > aff.gamma ? aff.alpha - aff.gamma : aff.gamma - aff.alpha;
  if (slope_abs < aff.A) {
    Rational lim(slope_abs, aff.A);
    lim.canonicalize();
    return TailZero{DivergenceWitness{
        "limit-below-one", lim,
        "lambda_n -> " + to_string(lim) + " < 1, so sum(1 - lambda_n) diverges"}};
  }

  AffineTailBound tb = affine_tail_bound(aff);
  const std::uint64_t last = m + cutoff;
  Rational partial = big_lambda(spec, m, last);

  // Offset of the last factor included; the bound covers offsets beyond it.
  bool certifiable = last > n0 && (last - n0 - 1) >= tb.settle;
  if (certifiable) {
    std::uint64_t J = last - n0 - 1;
    Integer bJ;
    mpz_ui_pow_ui(bJ.get_mpz_t(), static_cast<unsigned long>(aff.B), J);
    Rational tail_sum(Integer(tb.c), Integer(aff.A) * bJ * (aff.B - 1));
    tail_sum.canonicalize();
    if (tail_sum < 1) {
      Rational lo = partial * (1 - tail_sum);
      if (lo > 0)
        return TailPositive{{lo, partial}, last};
    }
  }
  return TailUnknown{cutoff, {Rational(0), partial}};
}

RationalInterval limit_interval(const TailProductResult &r) {
  if (std::holds_alternative<TailZero>(r))
    return RationalInterval::point(0);
  if (auto *p = std::get_if<TailPositive>(&r))
    return p->bounds;
  return std::get<TailUnknown>(r).partial;
}

RankPair condense(std::span<const RankPair> factors) {
  if (factors.empty())
    throw InputError("condense needs a nonempty factor range");
  Integer size = 1, diff = 1;
  for (const auto &f : factors) {
    RankPair n = normalize(f);
    size *= n.size();
    diff *= n.p - n.q;
  }
  // P + Q = size, P - Q = diff.
  Integer p = (size + diff) / 2;
  return {p, size - p};
}

RankPair condense(const ActionSpec &spec, std::uint64_t m, std::uint64_t n) {
  if (n <= m)
    throw InputError("condense needs m < n");
  std::vector<RankPair> fs;
  fs.reserve(n - m);
  for (std::uint64_t j = m + 1; j <= n; ++j)
    fs.push_back(spec.factor_at(j));
  return condense(fs);
}

} // namespace afrokhlin
