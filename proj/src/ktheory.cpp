#include "afrokhlin/ktheory.hpp"

#include "afrokhlin/citations.hpp"
#include "afrokhlin/lambda_engine.hpp"

namespace afrokhlin {

TransitionMatrix transition(const ActionSpec &spec, std::uint64_t n) {
  RankPair f = spec.factor_at(n);
  return {f.p, f.q};
}

K0Element push_forward(const ActionSpec &spec, const K0Element &el, std::uint64_t to) {
  if (to < el.stage)
    throw InputError("push_forward cannot move from stage " + std::to_string(el.stage) +
                     " back to stage " + std::to_string(to));
  K0Element out = el;
  for (std::uint64_t n = el.stage + 1; n <= to; ++n) {
    auto [a, b] = transition(spec, n).apply(out.a, out.b);
    out.a = std::move(a);
    out.b = std::move(b);
  }
  out.stage = to;
  return out;
}

K0Element flip(const K0Element &el) { return {el.stage, el.b, el.a}; }

namespace {

// In (u, v) coordinates T_n acts as u -> k_n u, v -> (p_n - q_n) v, so the
// u-part is injective and the v-part dies exactly at a symmetric factor.
bool v_part_dies_after(const ActionSpec &spec, std::uint64_t stage) {
  if (!spec.is_infinite()) {
    for (std::uint64_t n = stage + 1; n <= spec.prefix_length(); ++n)
      if (spec.factor_at(n).symmetric())
        return true;
    return false;
  }
  return next_symmetric_index(spec, stage).has_value();
}

std::vector<std::string> keys(std::initializer_list<std::string_view> ks) {
  std::vector<std::string> out;
  for (auto k : ks)
    out.emplace_back(cite(k).key);
  return out;
}

} // namespace

bool is_equal(const ActionSpec &spec, const K0Element &x, const K0Element &y) {
  std::uint64_t common = std::max(x.stage, y.stage);
  K0Element px = push_forward(spec, x, common);
  K0Element py = push_forward(spec, y, common);
  if (px.u() != py.u())
    return false;
  if (px.v() == py.v())
    return true;
  return v_part_dies_after(spec, common);
}

bool is_zero(const ActionSpec &spec, const K0Element &x) {
  return is_equal(spec, x, K0Element{x.stage, 0, 0});
}

Verdict is_positive(const ActionSpec &spec, const K0Element &el, std::uint64_t cutoff) {
  if (!spec.is_infinite())
    throw InputError("is_positive needs an infinite action");
  Verdict v;
  v.citations = keys({anchors::kStructureK0});

  const Integer u = el.u();
  const Integer vv = el.v();
  const Integer vabs = abs(vv);

  if (u < 0) {
    v.decision = Decision::No;
    v.witness = {"negative-trace-part", el.stage, std::nullopt,
                 "a + b < 0 at every stage, so no representative is nonnegative"};
    return v;
  }
  if (vabs <= u) {
    v.decision = Decision::Yes;
    v.witness = {"nonnegative-representative", el.stage, std::nullopt,
                 "(a, b) is already in Z^2_+"};
    return v;
  }
  if (u == 0) {
    // v != 0 here: positive iff the class is zero.
    if (auto n = next_symmetric_index(spec, el.stage)) {
      v.decision = Decision::Yes;
      v.witness = {"annihilated", *n, std::nullopt,
                   "symmetric factor kills the class: it is zero"};
    } else {
      v.decision = Decision::No;
      v.citations.emplace_back(cite(anchors::kStrictEta).key);
      v.witness = {"nonzero-null-trace", std::nullopt, std::nullopt,
                   "a + b = 0 while a - b never vanishes"};
    }
    return v;
  }

  // u > 0, |v| > u: nonnegative at stage N iff |v| Lambda(stage, N) <= u.
  // Lambda(stage, N) decreases to Lambda(stage, inf).
  Rational threshold(u, vabs);
  threshold.canonicalize();
  auto limit = big_lambda_limit(spec, el.stage, cutoff);
  RationalInterval L = limit_interval(limit);
  bool known = !std::holds_alternative<TailUnknown>(limit);

  auto search = [&](std::uint64_t max_steps) -> std::optional<std::uint64_t> {
    Rational prod = 1;
    for (std::uint64_t n = el.stage + 1; n <= el.stage + max_steps; ++n) {
      prod *= lambda(spec, n);
      if (prod <= threshold)
        return n;
    }
    return std::nullopt;
  };

  if (known && L.hi < threshold) {
    if (auto n = search(kPositivitySearchLimit)) {
      v.decision = Decision::Yes;
      v.witness = {"threshold-crossed", *n, L,
                   "|a - b| Lambda(stage, N) <= a + b at the given N"};
    } else {
      v.decision = Decision::Unknown;
      v.cutoff = kPositivitySearchLimit;
      v.witness = {"search-exhausted", std::nullopt, L,
                   "limit is below the threshold but no stage found within the search limit"};
    }
    return v;
  }
  if (L.lo > threshold) {
    v.decision = Decision::No;
    v.citations.emplace_back(cite(anchors::kTracialLambda).key);
    v.witness = {"threshold-above", el.stage, L,
                 "Lambda(stage, inf) > (a + b)/|a - b|, so every representative has a negative entry"};
    return v;
  }
  // Boundary case: the limit may equal the threshold. Decide only on
  // attainment at a finite stage.
  if (auto *pos = std::get_if<TailPositive>(&limit);
      pos && L.is_point() && L.lo == threshold) {
    v.decision = Decision::Yes;
    v.witness = {"threshold-attained", pos->last_factor, L,
                 "every later lambda is 1 and the exact limit equals the threshold"};
    return v;
  }
  if (auto n = search(cutoff)) {
    v.decision = Decision::Yes;
    v.witness = {"threshold-attained", *n, L, "threshold reached at a finite stage"};
    return v;
  }
  v.decision = Decision::Unknown;
  v.cutoff = cutoff;
  v.witness = {"boundary-undecided", std::nullopt, L,
               "limit interval contains the threshold (a + b)/|a - b|"};
  return v;
}

Verdict is_totally_ordered(const ActionSpec &spec) {
  Verdict v = strict_rokhlin_verdict(spec);
  v.citations = keys({anchors::kStrictTotalOrder});
  return v;
}

} // namespace afrokhlin
