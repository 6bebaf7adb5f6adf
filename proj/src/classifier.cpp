#include "afrokhlin/classifier.hpp"

#include "afrokhlin/citations.hpp"

namespace afrokhlin {

namespace {

void require_infinite(const ActionSpec &spec) {
  if (!spec.is_infinite())
    throw InputError("classification needs an infinite action; '" + spec.name() +
                     "' has tail kind none");
}

std::vector<std::string> keys(std::initializer_list<std::string_view> ks) {
  std::vector<std::string> out;
  for (auto k : ks)
    out.emplace_back(cite(k).key);
  return out;
}

Witness symmetric_tail_witness(const ActionSpec &spec) {
  auto idx = next_symmetric_index(spec, spec.prefix_length());
  RankPair f = spec.factor_at(*idx);
  return {"symmetric-tail-factor", idx, std::nullopt,
          "tail factor (" + to_string(f.p) + "," + to_string(f.q) +
              ") recurs with lambda = 0"};
}

Witness finitely_many_symmetric_witness(const ActionSpec &spec) {
  auto last = last_symmetric_index(spec);
  std::string detail = last ? "last symmetric factor is n = " + std::to_string(*last)
                            : "no factor is symmetric";
  detail += "; the tail rule has no recurring symmetric factor";
  return {"finitely-many-symmetric", last, std::nullopt, detail};
}

} // namespace

std::string_view to_string(Decision d) {
  switch (d) {
  case Decision::Yes:
    return "yes";
  case Decision::No:
    return "no";
  case Decision::Unknown:
    break;
  }
  return "unknown";
}

Verdict strict_rokhlin_verdict(const ActionSpec &spec) {
  require_infinite(spec);
  Verdict v;
  v.citations = keys({anchors::kStrictSymmetric});
  if (infinitely_many_symmetric(spec)) {
    v.decision = Decision::Yes;
    v.witness = symmetric_tail_witness(spec);
  } else {
    v.decision = Decision::No;
    v.witness = finitely_many_symmetric_witness(spec);
  }
  return v;
}

Verdict tracial_rokhlin_verdict(const ActionSpec &spec, std::uint64_t cutoff) {
  require_infinite(spec);
  Verdict v;
  v.citations = keys({anchors::kTracialLambda});
  if (infinitely_many_symmetric(spec)) {
    v.decision = Decision::Yes;
    v.witness = symmetric_tail_witness(spec);
    v.witness.kind = "zero-factor-recurs";
    return v;
  }
  // Past the last symmetric factor, Lambda(m*, inf) = 0 holds iff it holds
  // for every m, since Lambda(m, inf) = Lambda(m, m*) Lambda(m*, inf).
  std::uint64_t m = last_symmetric_index(spec).value_or(0);
  auto res = big_lambda_limit(spec, m, cutoff);
  if (auto *z = std::get_if<TailZero>(&res)) {
    v.decision = Decision::Yes;
    const auto &d = std::get<DivergenceWitness>(z->witness);
    v.witness = {"divergence:" + d.test, m, RationalInterval{0, d.lambda_bound}, d.detail};
  } else if (auto *p = std::get_if<TailPositive>(&res)) {
    v.decision = Decision::No;
    v.witness = {"positive-tail-product", m, p->bounds,
                 "Lambda(" + std::to_string(m) + ", inf) lies in the interval"};
  } else {
    const auto &u = std::get<TailUnknown>(res);
    v.decision = Decision::Unknown;
    v.cutoff = u.cutoff;
    v.witness = {"cutoff-exhausted", m, u.partial, "tail bound not certified within cutoff"};
  }
  return v;
}

Verdict outer_simple_verdict(const ActionSpec &spec) {
  require_infinite(spec);
  Verdict v;
  v.citations = keys({anchors::kOuterNontrivial, anchors::kOuterSimple});
  if (infinitely_many_nontrivial(spec)) {
    v.decision = Decision::Yes;
    v.witness = {"nontrivial-factors-recur", std::nullopt, std::nullopt,
                 "q_n > 0 for infinitely many n (tail rule)"};
  } else {
    v.decision = Decision::No;
    v.citations.emplace_back(cite(anchors::kOuterInner).key);
    v.witness = {"eventually-trivial", std::nullopt, std::nullopt,
                 "q_n = 0 eventually: the action is inner and the crossed product is D (+) D"};
  }
  return v;
}

UhfVerdict crossed_product_uhf_verdict(const ActionSpec &spec) {
  Verdict v = strict_rokhlin_verdict(spec);
  v.citations = keys({anchors::kStrictUhf});
  UhfVerdict out{v, std::nullopt};
  if (v.yes())
    out.supernatural = supernatural_of_algebra(spec);
  return out;
}

std::optional<int> extreme_trace_count(const ActionSpec &spec, std::uint64_t cutoff) {
  Verdict t = tracial_rokhlin_verdict(spec, cutoff);
  if (t.yes())
    return 1;
  if (t.no())
    return 2;
  return std::nullopt;
}

ClassificationReport classify(const ActionSpec &spec, std::uint64_t cutoff) {
  ClassificationReport r;
  r.cutoff = cutoff;
  r.strict_rokhlin = strict_rokhlin_verdict(spec);
  r.tracial_rokhlin = tracial_rokhlin_verdict(spec, cutoff);
  r.outer = outer_simple_verdict(spec);
  r.crossed_product_simple = r.outer;
  r.crossed_product_simple.citations = keys({anchors::kOuterSimple});
  auto uhf = crossed_product_uhf_verdict(spec);
  r.crossed_product_uhf = uhf.verdict;
  r.crossed_product_supernatural = uhf.supernatural;
  if (r.tracial_rokhlin.yes())
    r.extreme_trace_count = 1;
  else if (r.tracial_rokhlin.no())
    r.extreme_trace_count = 2;
  return r;
}

bool has_unknown(const ClassificationReport &r) {
  for (const Verdict *v : {&r.strict_rokhlin, &r.tracial_rokhlin, &r.outer,
                           &r.crossed_product_simple, &r.crossed_product_uhf})
    if (v->decision == Decision::Unknown)
      return true;
  return !r.extreme_trace_count.has_value();
}

} // namespace afrokhlin
