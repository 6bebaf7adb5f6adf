#include "afrokhlin/action_model.hpp"

#include <sstream>

namespace afrokhlin {

namespace {

void check_magnitude(std::int64_t v, const char *what) {
  if (v > kMaxInputMagnitude || v < -kMaxInputMagnitude)
    throw InputError(std::string(what) + " exceeds the supported magnitude 2^40");
}

void check_magnitude(const Integer &v, const char *what) {
  if (abs(v) > Integer(kMaxInputMagnitude))
    throw InputError(std::string(what) + " exceeds the supported magnitude 2^40");
}

Integer power(std::int64_t base, std::uint64_t exp) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp);
  return r;
}

RankPair affine_factor(const AffinePowerTail &t, std::uint64_t j) {
  Integer bj = power(t.B, j);
  return normalize({Integer(t.alpha) * bj + t.beta, Integer(t.gamma) * bj + t.delta});
}

void validate_affine(const AffinePowerTail &t) {
  for (auto v : {t.B, t.A, t.alpha, t.beta, t.gamma, t.delta})
    check_magnitude(v, "affine_power parameter");
  if (t.B < 2)
    throw InputError("affine_power: B must be >= 2");
  if (t.A < 1)
    throw InputError("affine_power: A must be >= 1");
  if (t.alpha + t.gamma != t.A || t.beta + t.delta != 0)
    throw InputError("affine_power: need alpha + gamma = A and beta + delta = 0");
  // alpha*B^j + beta is monotone in j, so nonnegativity for all j >= 0 reduces
  // to a nonnegative slope and a nonnegative value at j = 0.
  if (t.alpha < 0 || t.alpha + t.beta < 0)
    throw InputError("affine_power: p(n) becomes negative");
  if (t.gamma < 0 || t.gamma + t.delta < 0)
    throw InputError("affine_power: q(n) becomes negative");
}

// Eventual sign class of the smaller of the two affine sequences.
bool affine_min_eventually_positive(const AffinePowerTail &t) {
  std::int64_t a = t.alpha, b = t.beta;
  if (t.gamma < t.alpha || (t.gamma == t.alpha && t.delta < t.beta)) {
    a = t.gamma;
    b = t.delta;
  }
  return a > 0 || (a == 0 && b > 0);
}

} // namespace

RankPair normalize(const RankPair &rp) {
  if (rp.p < 0 || rp.q < 0)
    throw InputError("invalid factor: negative rank");
  if (rp.p + rp.q == 0)
    throw InputError("invalid factor: p + q = 0");
  if (rp.p >= rp.q)
    return rp;
  return {rp.q, rp.p};
}

ActionSpec::ActionSpec(std::string name, std::vector<RankPair> prefix, TailRule tail)
    : name_(std::move(name)), tail_(std::move(tail)) {
  prefix_.reserve(prefix.size());
  for (const auto &rp : prefix) {
    check_magnitude(rp.p, "rank");
    check_magnitude(rp.q, "rank");
    prefix_.push_back(normalize(rp));
  }
  if (auto *per = std::get_if<PeriodicTail>(&tail_)) {
    if (per->pairs.empty())
      throw InputError("periodic tail needs at least one pair");
    for (auto &rp : per->pairs) {
      check_magnitude(rp.p, "rank");
      check_magnitude(rp.q, "rank");
      rp = normalize(rp);
    }
  } else if (auto *aff = std::get_if<AffinePowerTail>(&tail_)) {
    validate_affine(*aff);
  }
}

RankPair ActionSpec::factor_at(std::uint64_t n) const {
  if (n == 0)
    throw RangeError("factor indices start at 1");
  if (n <= prefix_.size())
    return prefix_[n - 1];
  std::uint64_t j = n - prefix_.size() - 1;
  if (auto *per = std::get_if<PeriodicTail>(&tail_))
    return per->pairs[j % per->pairs.size()];
  if (auto *aff = std::get_if<AffinePowerTail>(&tail_))
    return affine_factor(*aff, j);
  throw RangeError("factor " + std::to_string(n) + " beyond finite action '" +
                   name_ + "' of length " + std::to_string(prefix_.size()));
}

Integer ActionSpec::dimension_at(std::uint64_t n) const {
  Integer t = 1;
  for (std::uint64_t m = 1; m <= n; ++m)
    t *= factor_at(m).size();
  return t;
}

// --- tail analysis ---------------------------------------------------------

AffineSymmetry affine_symmetric_offsets(const AffinePowerTail &t) {
  std::int64_t slope = t.alpha - t.gamma;
  std::int64_t offset = t.delta - t.beta;
  if (slope == 0)
    return {offset == 0, std::nullopt};
  // Need B^j = offset / slope.
  if (offset % slope != 0)
    return {};
  std::int64_t target = offset / slope;
  if (target < 1)
    return {};
  std::uint64_t j = 0;
  while (target % t.B == 0) {
    target /= t.B;
    ++j;
  }
  if (target != 1)
    return {};
  return {false, j};
}

std::optional<std::uint64_t> next_symmetric_index(const ActionSpec &spec,
                                                  std::uint64_t after) {
  const std::uint64_t n0 = spec.prefix_length();
  for (std::uint64_t n = after + 1; n <= n0; ++n)
    if (spec.prefix()[n - 1].symmetric())
      return n;
  std::uint64_t first_tail = std::max(after + 1, n0 + 1);
  if (auto *per = std::get_if<PeriodicTail>(&spec.tail())) {
    const std::uint64_t len = per->pairs.size();
    for (std::uint64_t k = 0; k < len; ++k) {
      std::uint64_t n = first_tail + k;
      if (per->pairs[(n - n0 - 1) % len].symmetric())
        return n;
    }
    return std::nullopt;
  }
  if (auto *aff = std::get_if<AffinePowerTail>(&spec.tail())) {
    auto sym = affine_symmetric_offsets(*aff);
    if (sym.all)
      return first_tail;
    if (sym.offset && n0 + 1 + *sym.offset >= first_tail)
      return n0 + 1 + *sym.offset;
  }
  return std::nullopt;
}

bool infinitely_many_symmetric(const ActionSpec &spec) {
  if (auto *per = std::get_if<PeriodicTail>(&spec.tail())) {
    for (const auto &rp : per->pairs)
      if (rp.symmetric())
        return true;
    return false;
  }
  if (auto *aff = std::get_if<AffinePowerTail>(&spec.tail()))
    return affine_symmetric_offsets(*aff).all;
  return false;
}

std::optional<std::uint64_t> last_symmetric_index(const ActionSpec &spec) {
  if (infinitely_many_symmetric(spec))
    throw std::logic_error("last_symmetric_index: infinitely many symmetric factors");
  if (auto *aff = std::get_if<AffinePowerTail>(&spec.tail())) {
    if (auto off = affine_symmetric_offsets(*aff).offset)
      return spec.prefix_length() + 1 + *off;
  }
  for (std::uint64_t n = spec.prefix_length(); n >= 1; --n)
    if (spec.prefix()[n - 1].symmetric())
      return n;
  return std::nullopt;
}

bool infinitely_many_nontrivial(const ActionSpec &spec) {
  if (auto *per = std::get_if<PeriodicTail>(&spec.tail())) {
    for (const auto &rp : per->pairs)
      if (rp.q > 0)
        return true;
    return false;
  }
  if (auto *aff = std::get_if<AffinePowerTail>(&spec.tail()))
    return affine_min_eventually_positive(*aff);
  return false;
}

// --- supernatural numbers --------------------------------------------------

std::vector<std::pair<std::uint64_t, std::uint64_t>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    std::uint64_t e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e)
      out.emplace_back(d, e);
  }
  if (n > 1)
    out.emplace_back(n, 1);
  return out;
}

void SupernaturalNumber::add(std::uint64_t prime, std::uint64_t e) {
  auto &cur = exps_[prime];
  if (cur == kInfinite || e == kInfinite || cur > kInfinite - 1 - e)
    cur = kInfinite;
  else
    cur += e;
}

void SupernaturalNumber::multiply(std::uint64_t n) {
  if (n == 0)
    throw InputError("supernatural numbers have no factor 0");
  for (auto [p, e] : factorize(n))
    add(p, e);
}

void SupernaturalNumber::multiply_infinitely(std::uint64_t n) {
  if (n == 0)
    throw InputError("supernatural numbers have no factor 0");
  for (auto [p, e] : factorize(n))
    add(p, kInfinite);
}

SupernaturalNumber &SupernaturalNumber::operator*=(const SupernaturalNumber &o) {
  for (auto [p, e] : o.exps_)
    add(p, e);
  return *this;
}

std::uint64_t SupernaturalNumber::exponent(std::uint64_t prime) const {
  auto it = exps_.find(prime);
  return it == exps_.end() ? 0 : it->second;
}

bool SupernaturalNumber::is_infinite_type() const {
  if (exps_.empty())
    return false;
  for (auto [p, e] : exps_)
    if (e != kInfinite)
      return false;
  return true;
}

std::string SupernaturalNumber::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto [p, e] : exps_) {
    if (!first)
      os << ", ";
    first = false;
    os << p << ':';
    if (e == kInfinite)
      os << "inf";
    else
      os << e;
  }
  os << '}';
  return os.str();
}

SupernaturalNumber supernatural_of_algebra(const ActionSpec &spec) {
  if (!spec.is_infinite())
    throw InputError("supernatural number needs an infinite action");
  SupernaturalNumber s;
  for (const auto &rp : spec.prefix())
    s.multiply(rp.size().get_ui());
  if (auto *per = std::get_if<PeriodicTail>(&spec.tail())) {
    for (const auto &rp : per->pairs)
      s.multiply_infinitely(rp.size().get_ui());
  } else if (auto *aff = std::get_if<AffinePowerTail>(&spec.tail())) {
    // k = A*B^j: every prime of A and of B divides infinitely many factors.
    s.multiply_infinitely(static_cast<std::uint64_t>(aff->A));
    s.multiply_infinitely(static_cast<std::uint64_t>(aff->B));
  }
  return s;
}

} // namespace afrokhlin
