#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "afrokhlin/rational.hpp"

namespace afrokhlin {

/// Ranks of the +1 and -1 eigenprojections of one tensor factor M_k,
/// k = p + q. Stored normalized (p >= q) once ingested into an ActionSpec.
struct RankPair {
  Integer p;
  Integer q;

  Integer size() const { return p + q; }
  bool symmetric() const { return p == q; }
  bool operator==(const RankPair &o) const { return p == o.p && q == o.q; }
};

/// Returns (max(p,q), min(p,q)). Throws InputError when p + q == 0 or a
/// rank is negative.
RankPair normalize(const RankPair &rp);

/// Tail repeating a fixed list of factors.
struct PeriodicTail {
  std::vector<RankPair> pairs;
};

/// Tail factor with 0-based tail offset j:
///   k = A*B^j,  p = alpha*B^j + beta,  q = gamma*B^j + delta.
struct AffinePowerTail {
  std::int64_t B = 2;
  std::int64_t A = 1;
  std::int64_t alpha = 1;
  std::int64_t beta = 0;
  std::int64_t gamma = 0;
  std::int64_t delta = 0;
};

/// Finite action: only the prefix factors exist.
struct NoTail {};

using TailRule = std::variant<NoTail, PeriodicTail, AffinePowerTail>;

/// A product-type Z/2 action  alpha = (x)_n Ad(p_n - q_n)  on  (x)_n M_{k(n)}.
/// Factor indices are 1-based; factors 1..prefix().size() come from the
/// prefix and the rest from the tail rule.
class ActionSpec {
public:
  /// Validates and normalizes. Throws InputError on violated invariants.
  ActionSpec(std::string name, std::vector<RankPair> prefix, TailRule tail);

  const std::string &name() const { return name_; }
  const std::vector<RankPair> &prefix() const { return prefix_; }
  const TailRule &tail() const { return tail_; }

  std::uint64_t prefix_length() const { return prefix_.size(); }
  bool is_infinite() const { return !std::holds_alternative<NoTail>(tail_); }

  /// Normalized factor n (n >= 1). Throws RangeError past a finite action.
  RankPair factor_at(std::uint64_t n) const;

  /// t(n) = k(1) * ... * k(n); t(0) = 1.
  Integer dimension_at(std::uint64_t n) const;

private:
  std::string name_;
  std::vector<RankPair> prefix_;
  TailRule tail_;
};

/// Formal product of prime powers with exponents in N u {inf}.
class SupernaturalNumber {
public:
  static constexpr std::uint64_t kInfinite = UINT64_MAX;

  SupernaturalNumber() = default;

  /// Multiplies by n (n >= 1) once.
  void multiply(std::uint64_t n);
  /// Multiplies by n infinitely often: every prime of n gets exponent inf.
  void multiply_infinitely(std::uint64_t n);
  SupernaturalNumber &operator*=(const SupernaturalNumber &o);

  std::uint64_t exponent(std::uint64_t prime) const;
  const std::map<std::uint64_t, std::uint64_t> &exponents() const { return exps_; }

  bool is_one() const { return exps_.empty(); }
  /// Every exponent is inf and at least one prime occurs.
  bool is_infinite_type() const;

  /// "{2:inf, 3:1}" style rendering; "{}" for 1.
  std::string to_string() const;

  bool operator==(const SupernaturalNumber &o) const = default;

private:
  void add(std::uint64_t prime, std::uint64_t e);

  std::map<std::uint64_t, std::uint64_t> exps_;
};

/// Prime factorization of n >= 1 by trial division.
std::vector<std::pair<std::uint64_t, std::uint64_t>> factorize(std::uint64_t n);

/// Supernatural number of the UHF algebra (x)_n M_{k(n)}. Requires an
/// infinite tail.
SupernaturalNumber supernatural_of_algebra(const ActionSpec &spec);

/// Bound on |input integers| accepted by ActionSpec.
inline constexpr std::int64_t kMaxInputMagnitude = std::int64_t{1} << 40;

} // namespace afrokhlin

namespace afrokhlin {

/// Smallest n > after with a symmetric factor (lambda_n = 0), if any.
std::optional<std::uint64_t> next_symmetric_index(const ActionSpec &spec,
                                                  std::uint64_t after);

/// True when lambda_n = 0 for infinitely many n. Decided from the tail rule.
bool infinitely_many_symmetric(const ActionSpec &spec);

/// Largest n with lambda_n = 0 when there are finitely many, nullopt when
/// there are none. Must not be called when infinitely_many_symmetric().
std::optional<std::uint64_t> last_symmetric_index(const ActionSpec &spec);

/// True when q_n > 0 (lambda_n < 1) for infinitely many n.
bool infinitely_many_nontrivial(const ActionSpec &spec);

/// For an AffinePower tail: the offsets j >= 0 at which p = q, or every
/// offset when `all` is set.
struct AffineSymmetry {
  bool all = false;
  std::optional<std::uint64_t> offset;
};
AffineSymmetry affine_symmetric_offsets(const AffinePowerTail &t);

} // namespace afrokhlin
