#pragma once

#include <cstdint>

#include "afrokhlin/action_model.hpp"
#include "afrokhlin/classifier.hpp"

namespace afrokhlin {

/// T_n = [[p, q], [q, p]] from the normalized ranks of factor n.
struct TransitionMatrix {
  Integer p;
  Integer q;

  /// (a, b) -> (p a + q b, q a + p b)
  std::pair<Integer, Integer> apply(const Integer &a, const Integer &b) const {
    return {p * a + q * b, q * a + p * b};
  }
};

TransitionMatrix transition(const ActionSpec &spec, std::uint64_t n);

/// Class of (a, b) in K0(M_t(n) (+) M_t(n)) = Z^2, pushed into the colimit.
struct K0Element {
  std::uint64_t stage = 0;
  Integer a;
  Integer b;

  Integer u() const { return a + b; }
  Integer v() const { return a - b; }
  K0Element operator-() const { return {stage, -a, -b}; }
  bool operator==(const K0Element &o) const = default;  ///< representation equality
};

/// Applies T_{to} ... T_{stage+1}. Throws InputError when to < el.stage.
K0Element push_forward(const ActionSpec &spec, const K0Element &el, std::uint64_t to);

/// The dual action on K0: (a, b) -> (b, a).
K0Element flip(const K0Element &el);

/// Equality in the colimit.
bool is_equal(const ActionSpec &spec, const K0Element &x, const K0Element &y);

/// Equality with the zero class.
bool is_zero(const ActionSpec &spec, const K0Element &x);

/// Whether the class lies in the positive cone (zero included). Yes carries
/// the stage where a nonnegative representative appears.
Verdict is_positive(const ActionSpec &spec, const K0Element &el,
                    std::uint64_t cutoff = kDefaultCutoff);

/// Total order on K0 of the crossed product; same decision as the strict
/// Rokhlin verdict.
Verdict is_totally_ordered(const ActionSpec &spec);

/// Maximum number of stages is_positive walks when searching for an explicit
/// nonnegative representative.
inline constexpr std::uint64_t kPositivitySearchLimit = 4096;

} // namespace afrokhlin
