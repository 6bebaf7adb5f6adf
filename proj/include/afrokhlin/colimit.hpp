#pragma once

#include <cstddef>
#include <vector>

#include "afrokhlin/action_model.hpp"
#include "afrokhlin/smith.hpp"

namespace afrokhlin {

/// Z[1/S_1] (+) ... (+) Z[1/S_r] (+) Z/d_1 (+) ... (+) Z/d_t.
/// A generator with the trivial supernatural number is a plain Z summand.
struct FgAbPresentation {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;                    ///< invariant factors, d_i | d_{i+1}
  std::vector<SupernaturalNumber> localization;    ///< one per free generator

  std::size_t generator_count() const { return free_rank + torsion.size(); }
  bool torsion_free() const { return torsion.empty(); }
  /// Product of the invariant factors (1 for torsion-free groups).
  Integer torsion_order() const;
};

/// Maps on the generators (free generators first, then torsion generators).
/// The list is `prefix` followed by `period` repeated forever.
struct EventuallyPeriodicMaps {
  std::vector<IntMatrix> prefix;
  std::vector<IntMatrix> period;
};

/// Colimit of initial -> initial -> ... along the maps. Supported maps:
/// diagonal on the free block, zero between the free and torsion blocks,
/// arbitrary (well-defined) on the torsion block. Anything else throws
/// InputError.
FgAbPresentation fgab_colimit(const FgAbPresentation &initial,
                              const EventuallyPeriodicMaps &maps);

/// Invariant factors (> 1) of the subgroup of Z/d_1 (+) ... (+) Z/d_t
/// generated by the columns of `gens`.
std::vector<Integer> subgroup_invariants(const std::vector<Integer> &orders,
                                         const IntMatrix &gens);

} // namespace afrokhlin

namespace afrokhlin {

/// K-groups of the crossed product for the sphere examples, computed as
/// colimits of the stage groups.
struct KTheoryFixture {
  FgAbPresentation k0;
  FgAbPresentation k1;
};

/// Antipodal example: K0 stages Z (+) Z/2^m with maps (k, l) -> ((2r(n)+1)k, l),
/// K1 stages 0. `r_period` is extended periodically; every r(n) >= 1.
KTheoryFixture torsion_fixture(unsigned m, const std::vector<std::uint64_t> &r_period);

/// Reflection example: K0 stages Z^2 with maps diag(2r(n)+1, 1), K1 stages Z
/// with identity maps.
KTheoryFixture notor_fixture(const std::vector<std::uint64_t> &r_period);

} // namespace afrokhlin
