#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace afrokhlin {

/// One entry of the fixed citation registry. Reports refer to entries by key
/// only; free-text citations are not allowed.
struct Citation {
  std::string_view key;
  std::string_view statement;
};

const std::vector<Citation> &citation_registry();

/// Throws std::invalid_argument for keys not in the registry.
const Citation &cite(std::string_view key);

namespace anchors {
inline constexpr std::string_view kStructureAf = "structure.crossed-product-af";
inline constexpr std::string_view kStructureK0 = "structure.k0-direct-limit";
inline constexpr std::string_view kStructureApproxRep = "structure.action-approx-representable";
inline constexpr std::string_view kStructureDualRokhlin = "structure.dual-strict-rokhlin";
inline constexpr std::string_view kStructureSwap = "structure.rank-swap-invariance";
inline constexpr std::string_view kCondense = "structure.condensation";
inline constexpr std::string_view kStrictSymmetric = "strict-rokhlin.symmetric-factors";
inline constexpr std::string_view kStrictUhf = "strict-rokhlin.crossed-product-uhf";
inline constexpr std::string_view kStrictTotalOrder = "strict-rokhlin.k0-totally-ordered";
inline constexpr std::string_view kStrictDualTrivial = "strict-rokhlin.dual-trivial-on-k0";
inline constexpr std::string_view kStrictEta = "strict-rokhlin.eta-neither-sign";
inline constexpr std::string_view kTracialLambda = "tracial-rokhlin.tail-products-vanish";
inline constexpr std::string_view kTracialUniqueTrace = "tracial-rokhlin.unique-trace";
inline constexpr std::string_view kTracialTwoTraces = "tracial-rokhlin.two-extreme-traces";
inline constexpr std::string_view kTracialParametrization = "tracial-rokhlin.trace-parametrization";
inline constexpr std::string_view kTracialDualRep = "tracial-rokhlin.dual-tracially-representable";
inline constexpr std::string_view kOuterNontrivial = "outer.nontrivial-factors";
inline constexpr std::string_view kOuterSimple = "outer.crossed-product-simple";
inline constexpr std::string_view kOuterInner = "outer.inner-gives-direct-sum";
inline constexpr std::string_view kTorsionK0 = "torsion.k0-torsion-subgroup";
inline constexpr std::string_view kTorsionK1 = "torsion.k1-vanishes";
inline constexpr std::string_view kTorsionMaps = "torsion.k0-connecting-maps";
inline constexpr std::string_view kNoTorK0 = "notor.k0-torsion-free";
inline constexpr std::string_view kNoTorK1 = "notor.k1-is-z";
inline constexpr std::string_view kCantorFree = "cantor.tower-iff-free";
inline constexpr std::string_view kCantorGreedy = "cantor.greedy-base";
inline constexpr std::string_view kCantorPartition = "cantor.exact-partition";
} // namespace anchors

} // namespace afrokhlin
