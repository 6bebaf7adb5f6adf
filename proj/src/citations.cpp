#include "afrokhlin/citations.hpp"

#include <stdexcept>

namespace afrokhlin {

const std::vector<Citation> &citation_registry() {
  using namespace anchors;
  static const std::vector<Citation> reg = {
      {kStructureAf, "the crossed product of a product-type Z/2 action is a unital AF algebra"},
      {kStructureK0, "K0 of the crossed product is the colimit of Z^2 along [[p_n,q_n],[q_n,p_n]]; the dual action is the coordinate swap"},
      {kStructureApproxRep, "a product-type Z/2 action is strictly approximately representable"},
      {kStructureDualRokhlin, "the dual action of a product-type Z/2 action has the strict Rokhlin property"},
      {kStructureSwap, "exchanging p_n and q_n leaves the action unchanged"},
      {kCondense, "a finite block of factors condenses to one factor with rank matrix T_n...T_{m+1} and multiplicative lambda"},
      {kStrictSymmetric, "strict Rokhlin property iff lambda_n = 0 for infinitely many n"},
      {kStrictUhf, "crossed product is UHF iff lambda_n = 0 for infinitely many n"},
      {kStrictTotalOrder, "K0 of the crossed product is totally ordered iff lambda_n = 0 for infinitely many n"},
      {kStrictDualTrivial, "the dual action is trivial on K0 iff lambda_n = 0 for infinitely many n"},
      {kStrictEta, "without infinitely many symmetric factors the class (1,-1) is nonzero, swapped to its negative, and neither it nor its negative is positive"},
      {kTracialLambda, "tracial Rokhlin property iff Lambda(m, inf) = 0 for every m"},
      {kTracialUniqueTrace, "tracial Rokhlin property iff the crossed product has a unique tracial state"},
      {kTracialTwoTraces, "without the tracial Rokhlin property the crossed product has exactly two extreme traces, swapped by the dual action"},
      {kTracialParametrization, "traces are (r_n, s_n) = T(Lambda(n, inf)) (r, 1-r) with T(x) = 1/2 [[1+x,1-x],[1-x,1+x]]"},
      {kTracialDualRep, "the dual action is tracially approximately representable iff the action has the tracial Rokhlin property"},
      {kOuterNontrivial, "the action is outer iff q_n != 0 for infinitely many n"},
      {kOuterSimple, "the crossed product is simple iff the action is outer"},
      {kOuterInner, "an inner Z/2 action gives crossed product D (+) D"},
      {kTorsionK0, "for the sphere-antipodal example the torsion subgroup of K0 of the crossed product is Z/2^m"},
      {kTorsionK1, "for the sphere-antipodal example K1 of the crossed product vanishes"},
      {kTorsionMaps, "the connecting maps on K0 are (k, l) -> ((2r(n)+1)k, l)"},
      {kNoTorK0, "for the reflection example K0 of the crossed product is torsion free"},
      {kNoTorK1, "for the reflection example the K1 connecting maps are isomorphisms, so K1 = Z"},
      {kCantorFree, "a finite group action on the Cantor set has the strict Rokhlin property iff it is free"},
      {kCantorGreedy, "greedy base: N_1 = K_1, N_{k+1} = N_k u (K_{k+1} \\ G N_k)"},
      {kCantorPartition, "the translates g N of a tower base partition the space exactly"},
  };
  return reg;
}

const Citation &cite(std::string_view key) {
  for (const auto &c : citation_registry())
    if (c.key == key)
      return c;
  throw std::invalid_argument("unknown citation anchor '" + std::string(key) + "'");
}

} // namespace afrokhlin
