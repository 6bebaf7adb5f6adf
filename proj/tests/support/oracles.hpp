// Brute-force reference computations used to check the library.
#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "afrokhlin/action_model.hpp"
#include "afrokhlin/cantor_tower.hpp"

namespace afrokhlin::oracle {

// Tensor the diagonal sign vectors diag(1_p, -1_q) of each factor and count
// the +1 and -1 entries of the product.
std::pair<long long, long long>
eigen_count(const std::vector<std::pair<long, long>> &factors);

enum class ConeAnswer { Yes, No, Ambiguous };

// Positivity of the class of (a, b) at `stage`: search for a pushforward in
// Z^2_+ up to stage `window`, multiplying by the raw rank matrices, then
// fall back to the threshold rule |a-b| * Lambda(stage, inf) < a+b with
// Lambda approximated in long double over `depth` factors. Answers near the
// threshold come back Ambiguous.
ConeAnswer cone_oracle(const ActionSpec &spec, long a, long b, std::uint64_t stage,
                       std::uint64_t window, std::uint64_t depth = 400);

// Exhaustive search for a base set whose translates partition the G-set.
bool tower_exists_bruteforce(const FiniteGSet &gs);

// All actions of `group` on at most `max_points` points, one per isomorphism
// class, built as disjoint unions of coset spaces G/H.
std::vector<FiniteGSet> all_actions(const FiniteGroup &group, std::size_t max_points);

// Same G-set with its points renamed by a random permutation.
FiniteGSet relabel(const FiniteGSet &gs, std::mt19937_64 &rng);

// Random valid action specs: short prefixes and either tail family.
ActionSpec random_spec(std::mt19937_64 &rng, bool allow_affine = true);
RankPair random_pair(std::mt19937_64 &rng, long max_entry);

} // namespace afrokhlin::oracle
