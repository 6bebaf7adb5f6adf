#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "afrokhlin/rational.hpp"

namespace afrokhlin {

/// Raised for domain preconditions such as a non-free action (CLI exit 4).
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Finite group given by its multiplication table table[g][h] = gh.
class FiniteGroup {
public:
  /// Validates closure, associativity, identity and inverses.
  explicit FiniteGroup(std::vector<std::vector<std::size_t>> table);

  static FiniteGroup cyclic(std::size_t n);
  static FiniteGroup product(const FiniteGroup &a, const FiniteGroup &b);

  std::size_t order() const { return table_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t g, std::size_t h) const { return table_[g][h]; }
  const std::vector<std::vector<std::size_t>> &table() const { return table_; }

private:
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_ = 0;
};

/// Finite G-set: action[g][x] = g.x, standing in for a clopen quotient of a
/// Cantor system.
class FiniteGSet {
public:
  /// Validates the action axioms.
  FiniteGSet(std::vector<std::string> elements, FiniteGroup group,
             std::vector<std::vector<std::size_t>> action);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string> &elements() const { return elements_; }
  const FiniteGroup &group() const { return group_; }
  std::size_t act(std::size_t g, std::size_t x) const { return action_[g][x]; }
  const std::vector<std::vector<std::size_t>> &action() const { return action_; }

  /// Index of a named element; throws InputError if absent.
  std::size_t index_of(const std::string &name) const;

private:
  std::vector<std::string> elements_;
  FiniteGroup group_;
  std::vector<std::vector<std::size_t>> action_;
};

/// Sorted element indices.
using ElementSet = std::vector<std::size_t>;

struct FreenessResult {
  bool free = true;
  std::optional<std::pair<std::size_t, std::size_t>> fixed;  ///< (g, x) with g != e, g.x = x
};

FreenessResult is_free(const FiniteGSet &gs);

/// Base N with translates g.N indexed by group element.
struct Tower {
  ElementSet base;
  std::vector<ElementSet> translates;
};

/// Translates of `set` under every group element.
std::vector<ElementSet> translates_of(const FiniteGSet &gs, const ElementSet &set);

/// N_1 = K_1, N_{k+1} = N_k u (K_{k+1} \ G N_k). Throws DomainError for a
/// non-free action and InputError for an invalid cover (naming the index).
Tower greedy_tower(const FiniteGSet &gs, const std::vector<ElementSet> &cover);

/// One singleton per element in element order. Throws DomainError when the
/// action is not free.
std::vector<ElementSet> default_cover(const FiniteGSet &gs);

/// Translates pairwise disjoint and covering every element.
bool verify_tower(const FiniteGSet &gs, const Tower &tower);

/// { "elements": [str], "group": {"order": k, "table": [[...]]}, "action": [[...]] }
FiniteGSet gset_from_json(const nlohmann::json &doc);
/// Cover document: [[element name, ...], ...].
std::vector<ElementSet> cover_from_json(const FiniteGSet &gs, const nlohmann::json &doc);
nlohmann::json to_json(const FiniteGSet &gs, const Tower &tower);

} // namespace afrokhlin
