#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "afrokhlin/action_model.hpp"
#include "afrokhlin/lambda_engine.hpp"

namespace afrokhlin {

enum class Decision { Yes, No, Unknown };

std::string_view to_string(Decision d);

/// Checkable evidence behind a decision. `kind` names the certificate;
/// the optional fields carry its data.
struct Witness {
  std::string kind;
  std::optional<std::uint64_t> index;
  std::optional<RationalInterval> interval;
  std::string detail;
};

struct Verdict {
  Decision decision = Decision::Unknown;
  Witness witness;
  std::vector<std::string> citations;
  std::optional<std::uint64_t> cutoff;  ///< set on Unknown

  bool yes() const { return decision == Decision::Yes; }
  bool no() const { return decision == Decision::No; }
};

struct AlwaysTrueFacts {
  bool action_strictly_approx_representable = true;
  bool dual_action_strict_rokhlin = true;
  bool crossed_product_af = true;
};

struct ClassificationReport {
  Verdict strict_rokhlin;
  Verdict tracial_rokhlin;
  Verdict outer;
  Verdict crossed_product_simple;
  Verdict crossed_product_uhf;
  std::optional<SupernaturalNumber> crossed_product_supernatural;
  std::optional<int> extreme_trace_count;  ///< 1, 2, or nullopt (Unknown)
  AlwaysTrueFacts always_true_facts;
  std::uint64_t cutoff = kDefaultCutoff;
};

// All verdicts require an infinite tail and throw InputError otherwise.

Verdict strict_rokhlin_verdict(const ActionSpec &spec);
Verdict tracial_rokhlin_verdict(const ActionSpec &spec, std::uint64_t cutoff = kDefaultCutoff);
Verdict outer_simple_verdict(const ActionSpec &spec);

struct UhfVerdict {
  Verdict verdict;
  std::optional<SupernaturalNumber> supernatural;
};
UhfVerdict crossed_product_uhf_verdict(const ActionSpec &spec);

/// 1, 2, or nullopt when the tracial verdict is Unknown.
std::optional<int> extreme_trace_count(const ActionSpec &spec,
                                       std::uint64_t cutoff = kDefaultCutoff);

ClassificationReport classify(const ActionSpec &spec, std::uint64_t cutoff = kDefaultCutoff);

/// True when any verdict of the report is Unknown.
bool has_unknown(const ClassificationReport &r);

} // namespace afrokhlin
