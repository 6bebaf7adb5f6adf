#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "afrokhlin/classifier.hpp"
#include "afrokhlin/colimit.hpp"
#include "afrokhlin/ktheory.hpp"
#include "afrokhlin/traces.hpp"

namespace afrokhlin {

inline constexpr const char *kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

nlohmann::json to_json(const RationalInterval &iv);
RationalInterval interval_from_json(const nlohmann::json &j);

nlohmann::json to_json(const SupernaturalNumber &s);
SupernaturalNumber supernatural_from_json(const nlohmann::json &j);

nlohmann::json to_json(const Verdict &v);
Verdict verdict_from_json(const nlohmann::json &j);

nlohmann::json to_json(const ClassificationReport &r);
ClassificationReport classification_from_json(const nlohmann::json &j);

nlohmann::json to_json(const FgAbPresentation &p);
nlohmann::json to_json(const K0Element &el);
nlohmann::json to_json(const TraceVector &tv);
nlohmann::json to_json(const RankPair &rp);

/// Full classify report: header, spec echo, verdicts, derived lines and the
/// citation statements used.
nlohmann::json classify_report(const ActionSpec &spec, const ClassificationReport &r);

/// Bullet-list rendering of a classify report.
std::string classify_text(const ActionSpec &spec, const ClassificationReport &r);

/// Bratteli diagram of the crossed-product system, stages 1..stages.
std::string bratteli_dot(const ActionSpec &spec, std::uint64_t stages);

/// Parses "a,b@n".
K0Element parse_element(const std::string &text);
std::string format_element(const K0Element &el);

/// Adds {"statements": {...}} for every citation key used in `report`.
void attach_citation_statements(nlohmann::json &report);

} // namespace afrokhlin
