#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "afrokhlin/action_model.hpp"

namespace afrokhlin {

/// Parses an action-spec document:
///   { "name": str, "prefix": [[p,q],...],
///     "tail": {"kind":"periodic","pairs":[[p,q],...]}
///           | {"kind":"affine_power","B":..,"A":..,"alpha":..,"beta":..,"gamma":..,"delta":..}
///           | {"kind":"none"} }
ActionSpec spec_from_json(const nlohmann::json &doc);
ActionSpec spec_from_text(const std::string &text);

nlohmann::json to_json(const ActionSpec &spec);

/// Built-in fixtures: car1, car2, car3, notcar.
const std::vector<std::string> &fixture_names();
ActionSpec builtin_fixture(std::string_view name);

/// A fixture name or a path to a JSON spec file.
ActionSpec load_spec(const std::string &name_or_path);

} // namespace afrokhlin
