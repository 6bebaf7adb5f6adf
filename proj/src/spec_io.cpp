#include "afrokhlin/spec_io.hpp"

#include <fstream>
#include <sstream>

namespace afrokhlin {

using nlohmann::json;

namespace {

std::int64_t get_int(const json &obj, const char *key) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_integer())
    throw InputError(std::string("affine_power tail: missing integer field '") + key + "'");
  return it->get<std::int64_t>();
}

RankPair pair_from_json(const json &j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
      !j[1].is_number_integer())
    throw InputError("rank pair must be [p, q] with integer entries, got " + j.dump());
  return {Integer(static_cast<long>(j[0].get<std::int64_t>())),
          Integer(static_cast<long>(j[1].get<std::int64_t>()))};
}

std::vector<RankPair> pairs_from_json(const json &j, const char *what) {
  if (!j.is_array())
    throw InputError(std::string(what) + " must be an array of [p, q] pairs");
  std::vector<RankPair> out;
  for (const auto &e : j)
    out.push_back(pair_from_json(e));
  return out;
}

json pairs_to_json(const std::vector<RankPair> &pairs) {
  json arr = json::array();
  for (const auto &rp : pairs)
    arr.push_back({rp.p.get_si(), rp.q.get_si()});
  return arr;
}

} // namespace

ActionSpec spec_from_json(const json &doc) {
  if (!doc.is_object())
    throw InputError("action spec must be a JSON object");
  std::string name = doc.value("name", std::string("unnamed"));
  std::vector<RankPair> prefix;
  if (doc.contains("prefix"))
    prefix = pairs_from_json(doc.at("prefix"), "prefix");
  if (!doc.contains("tail") || !doc.at("tail").is_object())
    throw InputError("action spec needs a 'tail' object");
  const json &tail = doc.at("tail");
  std::string kind = tail.value("kind", std::string());
  if (kind == "periodic") {
    if (!tail.contains("pairs"))
      throw InputError("periodic tail needs 'pairs'");
    return ActionSpec(name, std::move(prefix),
                      PeriodicTail{pairs_from_json(tail.at("pairs"), "pairs")});
  }
  if (kind == "affine_power") {
    AffinePowerTail t{get_int(tail, "B"),     get_int(tail, "A"),
                      get_int(tail, "alpha"), get_int(tail, "beta"),
                      get_int(tail, "gamma"), get_int(tail, "delta")};
    return ActionSpec(name, std::move(prefix), t);
  }
  if (kind == "none")
    return ActionSpec(name, std::move(prefix), NoTail{});
  throw InputError("unknown tail kind '" + kind +
                   "' (expected periodic, affine_power or none)");
}

ActionSpec spec_from_text(const std::string &text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw InputError("JSON parse error at byte " + std::to_string(e.byte) + ": " +
                     e.what());
  }
  return spec_from_json(doc);
}

json to_json(const ActionSpec &spec) {
  json out;
  out["name"] = spec.name();
  out["prefix"] = pairs_to_json(spec.prefix());
  if (auto *per = std::get_if<PeriodicTail>(&spec.tail())) {
    out["tail"] = {{"kind", "periodic"}, {"pairs", pairs_to_json(per->pairs)}};
  } else if (auto *aff = std::get_if<AffinePowerTail>(&spec.tail())) {
    out["tail"] = {{"kind", "affine_power"}, {"B", aff->B},         {"A", aff->A},
                   {"alpha", aff->alpha},    {"beta", aff->beta},   {"gamma", aff->gamma},
                   {"delta", aff->delta}};
  } else {
    out["tail"] = {{"kind", "none"}};
  }
  return out;
}

const std::vector<std::string> &fixture_names() {
  static const std::vector<std::string> names = {"car1", "car2", "car3", "notcar"};
  return names;
}

ActionSpec builtin_fixture(std::string_view name) {
  // Every factor M_2 with Ad(diag(1, -1)).
  if (name == "car1")
    return ActionSpec("car1", {}, PeriodicTail{{{1, 1}}});
  // Factor n is M_{2^n} with 2^{n-1}+1 entries +1 and 2^{n-1}-1 entries -1.
  // With tail offset j = n-1: k = 2*2^j, p = 2^j + 1, q = 2^j - 1.
  if (name == "car2")
    return ActionSpec("car2", {}, AffinePowerTail{2, 2, 1, 1, 1, -1});
  // Factor n is M_{2^n} with 2^n - 1 entries +1 and a single -1.
  // With j = n-1: k = 2*2^j, p = 2*2^j - 1, q = 1.
  if (name == "car3")
    return ActionSpec("car3", {}, AffinePowerTail{2, 2, 2, -1, 0, 1});
  // M_2 with the trivial action, then M_3 factors with Ad(1_2 (+) -1_1):
  // lambda_n = 1/3 on the tail and no factor of 2 beyond the first.
  if (name == "notcar")
    return ActionSpec("notcar", {{2, 0}}, PeriodicTail{{{2, 1}}});
  throw InputError("unknown fixture '" + std::string(name) + "'");
}

ActionSpec load_spec(const std::string &name_or_path) {
  for (const auto &n : fixture_names())
    if (n == name_or_path)
      return builtin_fixture(n);
  std::ifstream in(name_or_path);
  if (!in)
    throw InputError("'" + name_or_path + "' is neither a fixture name nor a readable file");
  std::stringstream ss;
  ss << in.rdbuf();
  return spec_from_text(ss.str());
}

} // namespace afrokhlin
