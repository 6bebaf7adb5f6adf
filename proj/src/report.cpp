#include "afrokhlin/report.hpp"

#include <regex>
#include <set>
#include <sstream>

#include "afrokhlin/citations.hpp"
#include "afrokhlin/spec_io.hpp"

namespace afrokhlin {

using nlohmann::json;

namespace {

constexpr unsigned kDecimalDigits = 12;

Decision decision_from_string(const std::string &s) {
  if (s == "yes")
    return Decision::Yes;
  if (s == "no")
    return Decision::No;
  if (s == "unknown")
    return Decision::Unknown;
  throw InputError("unknown decision '" + s + "'");
}

void collect_citations(const json &j, std::set<std::string> &out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.key() == "citations" && it->is_array()) {
        for (const auto &c : *it)
          out.insert(c.get<std::string>());
      } else {
        collect_citations(*it, out);
      }
    }
  } else if (j.is_array()) {
    for (const auto &e : j)
      collect_citations(e, out);
  }
}

std::string yes_no(const Verdict &v) { return std::string(to_string(v.decision)); }

} // namespace

json to_json(const RationalInterval &iv) {
  return {{"lo", to_string(iv.lo)},
          {"hi", to_string(iv.hi)},
          {"lo_decimal", to_decimal(iv.lo, kDecimalDigits, false)},
          {"hi_decimal", to_decimal(iv.hi, kDecimalDigits, true)}};
}

RationalInterval interval_from_json(const json &j) {
  return {parse_rational(j.at("lo").get<std::string>()),
          parse_rational(j.at("hi").get<std::string>())};
}

json to_json(const SupernaturalNumber &s) {
  json out = json::object();
  for (auto [p, e] : s.exponents()) {
    if (e == SupernaturalNumber::kInfinite)
      out[std::to_string(p)] = "inf";
    else
      out[std::to_string(p)] = e;
  }
  return out;
}

SupernaturalNumber supernatural_from_json(const json &j) {
  SupernaturalNumber s;
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::uint64_t p = std::stoull(it.key());
    if (it->is_string()) {
      s.multiply_infinitely(p);
    } else {
      for (std::uint64_t k = 0; k < it->get<std::uint64_t>(); ++k)
        s.multiply(p);
    }
  }
  return s;
}

json to_json(const Verdict &v) {
  json w = {{"kind", v.witness.kind}, {"detail", v.witness.detail}};
  if (v.witness.index)
    w["index"] = *v.witness.index;
  if (v.witness.interval)
    w["interval"] = to_json(*v.witness.interval);
  json out = {{"decision", to_string(v.decision)}, {"witness", w}, {"citations", v.citations}};
  if (v.cutoff)
    out["cutoff"] = *v.cutoff;
  return out;
}

Verdict verdict_from_json(const json &j) {
  Verdict v;
  v.decision = decision_from_string(j.at("decision").get<std::string>());
  const json &w = j.at("witness");
  v.witness.kind = w.at("kind").get<std::string>();
  v.witness.detail = w.at("detail").get<std::string>();
  if (w.contains("index"))
    v.witness.index = w.at("index").get<std::uint64_t>();
  if (w.contains("interval"))
    v.witness.interval = interval_from_json(w.at("interval"));
  v.citations = j.at("citations").get<std::vector<std::string>>();
  if (j.contains("cutoff"))
    v.cutoff = j.at("cutoff").get<std::uint64_t>();
  return v;
}

json to_json(const ClassificationReport &r) {
  json out;
  out["strict_rokhlin"] = to_json(r.strict_rokhlin);
  out["tracial_rokhlin"] = to_json(r.tracial_rokhlin);
  out["outer"] = to_json(r.outer);
  out["crossed_product_simple"] = to_json(r.crossed_product_simple);
  out["crossed_product_uhf"] = to_json(r.crossed_product_uhf);
  if (r.crossed_product_supernatural)
    out["crossed_product_uhf"]["supernatural"] = to_json(*r.crossed_product_supernatural);
  if (r.extreme_trace_count)
    out["extreme_trace_count"] = *r.extreme_trace_count;
  else
    out["extreme_trace_count"] = "unknown";
  out["always_true_facts"] = {
      {"action_strictly_approx_representable", r.always_true_facts.action_strictly_approx_representable},
      {"dual_action_strict_rokhlin", r.always_true_facts.dual_action_strict_rokhlin},
      {"crossed_product_AF", r.always_true_facts.crossed_product_af},
      {"citations",
       {std::string(anchors::kStructureApproxRep), std::string(anchors::kStructureDualRokhlin),
        std::string(anchors::kStructureAf)}}};
  out["cutoff"] = r.cutoff;
  return out;
}

ClassificationReport classification_from_json(const json &j) {
  ClassificationReport r;
  r.strict_rokhlin = verdict_from_json(j.at("strict_rokhlin"));
  r.tracial_rokhlin = verdict_from_json(j.at("tracial_rokhlin"));
  r.outer = verdict_from_json(j.at("outer"));
  r.crossed_product_simple = verdict_from_json(j.at("crossed_product_simple"));
  r.crossed_product_uhf = verdict_from_json(j.at("crossed_product_uhf"));
  if (j.at("crossed_product_uhf").contains("supernatural"))
    r.crossed_product_supernatural =
        supernatural_from_json(j.at("crossed_product_uhf").at("supernatural"));
  if (j.at("extreme_trace_count").is_number())
    r.extreme_trace_count = j.at("extreme_trace_count").get<int>();
  const json &f = j.at("always_true_facts");
  r.always_true_facts.action_strictly_approx_representable =
      f.at("action_strictly_approx_representable").get<bool>();
  r.always_true_facts.dual_action_strict_rokhlin = f.at("dual_action_strict_rokhlin").get<bool>();
  r.always_true_facts.crossed_product_af = f.at("crossed_product_AF").get<bool>();
  r.cutoff = j.at("cutoff").get<std::uint64_t>();
  return r;
}

json to_json(const FgAbPresentation &p) {
  json inv = json::array();
  for (const auto &d : p.torsion)
    inv.push_back(to_string(d));
  json loc = json::array();
  for (const auto &s : p.localization)
    loc.push_back(to_json(s));
  return {{"free_rank", p.free_rank}, {"invariant_factors", inv}, {"localizations", loc}};
}

json to_json(const K0Element &el) {
  return {{"stage", el.stage}, {"a", to_string(el.a)}, {"b", to_string(el.b)},
          {"text", format_element(el)}};
}

json to_json(const TraceVector &tv) {
  return {{"stage", tv.stage}, {"r", to_json(tv.r)}, {"s", to_json(tv.s)}};
}

json to_json(const RankPair &rp) { return json::array({to_string(rp.p), to_string(rp.q)}); }

void attach_citation_statements(json &report) {
  std::set<std::string> keys;
  collect_citations(report, keys);
  json st = json::object();
  for (const auto &k : keys)
    st[k] = std::string(cite(k).statement);
  report["citation_statements"] = st;
}

json classify_report(const ActionSpec &spec, const ClassificationReport &r) {
  json out;
  out["schema_version"] = kReportSchemaVersion;
  out["tool_version"] = kToolVersion;
  out["command"] = "classify";
  out["spec"] = to_json(spec);
  out["classification"] = to_json(r);
  out["supernatural_of_algebra"] = to_json(supernatural_of_algebra(spec));
  out["derived"] = json::array({
      {{"statement", "dual action strictly approximately representable"},
       {"decision", yes_no(r.strict_rokhlin)},
       {"citations", {std::string(anchors::kStrictSymmetric)}}},
      {{"statement", "dual action tracially approximately representable"},
       {"decision", yes_no(r.tracial_rokhlin)},
       {"citations", {std::string(anchors::kTracialDualRep)}}},
      {{"statement", "dual action trivial on K0"},
       {"decision", yes_no(r.strict_rokhlin)},
       {"citations", {std::string(anchors::kStrictDualTrivial)}}},
      {{"statement", "K0 of the crossed product totally ordered"},
       {"decision", yes_no(r.strict_rokhlin)},
       {"citations", {std::string(anchors::kStrictTotalOrder)}}},
      {{"statement", "K1 of the crossed product vanishes"},
       {"decision", "yes"},
       {"citations", {std::string(anchors::kStructureAf)}}},
  });
  attach_citation_statements(out);
  return out;
}

std::string classify_text(const ActionSpec &spec, const ClassificationReport &r) {
  std::ostringstream os;
  auto line = [&](const char *label, const Verdict &v) {
    os << "  - " << label << ": " << to_string(v.decision);
    if (!v.witness.detail.empty())
      os << "  (" << v.witness.detail << ")";
    if (v.witness.interval)
      os << " [" << to_decimal(v.witness.interval->lo, kDecimalDigits, false) << ", "
         << to_decimal(v.witness.interval->hi, kDecimalDigits, true) << "]";
    os << '\n';
  };
  os << "action '" << spec.name() << "' (cutoff " << r.cutoff << ")\n";
  line("strict Rokhlin property", r.strict_rokhlin);
  line("tracial Rokhlin property", r.tracial_rokhlin);
  line("outer", r.outer);
  line("crossed product simple", r.crossed_product_simple);
  line("crossed product UHF", r.crossed_product_uhf);
  if (r.crossed_product_supernatural)
    os << "    supernatural number " << r.crossed_product_supernatural->to_string() << '\n';
  os << "  - extreme tracial states: "
     << (r.extreme_trace_count ? std::to_string(*r.extreme_trace_count) : "unknown") << '\n';
  os << "  - always: action strictly approximately representable; dual action has the "
        "strict Rokhlin property; crossed product is AF\n";
  return os.str();
}

std::string bratteli_dot(const ActionSpec &spec, std::uint64_t stages) {
  if (stages < 1)
    throw InputError("--stages must be >= 1");
  std::ostringstream os;
  os << "digraph bratteli {\n";
  os << "  rankdir=TB;\n";
  Integer t = 1;
  for (std::uint64_t n = 1; n <= stages; ++n) {
    RankPair f = spec.factor_at(n);
    t *= f.size();
    os << "  L" << n << " [label=\"" << t.get_str() << "\"];\n";
    os << "  R" << n << " [label=\"" << t.get_str() << "\"];\n";
    if (n == 1)
      continue;
    const std::string p = f.p.get_str(), q = f.q.get_str();
    os << "  L" << n - 1 << " -> L" << n << " [label=\"" << p << "\"];\n";
    os << "  R" << n - 1 << " -> R" << n << " [label=\"" << p << "\"];\n";
    os << "  L" << n - 1 << " -> R" << n << " [label=\"" << q << "\", style=dashed];\n";
    os << "  R" << n - 1 << " -> L" << n << " [label=\"" << q << "\", style=dashed];\n";
  }
  os << "}\n";
  return os.str();
}

K0Element parse_element(const std::string &text) {
  static const std::regex re(R"(^\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*@\s*(\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re))
    throw InputError("malformed element '" + text + "' (expected a,b@n)");
  auto integer = [](std::string s) {
    if (!s.empty() && s[0] == '+')
      s.erase(0, 1);
    return Integer(s);
  };
  K0Element el;
  el.a = integer(m[1].str());
  el.b = integer(m[2].str());
  try {
    el.stage = std::stoull(m[3].str());
  } catch (const std::exception &) {
    throw InputError("stage out of range in '" + text + "'");
  }
  return el;
}

std::string format_element(const K0Element &el) {
  return el.a.get_str() + "," + el.b.get_str() + "@" + std::to_string(el.stage);
}

} // namespace afrokhlin
