// afrokhlin: classification and K-theory reports for product-type Z/2 actions
// on UHF algebras, and Rokhlin towers for finite free G-sets.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "afrokhlin/cantor_tower.hpp"
#include "afrokhlin/citations.hpp"
#include "afrokhlin/classifier.hpp"
#include "afrokhlin/colimit.hpp"
#include "afrokhlin/ktheory.hpp"
#include "afrokhlin/lambda_engine.hpp"
#include "afrokhlin/report.hpp"
#include "afrokhlin/spec_io.hpp"
#include "afrokhlin/traces.hpp"

using namespace afrokhlin;
using nlohmann::json;

namespace {

enum ExitCode : int { kDecided = 0, kInputError = 2, kUnknown = 3, kDomain = 4 };

struct Options {
  std::uint64_t cutoff = kDefaultCutoff;
  bool cutoff_given = false;
  bool json = false;
  bool quiet = false;
};

std::uint64_t effective_cutoff(const Options &o) {
  if (o.cutoff_given)
    return o.cutoff;
  if (const char *env = std::getenv("AFROKHLIN_CUTOFF")) {
    try {
      std::size_t pos = 0;
      unsigned long long v = std::stoull(env, &pos);
      if (pos == std::string(env).size() && v > 0)
        return v;
    } catch (const std::exception &) {
    }
    throw InputError(std::string("AFROKHLIN_CUTOFF must be a positive integer, got '") + env + "'");
  }
  return kDefaultCutoff;
}

json header(const char *command) {
  return {{"schema_version", kReportSchemaVersion},
          {"tool_version", kToolVersion},
          {"command", command}};
}

void emit(const Options &o, const json &j, const std::string &text) {
  if (o.quiet)
    return;
  if (o.json)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

std::string verdict_line(const char *label, const Verdict &v) {
  std::string s = std::string("  - ") + label + ": " + std::string(to_string(v.decision));
  if (!v.witness.detail.empty())
    s += "  (" + v.witness.detail + ")";
  if (v.witness.index)
    s += " [n = " + std::to_string(*v.witness.index) + "]";
  return s + "\n";
}

std::string interval_text(const RationalInterval &iv) {
  return "[" + to_decimal(iv.lo, 12, false) + ", " + to_decimal(iv.hi, 12, true) + "]";
}

// --- subcommands ---------------------------------------------------------

int run_classify(const Options &o, const std::string &spec_arg) {
  ActionSpec spec = load_spec(spec_arg);
  ClassificationReport r = classify(spec, effective_cutoff(o));
  emit(o, classify_report(spec, r), classify_text(spec, r));
  return has_unknown(r) ? kUnknown : kDecided;
}

int run_ktheory(const Options &o, const std::string &spec_arg, const std::string &element,
                const std::string &query) {
  ActionSpec spec = load_spec(spec_arg);
  K0Element el = parse_element(element);
  const std::uint64_t cutoff = effective_cutoff(o);
  json out = header("ktheory");
  out["spec"] = to_json(spec);
  out["element"] = to_json(el);
  out["query"] = query;
  std::ostringstream text;
  text << "action '" << spec.name() << "', element " << format_element(el) << '\n';
  bool unknown = false;

  if (query == "positive") {
    Verdict pos = is_positive(spec, el, cutoff);
    Verdict neg = is_positive(spec, -el, cutoff);
    out["positive"] = to_json(pos);
    out["negative_positive"] = to_json(neg);
    text << verdict_line("element >= 0", pos) << verdict_line("-element >= 0", neg);
    unknown = pos.decision == Decision::Unknown || neg.decision == Decision::Unknown;
  } else if (query == "equal-zero") {
    Verdict v;
    v.citations = {std::string(anchors::kStructureK0)};
    bool zero = is_zero(spec, el);
    v.decision = zero ? Decision::Yes : Decision::No;
    if (zero) {
      auto n = el.u() == 0 && el.v() == 0 ? std::optional<std::uint64_t>(el.stage)
                                          : next_symmetric_index(spec, el.stage);
      v.witness = {"annihilated", n, std::nullopt, "the class vanishes at the given stage"};
    } else if (el.u() != 0) {
      v.witness = {"nonzero-trace-part", std::nullopt, std::nullopt,
                   "a + b != 0 and the u-coordinate is never killed"};
    } else {
      v.citations.emplace_back(anchors::kStrictEta);
      v.witness = {"v-part-survives", std::nullopt, std::nullopt,
                   "no later factor is symmetric, so a - b never vanishes"};
    }
    out["equal_zero"] = to_json(v);
    text << verdict_line("element = 0", v);
  } else if (query == "flip") {
    K0Element f = flip(el);
    bool same = is_equal(spec, f, el);
    bool negated = is_equal(spec, f, -el);
    out["flip"] = to_json(f);
    out["flip_equals_input"] = same;
    out["flip_equals_negative"] = negated;
    out["citations"] = {std::string(anchors::kStructureK0)};
    text << "  - flip: " << format_element(f) << '\n'
         << "  - flip equals input: " << (same ? "yes" : "no") << '\n'
         << "  - flip equals -input: " << (negated ? "yes" : "no") << '\n';
  } else {
    throw InputError("unknown query '" + query + "' (expected positive, equal-zero or flip)");
  }
  Verdict order = is_totally_ordered(spec);
  out["totally_ordered"] = to_json(order);
  text << verdict_line("K0 totally ordered", order);
  attach_citation_statements(out);
  emit(o, out, text.str());
  return unknown ? kUnknown : kDecided;
}

int run_traces(const Options &o, const std::string &spec_arg, std::uint64_t stage,
               const std::string &extreme, const std::string &element) {
  ActionSpec spec = load_spec(spec_arg);
  const std::uint64_t cutoff = effective_cutoff(o);
  TraceVector tv;
  if (extreme == "inv")
    tv = invariant_trace_vector(stage);
  else if (extreme == "0" || extreme == "1")
    tv = extreme_trace_vector(spec, extreme == "1" ? 1 : 0, stage, cutoff);
  else
    throw InputError("--extreme must be 0, 1 or inv");
  json out = header("traces");
  out["spec"] = to_json(spec);
  out["extreme"] = extreme;
  out["trace_vector"] = to_json(tv);
  out["citations"] = {std::string(anchors::kTracialParametrization)};
  std::ostringstream text;
  text << "action '" << spec.name() << "', trace " << extreme << " at stage " << stage << '\n'
       << "  - r in " << interval_text(tv.r) << '\n'
       << "  - s in " << interval_text(tv.s) << '\n';
  if (!element.empty()) {
    K0Element el = parse_element(element);
    RationalInterval val = trace_of_element(spec, el, tv);
    out["element"] = to_json(el);
    out["trace_of_element"] = to_json(val);
    text << "  - trace of " << format_element(el) << " in " << interval_text(val) << '\n';
  }
  attach_citation_statements(out);
  emit(o, out, text.str());
  return kDecided;
}

int run_condense(const Options &o, const std::string &spec_arg, const std::string &range) {
  ActionSpec spec = load_spec(spec_arg);
  auto dots = range.find("..");
  if (dots == std::string::npos)
    throw InputError("--range must be m..n");
  std::uint64_t m, n;
  try {
    m = std::stoull(range.substr(0, dots));
    n = std::stoull(range.substr(dots + 2));
  } catch (const std::exception &) {
    throw InputError("--range must be m..n with nonnegative integers");
  }
  RankPair c = condense(spec, m, n);
  Rational lam = lambda(c);
  json out = header("condense");
  out["spec"] = to_json(spec);
  out["range"] = {m, n};
  out["condensed"] = to_json(c);
  out["lambda"] = to_string(lam);
  out["big_lambda"] = to_string(big_lambda(spec, m, n));
  out["citations"] = {std::string(anchors::kCondense)};
  attach_citation_statements(out);
  std::ostringstream text;
  text << "factors " << m + 1 << ".." << n << " of '" << spec.name() << "' condense to ("
       << c.p.get_str() << "," << c.q.get_str() << "), lambda = " << to_string(lam) << '\n';
  emit(o, out, text.str());
  return kDecided;
}

int run_bratteli(const Options &o, const std::string &spec_arg, std::uint64_t stages,
                 const std::string &format) {
  if (format != "dot")
    throw InputError("only --format dot is supported");
  ActionSpec spec = load_spec(spec_arg);
  std::string dot = bratteli_dot(spec, stages);
  if (!o.quiet)
    std::cout << dot;
  return kDecided;
}

std::vector<std::uint64_t> parse_r_list(const std::string &text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      long long v = std::stoll(item, &pos);
      if (pos != item.size() || v < 1)
        throw InputError("");
      out.push_back(static_cast<std::uint64_t>(v));
    } catch (const std::exception &) {
      throw InputError("invalid r-sequence entry '" + item + "' (need integers >= 1)");
    }
  }
  if (out.empty())
    throw InputError("--r needs at least one entry");
  return out;
}

int run_torsion(const Options &o, unsigned m, const std::string &r_text, bool notor) {
  auto r = parse_r_list(r_text);
  json out = header("torsion");
  std::ostringstream text;
  if (notor) {
    KTheoryFixture k = notor_fixture(r);
    out["fixture"] = "notor";
    out["k0"] = to_json(k.k0);
    out["k0"]["torsion_free"] = k.k0.torsion_free();
    out["k1"] = to_json(k.k1);
    out["citations"] = {std::string(anchors::kNoTorK0), std::string(anchors::kNoTorK1)};
    text << "reflection example\n"
         << "  - K0 torsion subgroup: " << (k.k0.torsion_free() ? "0" : "nonzero") << '\n'
         << "  - K1 free rank " << k.k1.free_rank << ", torsion "
         << (k.k1.torsion_free() ? "0" : "nonzero") << '\n';
  } else {
    KTheoryFixture k = torsion_fixture(m, r);
    out["fixture"] = "torsion";
    out["m"] = m;
    out["k0"] = to_json(k.k0);
    out["k1"] = to_json(k.k1);
    out["k1"]["is_zero"] = k.k1.generator_count() == 0;
    out["citations"] = {std::string(anchors::kTorsionK0), std::string(anchors::kTorsionK1),
                        std::string(anchors::kTorsionMaps)};
    text << "antipodal example, m = " << m << '\n' << "  - K0 torsion subgroup: ";
    if (k.k0.torsion.empty())
      text << "0";
    for (std::size_t i = 0; i < k.k0.torsion.size(); ++i)
      text << (i ? " + " : "") << "Z/" << k.k0.torsion[i].get_str();
    text << '\n' << "  - K0 free part: Z[1/S], S = "
         << (k.k0.localization.empty() ? "-" : k.k0.localization[0].to_string()) << '\n'
         << "  - K1 = 0\n";
  }
  attach_citation_statements(out);
  emit(o, out, text.str());
  return kDecided;
}

json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot read '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error &e) {
    throw InputError("JSON parse error in '" + path + "' at byte " + std::to_string(e.byte));
  }
}

int run_cantor(const Options &o, const std::string &gset_path, const std::string &cover_arg) {
  FiniteGSet gs = gset_from_json(read_json_file(gset_path));
  json out = header("cantor");
  auto freeness = is_free(gs);
  if (!freeness.free) {
    auto [g, x] = *freeness.fixed;
    out["free"] = false;
    out["witness"] = {{"group_element", g}, {"element", gs.elements()[x]}};
    out["citations"] = {std::string(anchors::kCantorFree)};
    attach_citation_statements(out);
    if (!o.quiet) {
      if (o.json)
        std::cout << out.dump(2) << '\n';
      else
        std::cout << "action is not free: group element " << g << " fixes '"
                  << gs.elements()[x] << "'\n";
    }
    return kDomain;
  }
  std::vector<ElementSet> cover = cover_arg.empty() || cover_arg == "default"
                                      ? default_cover(gs)
                                      : cover_from_json(gs, read_json_file(cover_arg));
  Tower t = greedy_tower(gs, cover);
  out["free"] = true;
  out["tower"] = to_json(gs, t);
  out["verified"] = verify_tower(gs, t);
  out["citations"] = {std::string(anchors::kCantorGreedy), std::string(anchors::kCantorPartition)};
  attach_citation_statements(out);
  // The tower document is JSON in either mode.
  if (!o.quiet)
    std::cout << out.dump(2) << '\n';
  return kDecided;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"afrokhlin: Rokhlin-type properties and K-theory of product-type Z/2 actions"};
  app.require_subcommand(1);
  Options opt;
  auto *cutoff_opt = app.add_option("--cutoff", opt.cutoff, "partial-product cutoff (default 64)")
                         ->check(CLI::PositiveNumber);
  app.add_flag("--json", opt.json, "emit JSON");
  app.add_flag("--quiet", opt.quiet, "no output, exit code only");

  std::string spec_arg, element, query = "positive", extreme = "1", range, format = "dot",
                        r_text, gset_path, cover_arg;
  std::uint64_t stage = 0, stages = 1;
  unsigned m = 1;
  bool notor = false;

  auto *classify_cmd = app.add_subcommand("classify", "classify an action");
  classify_cmd->add_option("spec", spec_arg, "fixture name or spec file")->required();

  auto *kt = app.add_subcommand("ktheory", "queries on K0 of the crossed product");
  kt->add_option("spec", spec_arg, "fixture name or spec file")->required();
  kt->add_option("--element", element, "element a,b@n")->required();
  kt->add_option("--query", query, "positive | equal-zero | flip");

  auto *tr = app.add_subcommand("traces", "trace vectors of the crossed product");
  tr->add_option("spec", spec_arg, "fixture name or spec file")->required();
  tr->add_option("--stage", stage, "stage n");
  tr->add_option("--extreme", extreme, "0 | 1 | inv");
  tr->add_option("--element", element, "evaluate the trace on a,b@n");

  auto *cd = app.add_subcommand("condense", "condense a block of factors");
  cd->add_option("spec", spec_arg, "fixture name or spec file")->required();
  cd->add_option("--range", range, "m..n")->required();

  auto *br = app.add_subcommand("bratteli", "Bratteli diagram of the crossed product");
  br->add_option("spec", spec_arg, "fixture name or spec file")->required();
  br->add_option("--stages", stages, "number of stages");
  br->add_option("--format", format, "dot");

  auto *to = app.add_subcommand("torsion", "K-theory of the sphere examples");
  to->add_option("--m", m, "torsion exponent m");
  to->add_option("--r", r_text, "r-sequence period r1,r2,...")->required();
  to->add_flag("--notor", notor, "reflection example instead of the antipodal one");

  auto *ca = app.add_subcommand("cantor", "Rokhlin tower for a finite G-set");
  ca->add_option("gset", gset_path, "G-set JSON file")->required();
  ca->add_option("--cover", cover_arg, "cover JSON file or 'default'");

  for (auto *sub : {classify_cmd, kt, tr, cd, br, to, ca}) {
    sub->add_option("--cutoff", opt.cutoff, "partial-product cutoff")->check(CLI::PositiveNumber);
    sub->add_flag("--json", opt.json, "emit JSON");
    sub->add_flag("--quiet", opt.quiet, "no output, exit code only");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kInputError;
  }
  opt.cutoff_given = cutoff_opt->count() > 0;
  for (auto *sub : {classify_cmd, kt, tr, cd, br, to, ca})
    if (sub->parsed() && sub->get_option("--cutoff")->count() > 0)
      opt.cutoff_given = true;

  try {
    if (classify_cmd->parsed())
      return run_classify(opt, spec_arg);
    if (kt->parsed())
      return run_ktheory(opt, spec_arg, element, query);
    if (tr->parsed())
      return run_traces(opt, spec_arg, stage, extreme, element);
    if (cd->parsed())
      return run_condense(opt, spec_arg, range);
    if (br->parsed())
      return run_bratteli(opt, spec_arg, stages, format);
    if (to->parsed())
      return run_torsion(opt, m, r_text, notor);
    if (ca->parsed())
      return run_cantor(opt, gset_path, cover_arg);
  } catch (const DomainError &e) {
    std::cerr << "afrokhlin: " << e.what() << '\n';
    return kDomain;
  } catch (const InputError &e) {
    std::cerr << "afrokhlin: " << e.what() << '\n';
    return kInputError;
  } catch (const RangeError &e) {
    std::cerr << "afrokhlin: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
