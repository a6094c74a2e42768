#include "mgk/commands.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "mgk/errors.hpp"
#include "mgk/generation.hpp"
#include "mgk/instance_format.hpp"
#include "mgk/multispace.hpp"
#include "mgk/normal_series.hpp"
#include "mgk/subspace.hpp"

namespace mgk {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kMaxCrossSequenceOps = 4;

// Raised for bad command-line input (sets, op lists); maps to exit 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw UsageError("empty item in list '" + text + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

class Context {
 public:
  Context(const MultiGroupSpace& ms, const CommandOptions& opts) : ms_(ms), opts_(opts) {}

  const MultiGroupSpace& ms() const { return ms_; }

  Json name(ElementId e) const { return ms_.name(e); }
  Json set(const ElementSet& s) const {
    Json arr = Json::array();
    s.for_each([&](ElementId e) { arr.push_back(ms_.name(e)); });
    return arr;
  }
  Json elements(const std::vector<ElementId>& es) const {
    Json arr = Json::array();
    for (auto e : es) arr.push_back(ms_.name(e));
    return arr;
  }
  Json ops(OpMask m) const {
    Json arr = Json::array();
    for (auto i : m.indices()) arr.push_back(ms_.op_name(i));
    return arr;
  }
  Json subset(const SubsetRef& s) const { return Json{{"elements", set(s.elements())}, {"ops", ops(s.ops())}}; }
  Json violation(const Violation& v) const {
    Json j{{"kind", std::string(to_string(v.kind))}};
    if (!v.op.empty()) j["op"] = v.op;
    j["witness"] = elements(v.witness);
    j["detail"] = v.detail;
    return j;
  }

  ElementSet parse_set() const {
    if (!opts_.set) throw UsageError("--set is required for this command");
    ElementSet s = ms_.empty_set();
    for (const auto& n : split_list(*opts_.set)) {
      auto id = ms_.find(n);
      if (!id) throw UsageError("unknown element '" + n + "' in --set");
      s.insert(*id);
    }
    return s;
  }

  SubsetRef parse_subset() const {
    ElementSet s = parse_set();
    if (!opts_.ops) return SubsetRef::touching(ms_, std::move(s));
    OpMask m;
    for (const auto& n : split_list(*opts_.ops)) {
      try {
        m.insert(ms_.op_index(n));
      } catch (const DomainError&) {
        throw UsageError("unknown operation '" + n + "' in --ops");
      }
    }
    try {
      return SubsetRef::create(ms_, std::move(s), m);
    } catch (const StructuralError& e) {
      throw UsageError(e.what());
    }
  }

  OrientedOperationSequence parse_order() const {
    if (!opts_.order) return OrientedOperationSequence::declared(ms_);
    try {
      return OrientedOperationSequence::create(ms_, split_list(*opts_.order));
    } catch (const DomainError& e) {
      throw UsageError(std::string(e.what()) + " in --order");
    } catch (const StructuralError& e) {
      throw UsageError(std::string(e.what()) + " in --order");
    }
  }

  std::size_t bound(std::size_t fallback) const { return opts_.exhaustive_bound.value_or(fallback); }

  Json order(const OrientedOperationSequence& seq) const {
    Json arr = Json::array();
    for (auto op : seq.order()) arr.push_back(ms_.op_name(op));
    return arr;
  }

  Json series(const NormalSeries& s) const {
    Json chain = Json::array();
    for (const auto& link : s.chain) chain.push_back(subset(link));
    return Json{{"length", s.length()}, {"step_ops", s.step_ops}, {"chain", chain}};
  }

 private:
  const MultiGroupSpace& ms_;
  const CommandOptions& opts_;
};

struct Outcome {
  ExitCode exit;
  Json body;
};

Json anomaly(const std::string& kind, const std::string& detail) {
  return Json{{"kind", kind}, {"detail", detail}};
}

Outcome cmd_validate(const Context& c) {
  const auto v = validate_multigroup(c.ms());
  Json body;
  body["elements"] = c.ms().universe().size();
  Json ops = Json::array();
  for (const auto& g : c.ms().groups()) ops.push_back(g.op());
  body["operations"] = ops;
  body["multigroup_space"] = v.ok();
  Json structural = Json::array();
  for (const auto& x : v.report.structural) structural.push_back(c.violation(x));
  Json axioms = Json::array();
  for (const auto& x : v.report.axioms) axioms.push_back(c.violation(x));
  body["structural_errors"] = structural;
  body["axiom_violations"] = axioms;
  body["suppressed_witnesses"] = v.report.suppressed;
  Json dist = Json::array();
  for (const auto& d : v.distribution) {
    dist.push_back(Json{{"pair", Json::array({d.op_a, d.op_b})},
                        {"a_over_b", d.a_over_b},
                        {"b_over_a", d.b_over_a},
                        {"vacuous", d.vacuous()},
                        {"passed", d.passed()}});
  }
  body["distribution"] = dist;
  if (v.ok()) {
    auto cl = classify_special_case(c.ms());
    body["classification"] = std::string(to_string(cl.tag));
    body["carrier_reading"] = std::string(to_string(cl.reading));
  }
  body["notes"] = Json::array(
      {"complete multi-space is read as closure of each group, which the group axioms imply"});
  return {v.ok() ? ExitCode::passed : ExitCode::failed, body};
}

Outcome cmd_classify(const Context& c) {
  auto cl = classify_special_case(c.ms());
  return {ExitCode::passed, Json{{"classification", std::string(to_string(cl.tag))},
                                 {"carrier_reading", std::string(to_string(cl.reading))}}};
}

std::string_view to_string(IntersectionVerdict v) {
  switch (v) {
    case IntersectionVerdict::empty: return "empty";
    case IntersectionVerdict::subgroup: return "subgroup";
    case IntersectionVerdict::not_subgroup: return "not_subgroup";
  }
  return "empty";
}

Outcome cmd_subspace(const Context& c) {
  const SubsetRef s = c.parse_subset();
  const auto ev = is_subspace_by_intersection(c.ms(), s);
  const bool raw = is_subspace_by_completeness(c.ms(), s);
  const bool authoritative = is_subspace(c.ms(), s);
  const bool induced_ok = validate_multigroup(induced_space(c.ms(), s)).ok();

  Json per_op = Json::array();
  for (const auto& e : ev.per_op)
    per_op.push_back(Json{{"op", c.ms().op_name(e.op)},
                          {"intersection", c.set(e.intersection)},
                          {"verdict", std::string(to_string(e.verdict))}});
  Json body;
  body["subset"] = c.subset(s);
  body["by_intersection"] = Json{{"verdict", ev.verdict}, {"per_op", per_op}, {"uncovered", c.set(ev.uncovered)}};
  body["by_completeness_per_intersection"] = authoritative;
  body["by_completeness_raw_union"] = raw;
  body["induced_space_validates"] = induced_ok;
  body["is_subspace"] = authoritative;
  body["readings_agree"] = ev.verdict == authoritative;
  body["raw_union_disagrees"] = raw != authoritative;
  Json anomalies = Json::array();
  if (raw != authoritative)
    anomalies.push_back(anomaly("READING_DISAGREEMENT",
                                "raw-union completeness differs from the per-intersection reading"));
  if (ev.verdict != authoritative || induced_ok != authoritative)
    anomalies.push_back(anomaly("INTERNAL_DISAGREEMENT", "subspace code paths disagree"));
  body["anomalies"] = anomalies;
  return {authoritative ? ExitCode::passed : ExitCode::failed, body};
}

Outcome not_a_subspace(const Context& c, const SubsetRef& s) {
  Json body;
  body["subset"] = c.subset(s);
  body["is_subspace"] = false;
  body["reason"] = "subset is not a multi-group subspace";
  return {ExitCode::failed, body};
}

Outcome cmd_cosets(const Context& c) {
  const SubsetRef h = c.parse_subset();
  if (!is_subspace(c.ms(), h)) return not_a_subspace(c, h);
  Json body;
  body["subset"] = c.subset(h);
  Json anomalies = Json::array();
  try {
    auto d = coset_decomposition(c.ms(), h);
    Json cosets = Json::array();
    bool equal = true;
    for (std::size_t k = 0; k < d.cosets.size(); ++k) {
      cosets.push_back(Json{{"representative", c.name(d.transversal[k])}, {"coset", c.set(d.cosets[k])}});
      equal = equal && d.cosets[k].size() == d.cosets.front().size();
    }
    body["partition"] = true;
    body["transversal"] = c.elements(d.transversal);
    body["cosets"] = cosets;
    body["equal_sizes"] = equal;
    if (!d.fallback.empty())
      anomalies.push_back(anomaly("COSET_FALLBACK",
                                  "no product defined; coset taken as {g} for " +
                                      c.elements(d.fallback).dump()));
    body["anomalies"] = anomalies;
    return {ExitCode::passed, body};
  } catch (const DecompositionFailure& f) {
    body["partition"] = false;
    Json a = anomaly("DECOMPOSITION_FAILURE", f.what());
    a["first"] = Json{{"representative", c.name(f.first())}, {"coset", c.set(f.first_coset())}};
    a["second"] = Json{{"representative", c.name(f.second())}, {"coset", c.set(f.second_coset())}};
    anomalies.push_back(a);
    body["anomalies"] = anomalies;
    return {ExitCode::failed, body};
  }
}

Outcome cmd_normal(const Context& c) {
  const SubsetRef h = c.parse_subset();
  if (!is_subspace(c.ms(), h)) return not_a_subspace(c, h);
  const auto def = is_normal_subspace(c.ms(), h);
  const bool crit = normality_criterion(c.ms(), h);
  Json body;
  body["subset"] = c.subset(h);
  Json d{{"verdict", def.verdict}};
  if (def.first_violation) {
    const auto& v = *def.first_violation;
    d["first_violation"] = Json{{"op", c.ms().op_name(v.op)},
                                {"g", c.name(v.g)},
                                {"h", c.name(v.h)},
                                {"conjugate", c.name(v.conjugate)}};
  }
  body["by_conjugation"] = d;
  body["by_intersection_criterion"] = crit;
  body["paths_agree"] = def.verdict == crit;
  Json anomalies = Json::array();
  if (def.verdict != crit)
    anomalies.push_back(anomaly("INTERNAL_DISAGREEMENT", "normality code paths disagree"));
  body["anomalies"] = anomalies;
  return {def.verdict && crit ? ExitCode::passed : ExitCode::failed, body};
}

Outcome cmd_series(const Context& c) {
  const auto seq = c.parse_order();
  Json body;
  body["order"] = c.order(seq);
  Json anomalies = Json::array();
  try {
    auto built = build_series(c.ms(), seq, c.bound(kDefaultGroupBound));
    body["series"] = c.series(built.series);
    body["terminal"] = c.set(built.series.chain.back().elements());
    body["expected_terminal"] = Json::array({c.ms().name(built.expected_terminal)});
    if (built.terminal_mismatch)
      anomalies.push_back(anomaly("TERMINAL_MISMATCH",
                                  "series ends at " + c.set(built.series.chain.back().elements()).dump() +
                                      " instead of the identity of the last operation"));
    body["anomalies"] = anomalies;
    return {ExitCode::passed, body};
  } catch (const ConsistencyError& e) {
    anomalies.push_back(anomaly("INCONSISTENT_LINK", e.what()));
    body["anomalies"] = anomalies;
    return {ExitCode::failed, body};
  }
}

Json invariance(const Context& c, const LengthInvariance& li, bool with_series,
                const std::vector<NormalSeries>* all) {
  Json j;
  j["order"] = c.order(li.sequence);
  j["series_count"] = li.series_count;
  j["lengths"] = li.lengths;
  j["constant"] = li.constant ? Json(*li.constant) : Json(nullptr);
  if (li.counterexample)
    j["counterexample"] = Json::array({c.series(li.counterexample->first), c.series(li.counterexample->second)});
  if (with_series && all) {
    Json arr = Json::array();
    for (const auto& s : *all) arr.push_back(c.series(s));
    j["series"] = arr;
  }
  return j;
}

Outcome cmd_maximal_series(const Context& c) {
  const auto seq = c.parse_order();
  const std::size_t bound = c.bound(kDefaultSeriesBound);
  const auto all = enumerate_maximal_series(c.ms(), seq, bound);
  const auto li = length_invariance_check(c.ms(), seq, bound);
  Json body = invariance(c, li, true, &all);
  if (c.ms().op_count() <= kMaxCrossSequenceOps) {
    auto cross = cross_sequence_invariance(c.ms(), bound);
    Json per = Json::array();
    for (const auto& p : cross.per_sequence) per.push_back(invariance(c, p, false, nullptr));
    body["cross_sequence"] = Json{{"per_sequence", per}, {"sequence_independent", cross.sequence_independent}};
  } else {
    body["cross_sequence"] = Json{{"skipped", "more than " + std::to_string(kMaxCrossSequenceOps) + " operations"}};
  }
  return {li.holds() ? ExitCode::passed : ExitCode::failed, body};
}

Outcome cmd_span(const Context& c) {
  const auto a = GeneratingSet::create(c.ms(), c.parse_set());
  const auto once = span_once(c.ms(), a);
  const auto closure = span_closure(c.ms(), a);
  Json body;
  body["seeds"] = c.set(a.seeds());
  body["span_once"] = c.set(once);
  body["span_closure"] = c.set(closure);
  body["span_once_contains_seeds"] = a.seeds().is_subset_of(once);
  body["generates_universe"] = closure == c.ms().universe();
  return {ExitCode::passed, body};
}

Outcome cmd_generators(const Context& c) {
  const auto w = is_finitely_generated(c.ms(), c.bound(kDefaultGeneratorBound));
  Json body;
  body["finitely_generated"] = true;
  body["witness"] = c.set(w.seeds);
  body["size"] = w.seeds.size();
  body["minimal"] = w.minimal;
  return {ExitCode::passed, body};
}

const std::map<std::string, std::function<Outcome(const Context&)>, std::less<>>& commands() {
  static const std::map<std::string, std::function<Outcome(const Context&)>, std::less<>> table{
      {"validate", cmd_validate},   {"classify", cmd_classify},
      {"subspace", cmd_subspace},   {"cosets", cmd_cosets},
      {"normal", cmd_normal},       {"series", cmd_series},
      {"maximal-series", cmd_maximal_series},
      {"span", cmd_span},           {"generators", cmd_generators},
  };
  return table;
}

std::string_view verdict_name(ExitCode e) {
  switch (e) {
    case ExitCode::passed: return "pass";
    case ExitCode::failed: return "fail";
    case ExitCode::input_error: return "error";
    case ExitCode::bound_exceeded: return "bound_exceeded";
  }
  return "error";
}

CommandResult finish(std::string_view command, ExitCode exit, Json body, const CommandOptions& opts,
                     std::chrono::steady_clock::time_point start) {
  Json report;
  report["command"] = std::string(command);
  report["verdict"] = std::string(verdict_name(exit));
  report["exit_code"] = static_cast<int>(exit);
  for (auto it = body.begin(); it != body.end(); ++it) report[it.key()] = it.value();
  if (opts.timing) {
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    report["timing_ms"] = ms.count();
  }
  CommandResult r;
  r.exit = exit;
  r.rendered = opts.json ? report.dump(2) + "\n" : render_text(report);
  r.report = std::move(report);
  return r;
}

Json error_body(const std::string& kind, const std::string& message) {
  return Json{{"error", Json{{"kind", kind}, {"message", message}}}};
}

}  // namespace

CommandResult run_command(std::string_view command, std::string_view instance_text,
                          const CommandOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  auto it = commands().find(command);
  if (it == commands().end())
    return finish(command, ExitCode::input_error,
                  error_body("usage", "unknown command '" + std::string(command) + "'"), options, start);

  std::optional<MultiGroupSpace> ms;
  try {
    ms.emplace(parse_instance(instance_text));
  } catch (const ParseError& e) {
    Json body = error_body("parse", e.message());
    body["error"]["line"] = e.line();
    body["error"]["column"] = e.column();
    return finish(command, ExitCode::input_error, body, options, start);
  } catch (const Error& e) {
    return finish(command, ExitCode::input_error, error_body("structural", e.what()), options, start);
  }

  if (command != "validate") {
    const auto v = validate_multigroup(*ms);
    if (!v.ok()) {
      Json body = error_body("invalid_space", "instance is not a multi-group space; run 'validate'");
      return finish(command, ExitCode::input_error, body, options, start);
    }
  }

  const Context ctx(*ms, options);
  try {
    auto out = it->second(ctx);
    return finish(command, out.exit, std::move(out.body), options, start);
  } catch (const BoundExceeded& e) {
    Json body = error_body("bound_exceeded", e.what());
    body["error"]["size"] = e.size();
    body["error"]["bound"] = e.bound();
    return finish(command, ExitCode::bound_exceeded, body, options, start);
  } catch (const UsageError& e) {
    return finish(command, ExitCode::input_error, error_body("usage", e.what()), options, start);
  } catch (const DomainError& e) {
    return finish(command, ExitCode::input_error, error_body("domain", e.what()), options, start);
  } catch (const PreconditionError& e) {
    return finish(command, ExitCode::failed, error_body("precondition", e.what()), options, start);
  }
}

CommandResult run_command_on_file(std::string_view command, const std::string& path,
                                  const CommandOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return finish(command, ExitCode::input_error,
                  error_body("io", "cannot read instance file '" + path + "'"), options,
                  std::chrono::steady_clock::now());
  }
  std::ostringstream text;
  text << in.rdbuf();
  return run_command(command, text.str(), options);
}

namespace {

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_flat(const Json& v) {
  if (!v.is_array()) return false;
  for (const auto& x : v)
    if (x.is_structured()) return false;
  return true;
}

std::string flat(const Json& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar(v[i]);
  return s + "]";
}

void render(const Json& v, std::size_t indent, std::string& out);

void render_member(const std::string& key, const Json& v, std::size_t indent, std::string& out) {
  out.append(indent, ' ');
  out += key + ":";
  if (!v.is_structured()) {
    out += " " + scalar(v) + "\n";
  } else if (is_flat(v)) {
    out += " " + flat(v) + "\n";
  } else if (v.empty()) {
    out += v.is_array() ? " []\n" : " {}\n";
  } else {
    out += "\n";
    render(v, indent + 2, out);
  }
}

void render(const Json& v, std::size_t indent, std::string& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) render_member(it.key(), it.value(), indent, out);
  } else if (v.is_array()) {
    for (const auto& item : v) {
      if (item.is_object() && !item.empty()) {
        std::string nested;
        render(item, indent + 2, nested);
        nested.replace(indent, 2, "- ");
        out += nested;
      } else {
        out.append(indent, ' ');
        out += "- " + (is_flat(item) ? flat(item) : scalar(item)) + "\n";
      }
    }
  } else {
    out.append(indent, ' ');
    out += scalar(v) + "\n";
  }
}

}  // namespace

std::string render_text(const nlohmann::ordered_json& report) {
  std::string out;
  render(report, 0, out);
  return out;
}

}  // namespace mgk
