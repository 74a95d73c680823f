#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "defcol/coloring.hpp"
#include "defcol/discharging.hpp"
#include "defcol/lemmas.hpp"

namespace defcol {

using nlohmann::json;

inline constexpr int kReportVersion = 1;

inline json coloring_json(const Coloring& c) {
  json out = json::object();
  for (const auto& [v, color] : c)
    out[std::to_string(v)] = color;
  return out;
}

// {format, version, outcome, coloring?, nodes, budget}; budget is null when
// the search ran without a limit.
inline json solve_outcome_json(const SolveOutcome& o, std::optional<std::uint64_t> budget, const ColoringSpec& spec) {
  json out{{"format", "defcol-solve"},
           {"version", kReportVersion},
           {"spec", spec.to_string()},
           {"outcome", to_string(o.verdict)},
           {"nodes", o.nodes},
           {"budget", budget ? json(*budget) : json(nullptr)}};
  if (o.sat())
    out["coloring"] = coloring_json(o.coloring);
  return out;
}

inline SolveOutcome solve_outcome_from_json(const json& j) {
  SolveOutcome o;
  const auto outcome = j.at("outcome").get<std::string>();
  if (outcome == "sat")
    o.verdict = Verdict::sat;
  else if (outcome == "unsat")
    o.verdict = Verdict::unsat;
  else if (outcome == "budget_exceeded")
    o.verdict = Verdict::budget_exceeded;
  else
    throw std::invalid_argument("unknown outcome '" + outcome + "'");
  o.nodes = j.at("nodes").get<std::uint64_t>();
  if (j.contains("coloring"))
    for (const auto& [key, value] : j.at("coloring").items())
      o.coloring[static_cast<Vertex>(std::stoul(key))] = value.get<Color>();
  return o;
}

inline json lemma_report_json(const LemmaReport& r) {
  json findings = json::array();
  for (const auto& f : r.findings)
    findings.push_back({{"element", f.element.to_string()}, {"verdict", to_string(f.verdict)}, {"witness", f.witness}});
  json out{{"lemma", r.name},
           {"verdict", to_string(r.verdict)},
           {"pass", r.count(CheckVerdict::pass)},
           {"fail", r.count(CheckVerdict::fail)},
           {"degenerate", r.count(CheckVerdict::degenerate)},
           {"findings", findings},
           {"notes", r.notes}};
  if (!r.reason.empty())
    out["reason"] = r.reason;
  return out;
}

// Per-element initial charge, transfers, final charge; totals, conservation,
// negative elements and the lemma validator verdicts.
inline json audit_json(const PlaneEmbedding& emb, const DischargeRuleSet& rules, const DischargeResult& result) {
  json rule_list = json::array();
  for (const auto& rule : rules.rules)
    rule_list.push_back({{"id", rule.id}, {"amount", to_fraction_string(rule.amount)}, {"rule", rule.describe()}});

  std::map<Element, json> transfers;
  for (const auto& tr : result.log) {
    transfers[tr.from].push_back({{"rule", tr.rule},
                                  {"direction", "out"},
                                  {"counterpart", tr.to.to_string()},
                                  {"amount", to_fraction_string(tr.amount)}});
    transfers[tr.to].push_back({{"rule", tr.rule},
                                {"direction", "in"},
                                {"counterpart", tr.from.to_string()},
                                {"amount", to_fraction_string(tr.amount)}});
  }

  json elements = json::array();
  for (const auto& [e, initial] : result.initial) {
    json entry{{"element", e.to_string()},
               {"kind", e.is_vertex() ? "vertex" : "face"},
               {"initial", to_fraction_string(initial)},
               {"final", to_fraction_string(result.final.at(e))},
               {"transfers", transfers.count(e) ? transfers[e] : json::array()}};
    if (e.is_vertex()) {
      const auto& vt = result.tags.vertices.at(e.id);
      entry["degree"] = vt.degree;
      entry["alpha"] = vt.alpha;
      entry["beta"] = vt.beta;
      entry["gamma"] = vt.gamma;
      if (vt.degree == 2)
        entry["class"] = vt.bad_2 ? "bad 2-vertex" : "good 2-vertex";
    } else {
      const auto& ft = result.tags.face_tags.at(e.id);
      entry["degree"] = ft.degree;
      entry["signature"] = ft.signature;
      entry["boundary"] = result.tags.faces.at(e.id).corners();
      if (ft.degree == 3)
        entry["class"] = ft.bad_3 ? "bad 3-face" : "good 3-face";
    }
    elements.push_back(std::move(entry));
  }

  json negatives = json::array();
  for (const auto& [e, c] : negative_elements(result.final))
    negatives.push_back({{"element", e.to_string()}, {"charge", to_fraction_string(c)}});

  return json{{"format", "defcol-audit"},
              {"version", kReportVersion},
              {"ruleset", rules.name},
              {"rules", rule_list},
              {"vertices", emb.graph().vertex_count()},
              {"edges", emb.graph().edge_count()},
              {"faces", result.tags.faces.size()},
              {"elements", elements},
              {"totals", {{"initial", to_fraction_string(total(result.initial))},
                          {"final", to_fraction_string(total(result.final))}}},
              {"conserved", verify_conservation(result.initial, result.final)},
              {"negative", negatives},
              {"lemmas", json::array({lemma_report_json(check_lemma3(emb)), lemma_report_json(check_lemma4(emb)),
                                      lemma_report_json(check_prop1b(emb))})}};
}

} // namespace defcol
