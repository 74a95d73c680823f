#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "defcol/defcol.hpp"

namespace defcol::cli {

enum ExitCode : int { kSat = 0, kOk = 0, kUsage = 2, kUnsat = 10, kBudget = 20 };

inline constexpr std::size_t kBudgetRequiredAbove = 30;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out)
    throw UsageError("cannot write '" + path + "'");
  out << text;
}

inline bool has_rotation_records(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (line.rfind("rot", 0) == 0)
      return true;
  return false;
}

// Accepts an edge list or an embedding file.
inline Graph load_graph(const std::string& path) {
  auto text = read_file(path);
  if (has_rotation_records(text))
    return parse_embedding(text).graph();
  return parse_edge_list(text);
}

inline PlaneEmbedding load_embedding(const std::string& path) { return parse_embedding(read_file(path)); }

// "v=c" where v is a label or a vertex index.
inline std::pair<Vertex, Color> parse_assignment(const Graph& g, const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos)
    throw UsageError("expected vertex=color, got '" + text + "'");
  std::string name = text.substr(0, eq);
  Color c = 0;
  try {
    std::size_t used = 0;
    c = std::stoi(text.substr(eq + 1), &used);
    if (used != text.size() - eq - 1)
      throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw UsageError("bad color in '" + text + "'");
  }
  if (auto labelled = g.find_label(name))
    return {*labelled, c};
  try {
    std::size_t used = 0;
    unsigned long v = std::stoul(name, &used);
    if (used != name.size())
      throw std::invalid_argument(name);
    return {static_cast<Vertex>(v), c};
  } catch (const std::exception&) {
    throw UsageError("unknown vertex '" + name + "'");
  }
}

struct SolveFlags {
  std::string graph;
  std::string spec;
  std::vector<std::string> force;
  std::vector<std::string> forbid;
  std::optional<std::uint64_t> budget;
  std::string emit_cnf;
};

inline ConstraintSet build_constraints(const Graph& g, const SolveFlags& f) {
  ConstraintSet cons;
  for (const auto& s : f.force) {
    auto [v, c] = parse_assignment(g, s);
    cons.forced[v] = c;
  }
  for (const auto& s : f.forbid) {
    auto [v, c] = parse_assignment(g, s);
    cons.forbidden[v].insert(c);
  }
  return cons;
}

inline int exit_code(Verdict v) {
  switch (v) {
  case Verdict::sat: return kSat;
  case Verdict::unsat: return kUnsat;
  case Verdict::budget_exceeded: return kBudget;
  }
  return kUsage;
}

inline int run_solve(const SolveFlags& f, bool oracle, std::ostream& out) {
  Graph g = load_graph(f.graph);
  ColoringSpec spec = ColoringSpec::parse(f.spec);
  ConstraintSet cons = build_constraints(g, f);
  if (!f.emit_cnf.empty()) {
    auto cnf = export_cnf(g, spec, cons);
    write_file(f.emit_cnf, to_dimacs(cnf));
    out << json{{"format", "defcol-cnf"},
                {"version", kReportVersion},
                {"spec", spec.to_string()},
                {"cnf", f.emit_cnf},
                {"variables", cnf.variables},
                {"clauses", cnf.clauses.size()}}
               .dump(2)
        << '\n';
    return kOk;
  }
  SolveOutcome outcome;
  if (oracle) {
    outcome = brute_force_oracle(g, spec, cons);
  } else {
    if (!f.budget && g.vertex_count() > kBudgetRequiredAbove)
      throw UsageError("--budget is required for graphs with more than " + std::to_string(kBudgetRequiredAbove) +
                       " vertices");
    outcome = solve(g, spec, cons, f.budget.value_or(kUnlimitedBudget));
  }
  out << solve_outcome_json(outcome, oracle ? std::nullopt : f.budget, spec).dump(2) << '\n';
  return exit_code(outcome.verdict);
}

inline json terminals_json(const GadgetResult& r) {
  json t = json::object();
  for (const auto& [name, v] : r.terminals)
    t[name] = v;
  return t;
}

// Writes PREFIX.edges, PREFIX.emb (when an embedding exists) and
// PREFIX.terminals.json; without a prefix the edge list goes to stdout.
inline int emit_gadget(const std::string& kind, const GadgetResult& r, const std::string& prefix, std::ostream& out) {
  if (prefix.empty()) {
    write_edge_list(out, r.graph);
    return kOk;
  }
  json files = json::array();
  write_file(prefix + ".edges", to_edge_list(r.graph));
  files.push_back(prefix + ".edges");
  if (r.embedding) {
    write_file(prefix + ".emb", to_embedding_text(*r.embedding));
    files.push_back(prefix + ".emb");
  }
  write_file(prefix + ".terminals.json", terminals_json(r).dump(2) + "\n");
  files.push_back(prefix + ".terminals.json");
  out << json{{"format", "defcol-gadget"},
              {"version", kReportVersion},
              {"gadget", kind},
              {"vertices", r.graph.vertex_count()},
              {"edges", r.graph.edge_count()},
              {"terminals", terminals_json(r)},
              {"files", files}}
             .dump(2)
      << '\n';
  return kOk;
}

inline int run_check(const std::string& what, const std::string& graph_path, const std::string& emb_path,
                     std::ostream& out) {
  if (graph_path.empty() && emb_path.empty())
    throw UsageError("check needs --graph or --embedding");
  json report{{"format", "defcol-check"}, {"version", kReportVersion}, {"check", what}};
  if (what == "lemmas") {
    if (emb_path.empty())
      throw UsageError("check lemmas needs --embedding");
    auto emb = load_embedding(emb_path);
    report["lemmas"] = json::array({lemma_report_json(check_lemma3(emb)), lemma_report_json(check_lemma4(emb)),
                                    lemma_report_json(check_prop1b(emb))});
  } else {
    Graph g = emb_path.empty() ? load_graph(graph_path) : load_embedding(emb_path).graph();
    if (what == "girth") {
      auto len = girth(g);
      report["girth"] = len ? json(*len) : json("infinite");
    } else if (what == "c4c5") {
      auto four = cycles_of_length(g, 4).size();
      auto five = cycles_of_length(g, 5).size();
      report["c4c5_free"] = four == 0 && five == 0;
      report["four_cycles"] = four;
      report["five_cycles"] = five;
    } else {
      throw UsageError("unknown check '" + what + "' (expected girth, c4c5 or lemmas)");
    }
  }
  out << report.dump(2) << '\n';
  return kOk;
}

inline int run_audit(const std::string& emb_path, const std::string& ruleset, std::ostream& out) {
  auto emb = load_embedding(emb_path);
  auto rules = ruleset_by_name(ruleset);
  auto result = apply_ruleset(emb, rules);
  out << audit_json(emb, rules, result).dump(2) << '\n';
  return kOk;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Defective coloring laboratory for plane graphs without 4- and 5-cycles", "defcol"};
  app.require_subcommand(1);

  SolveFlags solve_flags;
  auto add_solve_flags = [&](CLI::App* cmd) {
    cmd->add_option("--graph", solve_flags.graph, "edge-list or embedding file")->required();
    cmd->add_option("--spec", solve_flags.spec, "defects d1,d2[,...]")->required();
    cmd->add_option("--force", solve_flags.force, "vertex=color (label or index)");
    cmd->add_option("--forbid", solve_flags.forbid, "vertex=color (label or index)");
  };
  auto* solve_cmd = app.add_subcommand("solve", "exact search");
  add_solve_flags(solve_cmd);
  solve_cmd->add_option("--budget", solve_flags.budget, "node limit")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--emit-cnf", solve_flags.emit_cnf, "write DIMACS CNF instead of solving");
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force enumeration");
  add_solve_flags(oracle_cmd);

  std::string prefix, reduce_graph, reduce_embedding;
  int k = 0;
  auto* gadget_cmd = app.add_subcommand("gadget", "generate gadget graphs");
  gadget_cmd->require_subcommand(1);
  auto* g_huv = gadget_cmd->add_subcommand("huv", "two triangles joined by an edge");
  auto* g_s = gadget_cmd->add_subcommand("s", "amplifier S_z");
  auto* g_non = gadget_cmd->add_subcommand("non1k", "graph with no (1,k)-coloring");
  auto* g_red = gadget_cmd->add_subcommand("reduce", "hang k-1 triangles on every vertex");
  for (auto* cmd : {g_huv, g_s, g_non, g_red})
    cmd->add_option("--out", prefix, "output prefix");
  for (auto* cmd : {g_s, g_non, g_red})
    cmd->add_option("--k", k, "positive integer")->required()->check(CLI::PositiveNumber);
  auto* red_src = g_red->add_option("--graph", reduce_graph, "edge-list file");
  auto* red_emb = g_red->add_option("--embedding", reduce_embedding, "embedding file");
  red_src->excludes(red_emb);

  std::string check_what, check_graph, check_emb;
  auto* check_cmd = app.add_subcommand("check", "structural checks");
  check_cmd->add_option("what", check_what, "girth | c4c5 | lemmas")->required();
  check_cmd->add_option("--graph", check_graph, "edge-list or embedding file");
  check_cmd->add_option("--embedding", check_emb, "embedding file");

  std::string audit_emb, ruleset;
  auto* audit_cmd = app.add_subcommand("audit", "discharging audit");
  audit_cmd->add_option("--embedding", audit_emb, "embedding file")->required();
  audit_cmd->add_option("--ruleset", ruleset, "44 | 35 | 29")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*solve_cmd)
      return run_solve(solve_flags, false, out);
    if (*oracle_cmd)
      return run_solve(solve_flags, true, out);
    if (*gadget_cmd) {
      if (*g_huv)
        return emit_gadget("huv", huv(), prefix, out);
      if (*g_s)
        return emit_gadget("s", s_gadget(k), prefix, out);
      if (*g_non)
        return emit_gadget("non1k", non_1k(k), prefix, out);
      if (!reduce_embedding.empty())
        return emit_gadget("reduce", np_reduce(load_embedding(reduce_embedding), k), prefix, out);
      if (reduce_graph.empty())
        throw UsageError("gadget reduce needs --graph or --embedding");
      return emit_gadget("reduce", np_reduce(load_graph(reduce_graph), k), prefix, out);
    }
    if (*check_cmd)
      return run_check(check_what, check_graph, check_emb, out);
    if (*audit_cmd)
      return run_audit(audit_emb, ruleset, out);
  } catch (const std::exception& e) {
    err << "defcol: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

} // namespace defcol::cli
