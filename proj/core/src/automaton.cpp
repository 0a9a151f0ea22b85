#include "zipaut/automaton.hpp"

#include <algorithm>
#include <map>

namespace zipaut {

std::string render_action(const Action& a) {
  if (const Assignment* as = a.assignment()) {
    return as->var.str() + ":=" + std::string(as->value.literal());
  }
  return "τ";
}

State action_effect(const Action& a, const State& s) {
  if (const Assignment* as = a.assignment()) return s.with(as->var, as->value);
  return s;
}

std::vector<SyntConfig> synt_step_image(const SyntConfig& cfg) {
  const StmtLocation& loc = cfg.loc;
  if (!cfg.before) {
    if (loc.path.is_top()) return {};
    return {next_loc(loc.focus, loc.path)};
  }
  return std::visit(
      [&](const auto& st) -> std::vector<SyntConfig> {
        using T = std::decay_t<decltype(st)>;
        if constexpr (std::is_same_v<T, EmptyStmt> || std::is_same_v<T, AssignStmt>) {
          return {{loc, false}};
        } else if constexpr (std::is_same_v<T, SeqStmt>) {
          return {{{st.first, StmtPath::seq_left(loc.path, st.second)}, true}};
        } else if constexpr (std::is_same_v<T, CondStmt>) {
          return {{{st.then_branch, StmtPath::cond_left(st.cond, loc.path, st.else_branch)}, true},
                  {{st.else_branch, StmtPath::cond_right(st.cond, st.then_branch, loc.path)}, true}};
        } else {
          return {{{st.body, StmtPath::while_body(st.cond, loc.path)}, true}, {loc, false}};
        }
      },
      loc.focus.node().v);
}

Action action_of_synt_config(const SyntConfig& cfg) {
  if (cfg.before) {
    if (const auto* a = cfg.loc.focus.as<AssignStmt>()) return Action::assign(a->var, a->value);
  }
  return Action::none();
}

std::vector<Edge<SyntConfig>> edge_of_synt_config(const SyntConfig& cfg) {
  std::vector<Edge<SyntConfig>> out;
  const Action act = action_of_synt_config(cfg);
  for (auto& t : synt_step_image(cfg)) out.push_back({cfg, act, std::move(t)});
  return out;
}

std::vector<Edge<SyntConfig>> edges_of_nodes(const std::vector<SyntConfig>& nds) {
  std::vector<Edge<SyntConfig>> out;
  for (const auto& n : nds) {
    auto es = edge_of_synt_config(n);
    out.insert(out.end(), std::make_move_iterator(es.begin()), std::make_move_iterator(es.end()));
  }
  return out;
}

Automaton<SyntConfig> stmt_to_ta(const Stmt& c) {
  auto nds = nodes_of_stmt_locations(all_locations(c, StmtPath::top()));
  auto edges = edges_of_nodes(nds);
  return {std::move(nds), std::move(edges), {{c, StmtPath::top()}, true}};
}

bool nodes_closed(const Automaton<SyntConfig>& aut) {
  const std::set<SyntConfig> nodes(aut.nodes.begin(), aut.nodes.end());
  for (const auto& n : aut.nodes) {
    for (const auto& t : synt_step_image(n)) {
      if (!nodes.contains(t)) return false;
    }
  }
  return true;
}

bool edges_closed(const Automaton<SyntConfig>& aut) {
  const std::set<Edge<SyntConfig>> edges(aut.edges.begin(), aut.edges.end());
  for (const auto& n : aut.nodes) {
    for (const auto& e : edge_of_synt_config(n)) {
      if (!edges.contains(e)) return false;
    }
  }
  return true;
}

bool synt_step_image_closed(const Automaton<SyntConfig>& aut) {
  return nodes_closed(aut) && edges_closed(aut);
}

std::optional<SyntConfig> location_closure_violation(const Stmt& c) {
  const auto locs = all_locations(c, StmtPath::top());
  std::set<SyntConfig> known;  // flag fixed to false; only the location matters
  for (const auto& l : locs) known.insert({l, false});
  for (const auto& l : locs) {
    for (bool b : {true, false}) {
      const SyntConfig cfg{l, b};
      for (const auto& t : synt_step_image(cfg)) {
        if (!known.contains({t.loc, false})) return cfg;
      }
    }
  }
  return std::nullopt;
}

SimulationReport check_simulation(const Stmt& c, const State& s0, std::size_t max_steps) {
  SimulationReport report;
  report.trace = run_trace(c, s0, max_steps);
  const auto aut = stmt_to_ta(c);

  std::multimap<SyntConfig, std::size_t> by_source;
  for (std::size_t i = 0; i < aut.edges.size(); ++i) by_source.emplace(aut.edges[i].source, i);

  const Trace& t = report.trace;
  for (std::size_t k = 0; k < t.step_count(); ++k) {
    const SemConfig& from = t.configs[k];
    const SemConfig& to = t.configs[k + 1];
    std::optional<std::size_t> match;
    auto [lo, hi] = by_source.equal_range(from.synt);
    for (auto it = lo; it != hi && !match; ++it) {
      const auto& e = aut.edges[it->second];
      if (e.dest == to.synt && action_effect(e.action, from.state) == to.state) match = it->second;
    }
    if (!match) {
      report.violation = SimulationViolation{k, from, to, t.rules[k]};
      return report;
    }
    report.matched_edges.push_back(*match);
  }
  return report;
}

std::vector<Action> observable_actions(const Trace& t) {
  std::vector<Action> out;
  for (std::size_t k = 0; k < t.step_count(); ++k) {
    if (t.rules[k] != Rule::Assign) continue;
    const auto* a = t.configs[k].synt.loc.focus.as<AssignStmt>();
    out.push_back(Action::assign(a->var, a->value));
  }
  return out;
}

}  // namespace zipaut
