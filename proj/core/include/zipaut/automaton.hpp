#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zipaut/ast.hpp"
#include "zipaut/semantics.hpp"
#include "zipaut/zipper.hpp"

namespace zipaut {

struct Assignment {
  VName var;
  Val value;

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend std::strong_ordering operator<=>(const Assignment&, const Assignment&) = default;
};

/// Edge label: silent, or an assignment of a literal to a variable.
class Action {
 public:
  Action() = default;  // silent

  static Action none() { return Action(); }
  static Action assign(VName x, Val v) { return Action(Assignment{std::move(x), v}); }

  bool silent() const { return !assignment_.has_value(); }
  const Assignment* assignment() const { return assignment_ ? &*assignment_ : nullptr; }

  friend bool operator==(const Action&, const Action&) = default;
  friend std::strong_ordering operator<=>(const Action& a, const Action& b) {
    if (a.silent() || b.silent()) return !a.silent() <=> !b.silent();
    return *a.assignment_ <=> *b.assignment_;
  }

 private:
  explicit Action(Assignment a) : assignment_(std::move(a)) {}
  std::optional<Assignment> assignment_;
};

/// `x:=lit` or `τ`.
std::string render_action(const Action& a);

template <class N>
struct Edge {
  N source;
  Action action;
  N dest;

  friend bool operator==(const Edge&, const Edge&) = default;
};

template <class N>
bool operator<(const Edge<N>& a, const Edge<N>& b) {
  if (a.source < b.source) return true;
  if (b.source < a.source) return false;
  if (auto c = a.action <=> b.action; c != 0) return c < 0;
  return a.dest < b.dest;
}

/// Nodes and edges are lists with set semantics; nothing forces edge
/// endpoints or `init` to be among `nodes` (see regular_ta).
template <class N>
struct Automaton {
  std::vector<N> nodes;
  std::vector<Edge<N>> edges;
  N init;

  friend bool operator==(const Automaton&, const Automaton&) = default;
};

template <class N>
struct TAState {
  N node;
  State state;

  friend bool operator==(const TAState&, const TAState&) = default;
};

State action_effect(const Action& a, const State& s);

/// Every successor under the automaton step rule, in edge order.
template <class N>
std::vector<TAState<N>> aut_step(const Automaton<N>& aut, const TAState<N>& ts) {
  std::vector<TAState<N>> out;
  for (const auto& e : aut.edges) {
    if (e.source == ts.node) out.push_back({e.dest, action_effect(e.action, ts.state)});
  }
  return out;
}

template <class N>
bool regular_ta(const Automaton<N>& aut) {
  const std::set<N> nodes(aut.nodes.begin(), aut.nodes.end());
  if (!nodes.contains(aut.init)) return false;
  for (const auto& e : aut.edges) {
    if (!nodes.contains(e.source) || !nodes.contains(e.dest)) return false;
  }
  return true;
}

std::vector<SyntConfig> synt_step_image(const SyntConfig& cfg);
Action action_of_synt_config(const SyntConfig& cfg);
std::vector<Edge<SyntConfig>> edge_of_synt_config(const SyntConfig& cfg);
std::vector<Edge<SyntConfig>> edges_of_nodes(const std::vector<SyntConfig>& nds);

/// Nodes are all (location, flag) pairs of `c`; edges over-approximate every
/// semantic step; the initial node is the root before execution.
Automaton<SyntConfig> stmt_to_ta(const Stmt& c);

bool nodes_closed(const Automaton<SyntConfig>& aut);
bool edges_closed(const Automaton<SyntConfig>& aut);
bool synt_step_image_closed(const Automaton<SyntConfig>& aut);

/// First location of `c` (paired with a flag) whose step image leaves
/// `all_locations(c, PTop)`, if any.
std::optional<SyntConfig> location_closure_violation(const Stmt& c);

struct SimulationViolation {
  std::size_t step;  // index of the offending semantic step, from 0
  SemConfig from;
  SemConfig to;
  Rule rule;
};

struct SimulationReport {
  Trace trace;
  std::vector<std::size_t> matched_edges;  // index into stmt_to_ta(c).edges, per step
  std::optional<SimulationViolation> violation;

  bool passed() const { return !violation.has_value(); }
};

/// Runs the program and matches each semantic step against an edge of
/// `stmt_to_ta(c)` with equal endpoints and equal effect on the state.
SimulationReport check_simulation(const Stmt& c, const State& s0, std::size_t max_steps);

/// Non-silent actions of a trace, one per SAssign step.
std::vector<Action> observable_actions(const Trace& t);

}  // namespace zipaut
