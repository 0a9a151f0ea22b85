#include "zipaut/semantics.hpp"

#include <stdexcept>

#include "zipaut/parser.hpp"

namespace zipaut {

std::optional<Val> State::lookup(const VName& x) const {
  auto it = bindings_.find(x);
  if (it == bindings_.end()) return std::nullopt;
  return it->second;
}

State State::with(const VName& x, Val v) const {
  State out = *this;
  out.set(x, v);
  return out;
}

std::string render_state(const State& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, v] : s.bindings()) {
    if (!first) out += ", ";
    first = false;
    out += k.str();
    out += "=";
    out += v.literal();
  }
  out += "}";
  return out;
}

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::Empty: return "SEmpty";
    case Rule::Assign: return "SAssign";
    case Rule::Seq: return "SSeq";
    case Rule::CondTrue: return "SCondT";
    case Rule::CondFalse: return "SCondF";
    case Rule::WhileTrue: return "SWhileT";
    case Rule::WhileFalse: return "SWhileF";
    case Rule::False: return "SFalse";
  }
  return "?";
}

std::string_view status_name(TraceStatus s) {
  switch (s) {
    case TraceStatus::Terminated: return "terminated";
    case TraceStatus::Stuck: return "stuck";
    case TraceStatus::StepLimit: return "step-limit";
  }
  return "?";
}

Val eval(const Expr& e, const State& s) {
  if (const Val* v = e.as_value()) return *v;
  return s.lookup(*e.as_var()).value_or(Val::null());
}

bool is_terminal(const SemConfig& cfg) {
  return !cfg.synt.before && cfg.synt.loc.path.is_top();
}

std::optional<Step> sem_step(const SemConfig& cfg) {
  const StmtLocation& loc = cfg.synt.loc;
  const State& s = cfg.state;

  if (!cfg.synt.before) {
    if (loc.path.is_top()) return std::nullopt;
    return Step{{next_loc(loc.focus, loc.path), s}, Rule::False};
  }

  return std::visit(
      [&](const auto& st) -> std::optional<Step> {
        using T = std::decay_t<decltype(st)>;
        if constexpr (std::is_same_v<T, EmptyStmt>) {
          return Step{{{loc, false}, s}, Rule::Empty};
        } else if constexpr (std::is_same_v<T, AssignStmt>) {
          return Step{{{loc, false}, s.with(st.var, st.value)}, Rule::Assign};
        } else if constexpr (std::is_same_v<T, SeqStmt>) {
          return Step{{{{st.first, StmtPath::seq_left(loc.path, st.second)}, true}, s}, Rule::Seq};
        } else if constexpr (std::is_same_v<T, CondStmt>) {
          const auto b = eval(st.cond, s).as_bool();
          if (!b) return std::nullopt;
          if (*b) {
            return Step{{{{st.then_branch, StmtPath::cond_left(st.cond, loc.path, st.else_branch)}, true}, s},
                        Rule::CondTrue};
          }
          return Step{{{{st.else_branch, StmtPath::cond_right(st.cond, st.then_branch, loc.path)}, true}, s},
                      Rule::CondFalse};
        } else {
          const auto b = eval(st.cond, s).as_bool();
          if (!b) return std::nullopt;
          if (*b) {
            return Step{{{{st.body, StmtPath::while_body(st.cond, loc.path)}, true}, s}, Rule::WhileTrue};
          }
          return Step{{{loc, false}, s}, Rule::WhileFalse};
        }
      },
      loc.focus.node().v);
}

std::string stuck_reason(const SemConfig& cfg) {
  if (is_terminal(cfg) || sem_step(cfg)) return {};
  const Stmt& f = cfg.synt.loc.focus;
  if (const auto* c = f.as<CondStmt>()) {
    return "condition '" + print_expr(c->cond) + "' of if evaluates to null";
  }
  if (const auto* w = f.as<WhileStmt>()) {
    return "condition '" + print_expr(w->cond) + "' of while evaluates to null";
  }
  return "no rule applies";
}

SemConfig initial_config(const Stmt& c, const State& s0) { return {{{c, StmtPath::top()}, true}, s0}; }

Trace run_trace(const Stmt& c, const State& s0, std::size_t max_steps) {
  if (max_steps == 0) throw std::invalid_argument("max_steps must be at least 1");
  Trace t;
  t.configs.push_back(initial_config(c, s0));
  while (true) {
    const SemConfig& cur = t.configs.back();
    if (is_terminal(cur)) {
      t.status = TraceStatus::Terminated;
      return t;
    }
    if (t.rules.size() == max_steps) {
      t.status = TraceStatus::StepLimit;
      return t;
    }
    auto step = sem_step(cur);
    if (!step) {
      t.status = TraceStatus::Stuck;
      t.stuck_reason = stuck_reason(cur);
      return t;
    }
    t.rules.push_back(step->rule);
    t.configs.push_back(std::move(step->next));
  }
}

}  // namespace zipaut
