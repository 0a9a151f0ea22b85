#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zipaut/ast.hpp"
#include "zipaut/zipper.hpp"

namespace zipaut {

/// Variable store. An absent key means "never assigned", which is distinct
/// from a key bound to Null.
class State {
 public:
  State() = default;
  State(std::initializer_list<std::pair<const VName, Val>> init) : bindings_(init) {}

  std::optional<Val> lookup(const VName& x) const;
  State with(const VName& x, Val v) const;
  void set(const VName& x, Val v) { bindings_.insert_or_assign(x, v); }

  const std::map<VName, Val>& bindings() const { return bindings_; }
  bool empty() const { return bindings_.empty(); }

  friend bool operator==(const State&, const State&) = default;

 private:
  std::map<VName, Val> bindings_;
};

/// `{x=true, y=null}`.
std::string render_state(const State& s);

struct SemConfig {
  SyntConfig synt;
  State state;

  friend bool operator==(const SemConfig&, const SemConfig&) = default;
};

enum class Rule { Empty, Assign, Seq, CondTrue, CondFalse, WhileTrue, WhileFalse, False };

/// `SEmpty`, `SAssign`, ... as named in the rule table.
std::string_view rule_name(Rule r);

Val eval(const Expr& e, const State& s);

struct Step {
  SemConfig next;
  Rule rule;
};

/// One small step. Empty when the configuration is terminal or stuck.
std::optional<Step> sem_step(const SemConfig& cfg);

bool is_terminal(const SemConfig& cfg);

enum class TraceStatus { Terminated, Stuck, StepLimit };

std::string_view status_name(TraceStatus s);

/// configs[i] --rules[i]--> configs[i + 1].
struct Trace {
  std::vector<SemConfig> configs;
  std::vector<Rule> rules;
  TraceStatus status = TraceStatus::StepLimit;
  std::string stuck_reason;

  std::size_t step_count() const { return rules.size(); }
};

SemConfig initial_config(const Stmt& c, const State& s0);

/// Throws std::invalid_argument if `max_steps` is zero.
Trace run_trace(const Stmt& c, const State& s0, std::size_t max_steps);

/// Why `cfg` has no successor; empty if it has one or is terminal.
std::string stuck_reason(const SemConfig& cfg);

}  // namespace zipaut
