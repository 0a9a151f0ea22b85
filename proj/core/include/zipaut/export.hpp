#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zipaut/automaton.hpp"
#include "zipaut/semantics.hpp"
#include "zipaut/tauclose.hpp"

namespace zipaut {

/// Integer-labelled copy of an automaton plus the original rendering of each id.
struct NumberedAutomaton {
  Automaton<int> automaton;
  std::vector<std::string> legend;
};

/// Node i of the sequence becomes id i; a repeated node keeps the id of its
/// first occurrence. Edge endpoints (or init) missing from the node list get
/// fresh ids after the last node so that irregular input stays irregular.
template <class N, class Render>
NumberedAutomaton rename_nodes(const Automaton<N>& aut, Render render) {
  NumberedAutomaton out;
  std::map<N, int> ids;
  auto id_of = [&](const N& n) {
    auto [it, fresh] = ids.try_emplace(n, static_cast<int>(out.legend.size()));
    if (fresh) out.legend.push_back(render(n));
    return it->second;
  };
  for (std::size_t i = 0; i < aut.nodes.size(); ++i) {
    auto [it, fresh] = ids.try_emplace(aut.nodes[i], static_cast<int>(i));
    if (fresh) {
      out.legend.push_back(render(aut.nodes[i]));
    } else {
      out.legend.push_back(out.legend[static_cast<std::size_t>(it->second)]);
    }
    out.automaton.nodes.push_back(static_cast<int>(i));
  }
  for (const auto& e : aut.edges) out.automaton.edges.push_back({id_of(e.source), e.action, id_of(e.dest)});
  out.automaton.init = id_of(aut.init);
  return out;
}

NumberedAutomaton rename_nodes(const Automaton<SyntConfig>& aut);

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Automaton JSON:
//   { "nodes": [ {"id": <int>, ...}, ... ],
//     "edges": [ {"source": <id>, "action": {"kind": "none"} |
//                 {"kind": "assign", "var": <name>, "val": "true"|"false"|"null"},
//                 "dest": <id>}, ... ],
//     "init": <id> }
// Program automata add "path", "flag" and "focus" to each node. Closed
// automata add "members" (base ids) and "label".

std::string program_automaton_json(const Automaton<SyntConfig>& aut, bool with_legend = false);
std::string int_automaton_json(const Automaton<int>& aut,
                               const std::vector<std::string>* legend = nullptr);
std::string closed_automaton_json(const Automaton<NodeSet<int>>& aut,
                                  const std::vector<std::string>* base_legend = nullptr);

/// Reads the schema above; node entries may also be bare integers.
/// Throws FormatError on malformed input.
Automaton<int> parse_automaton_json(std::string_view text);

std::string program_automaton_dot(const Automaton<SyntConfig>& aut, bool numbered);
std::string int_automaton_dot(const Automaton<int>& aut);
std::string closed_automaton_dot(const Automaton<NodeSet<int>>& aut);

/// `{i,j,k}`.
std::string render_node_set(const NodeSet<int>& s);

/// One object per line: {"step","rule","path","flag","state"}. Step 0 is the
/// initial configuration with rule "init".
std::string trace_to_json(const Trace& t);

/// `<n>: <rule> | <arrow><focus> @ <path> | <state>` per configuration.
std::string trace_to_text(const Trace& t);

/// Parses `k=v[,k=v...]` with v in {true,false,null}. Throws FormatError.
State parse_state(std::string_view spec);

}  // namespace zipaut
