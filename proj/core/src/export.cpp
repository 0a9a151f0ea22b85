#include "zipaut/export.hpp"

#include <json.hpp>
#include <sstream>

#include "zipaut/parser.hpp"

namespace zipaut {

using nlohmann::ordered_json;

NumberedAutomaton rename_nodes(const Automaton<SyntConfig>& aut) {
  return rename_nodes(aut, [](const SyntConfig& n) { return render_config(n); });
}

namespace {

ordered_json action_json(const Action& a) {
  ordered_json j;
  if (const Assignment* as = a.assignment()) {
    j["kind"] = "assign";
    j["var"] = as->var.str();
    j["val"] = std::string(as->value.literal());
  } else {
    j["kind"] = "none";
  }
  return j;
}

template <class N>
ordered_json edges_json(const std::vector<Edge<N>>& edges, auto id_of) {
  ordered_json out = ordered_json::array();
  for (const auto& e : edges) {
    ordered_json j;
    j["source"] = id_of(e.source);
    j["action"] = action_json(e.action);
    j["dest"] = id_of(e.dest);
    out.push_back(std::move(j));
  }
  return out;
}

std::string finish(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

void dot_edges(std::ostringstream& os, const std::vector<Edge<int>>& edges) {
  for (const auto& e : edges) {
    os << "  n" << e.source << " -> n" << e.dest << " [label=\"" << dot_escape(render_action(e.action))
       << "\"];\n";
  }
}

void dot_init(std::ostringstream& os, int init) {
  os << "  start [shape=point];\n  start -> n" << init << ";\n}\n";
}

Val parse_literal(std::string_view s) {
  if (s == "true") return Val::boolean(true);
  if (s == "false") return Val::boolean(false);
  if (s == "null") return Val::null();
  throw FormatError("expected true, false or null, got '" + std::string(s) + "'");
}

int read_id(const nlohmann::json& j, const char* what) {
  if (!j.is_number_integer()) throw FormatError(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

std::string program_automaton_json(const Automaton<SyntConfig>& aut, bool with_legend) {
  const auto numbered = rename_nodes(aut);
  ordered_json j;
  j["nodes"] = ordered_json::array();
  for (std::size_t i = 0; i < aut.nodes.size(); ++i) {
    const auto& n = aut.nodes[i];
    ordered_json node;
    node["id"] = static_cast<int>(i);
    node["path"] = n.loc.path.render();
    node["flag"] = n.before;
    node["focus"] = print_program(n.loc.focus);
    j["nodes"].push_back(std::move(node));
  }
  j["edges"] = edges_json(numbered.automaton.edges, [](int id) { return id; });
  j["init"] = numbered.automaton.init;
  if (with_legend) j["legend"] = numbered.legend;
  return finish(j);
}

std::string int_automaton_json(const Automaton<int>& aut, const std::vector<std::string>* legend) {
  ordered_json j;
  j["nodes"] = ordered_json::array();
  for (int n : aut.nodes) {
    ordered_json node;
    node["id"] = n;
    if (legend && n >= 0 && static_cast<std::size_t>(n) < legend->size()) {
      node["label"] = (*legend)[static_cast<std::size_t>(n)];
    }
    j["nodes"].push_back(std::move(node));
  }
  j["edges"] = edges_json(aut.edges, [](int id) { return id; });
  j["init"] = aut.init;
  return finish(j);
}

std::string render_node_set(const NodeSet<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.members().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.members()[i]);
  }
  return out + "}";
}

namespace {

// Position of the first occurrence of each closed node; -1 if absent.
std::map<NodeSet<int>, int> closed_ids(const Automaton<NodeSet<int>>& aut) {
  std::map<NodeSet<int>, int> ids;
  for (std::size_t i = 0; i < aut.nodes.size(); ++i) ids.try_emplace(aut.nodes[i], static_cast<int>(i));
  return ids;
}

}  // namespace

std::string closed_automaton_json(const Automaton<NodeSet<int>>& aut,
                                  const std::vector<std::string>* base_legend) {
  const auto ids = closed_ids(aut);
  auto id_of = [&ids](const NodeSet<int>& n) {
    auto it = ids.find(n);
    return it == ids.end() ? -1 : it->second;
  };
  ordered_json j;
  j["nodes"] = ordered_json::array();
  for (std::size_t i = 0; i < aut.nodes.size(); ++i) {
    ordered_json node;
    node["id"] = static_cast<int>(i);
    node["label"] = render_node_set(aut.nodes[i]);
    node["members"] = aut.nodes[i].members();
    j["nodes"].push_back(std::move(node));
  }
  j["edges"] = edges_json(aut.edges, id_of);
  j["init"] = id_of(aut.init);
  if (base_legend) j["legend"] = *base_legend;
  return finish(j);
}

Automaton<int> parse_automaton_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw FormatError("automaton must be a JSON object");
  for (const char* key : {"nodes", "edges", "init"}) {
    if (!j.contains(key)) throw FormatError(std::string("missing \"") + key + "\"");
  }
  if (!j["nodes"].is_array() || !j["edges"].is_array()) {
    throw FormatError("\"nodes\" and \"edges\" must be arrays");
  }

  Automaton<int> aut;
  for (const auto& n : j["nodes"]) {
    if (n.is_object()) {
      if (!n.contains("id")) throw FormatError("node without \"id\"");
      aut.nodes.push_back(read_id(n["id"], "node id"));
    } else {
      aut.nodes.push_back(read_id(n, "node id"));
    }
  }
  for (const auto& e : j["edges"]) {
    if (!e.is_object() || !e.contains("source") || !e.contains("dest") || !e.contains("action")) {
      throw FormatError("edge needs \"source\", \"action\" and \"dest\"");
    }
    const auto& a = e["action"];
    if (!a.is_object() || !a.contains("kind") || !a["kind"].is_string()) {
      throw FormatError("action needs a string \"kind\"");
    }
    Action act;
    const auto kind = a["kind"].get<std::string>();
    if (kind == "assign") {
      if (!a.contains("var") || !a["var"].is_string() || !a.contains("val") || !a["val"].is_string()) {
        throw FormatError("assign action needs string \"var\" and \"val\"");
      }
      try {
        act = Action::assign(VName(a["var"].get<std::string>()), parse_literal(a["val"].get<std::string>()));
      } catch (const std::invalid_argument& ex) {
        throw FormatError(ex.what());
      }
    } else if (kind != "none") {
      throw FormatError("unknown action kind '" + kind + "'");
    }
    aut.edges.push_back({read_id(e["source"], "edge source"), act, read_id(e["dest"], "edge dest")});
  }
  aut.init = read_id(j["init"], "init");
  return aut;
}

std::string program_automaton_dot(const Automaton<SyntConfig>& aut, bool numbered) {
  const auto renamed = rename_nodes(aut);
  std::ostringstream os;
  os << "digraph automaton {\n";
  for (std::size_t i = 0; i < renamed.legend.size(); ++i) {
    os << "  n" << i << " [label=\"" << (numbered ? std::to_string(i) : dot_escape(renamed.legend[i]))
       << "\"];";
    if (numbered) os << "  // " << renamed.legend[i];
    os << "\n";
  }
  dot_edges(os, renamed.automaton.edges);
  dot_init(os, renamed.automaton.init);
  return os.str();
}

std::string int_automaton_dot(const Automaton<int>& aut) {
  std::set<int> seen(aut.nodes.begin(), aut.nodes.end());
  std::ostringstream os;
  os << "digraph automaton {\n";
  for (int n : seen) os << "  n" << n << " [label=\"" << n << "\"];\n";
  dot_edges(os, aut.edges);
  dot_init(os, aut.init);
  return os.str();
}

std::string closed_automaton_dot(const Automaton<NodeSet<int>>& aut) {
  const auto ids = closed_ids(aut);
  auto id_of = [&ids](const NodeSet<int>& n) {
    auto it = ids.find(n);
    return it == ids.end() ? -1 : it->second;
  };
  std::ostringstream os;
  os << "digraph automaton {\n";
  for (const auto& [n, id] : ids) os << "  n" << id << " [label=\"" << render_node_set(n) << "\"];\n";
  std::vector<Edge<int>> edges;
  for (const auto& e : aut.edges) edges.push_back({id_of(e.source), e.action, id_of(e.dest)});
  dot_edges(os, edges);
  dot_init(os, id_of(aut.init));
  return os.str();
}

namespace {

ordered_json state_json(const State& s) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : s.bindings()) j[k.str()] = std::string(v.literal());
  return j;
}

}  // namespace

std::string trace_to_json(const Trace& t) {
  std::string out = "[\n";
  for (std::size_t i = 0; i < t.configs.size(); ++i) {
    const SemConfig& c = t.configs[i];
    ordered_json j;
    j["step"] = i;
    j["rule"] = i == 0 ? std::string("init") : std::string(rule_name(t.rules[i - 1]));
    j["path"] = c.synt.loc.path.render();
    j["flag"] = c.synt.before;
    j["state"] = state_json(c.state);
    out += "  " + j.dump();
    out += i + 1 < t.configs.size() ? ",\n" : "\n";
  }
  return out + "]\n";
}

std::string trace_to_text(const Trace& t) {
  std::string out;
  for (std::size_t i = 0; i < t.configs.size(); ++i) {
    const SemConfig& c = t.configs[i];
    out += std::to_string(i) + ": ";
    out += i == 0 ? std::string("init") : std::string(rule_name(t.rules[i - 1]));
    out += " | ";
    out += flag_arrow(c.synt.before);
    out += print_program(c.synt.loc.focus);
    out += " @ " + c.synt.loc.path.render();
    out += " | " + render_state(c.state) + "\n";
  }
  return out;
}

State parse_state(std::string_view spec) {
  State s;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t comma = spec.find(',', pos);
    if (comma == std::string_view::npos) comma = spec.size();
    const std::string_view item = spec.substr(pos, comma - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw FormatError("state entry '" + std::string(item) + "' is not of the form name=value");
    }
    auto trim = [](std::string_view v) {
      while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
      while (!v.empty() && v.back() == ' ') v.remove_suffix(1);
      return v;
    };
    const std::string name(trim(item.substr(0, eq)));
    if (!VName::is_identifier(name) || VName::is_keyword(name)) {
      throw FormatError("'" + name + "' is not a variable name");
    }
    s.set(VName(name), parse_literal(trim(item.substr(eq + 1))));
    pos = comma + 1;
  }
  return s;
}

}  // namespace zipaut
