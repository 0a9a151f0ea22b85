#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "zipaut/automaton.hpp"
#include "zipaut/export.hpp"
#include "zipaut/parser.hpp"
#include "zipaut/semantics.hpp"
#include "zipaut/tauclose.hpp"

namespace zipaut::cli {

namespace {

struct Failure {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kIoError, "cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Stmt load_program(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_program(text);
  } catch (const ParseError& e) {
    throw Failure{kUsage, path + ":" + e.what()};
  } catch (const std::invalid_argument& e) {
    throw Failure{kUsage, path + ": " + e.what()};
  }
}

Automaton<int> load_automaton(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_automaton_json(text);
  } catch (const FormatError& e) {
    throw Failure{kUsage, path + ": " + e.what()};
  }
}

State load_state(const std::string& spec) {
  try {
    return parse_state(spec);
  } catch (const FormatError& e) {
    throw Failure{kUsage, std::string("--state: ") + e.what()};
  }
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f || !(f << text)) throw Failure{kIoError, "cannot write '" + out_path + "'"};
}

struct Options {
  std::string file;
  std::string automaton_file;
  std::string state;
  std::size_t max_steps = 10000;
  std::string format = "json";
  std::string trace_format = "text";
  std::string output;
  bool numbered = false;
  bool ast = false;
};

// A program file or an automaton file, but exactly one of them.
struct Input {
  std::optional<Stmt> program;
  std::optional<Automaton<int>> automaton;
  std::vector<std::string> legend;
};

Input load_input(const Options& o) {
  if (o.file.empty() == o.automaton_file.empty()) {
    throw Failure{kUsage, "give either a program FILE or --automaton FILE"};
  }
  Input in;
  if (!o.file.empty()) {
    in.program = load_program(o.file);
    auto numbered = rename_nodes(stmt_to_ta(*in.program));
    in.automaton = std::move(numbered.automaton);
    in.legend = std::move(numbered.legend);
  } else {
    in.automaton = load_automaton(o.automaton_file);
  }
  return in;
}

int cmd_parse(const Options& o, std::ostream& out) {
  const Stmt c = load_program(o.file);
  out << (o.ast ? dump_ast(c) : print_program(c)) << "\n";
  return kOk;
}

int cmd_run(const Options& o, std::ostream& out, std::ostream& err) {
  const Stmt c = load_program(o.file);
  const State s0 = load_state(o.state);
  const Trace t = run_trace(c, s0, o.max_steps);
  std::string status(status_name(t.status));
  if (t.status == TraceStatus::Stuck) status += ": " + t.stuck_reason;
  if (o.trace_format == "json") {
    emit(trace_to_json(t), o.output, out);
    err << "status: " << status << "\n";
  } else {
    emit(trace_to_text(t) + "status: " + status + "\n", o.output, out);
  }
  switch (t.status) {
    case TraceStatus::Terminated: return kOk;
    case TraceStatus::Stuck: return kStuck;
    case TraceStatus::StepLimit: return kStepLimit;
  }
  return kOk;
}

int cmd_compile(const Options& o, std::ostream& out) {
  const auto aut = stmt_to_ta(load_program(o.file));
  emit(o.format == "dot" ? program_automaton_dot(aut, o.numbered) : program_automaton_json(aut, o.numbered),
       o.output, out);
  return kOk;
}

int cmd_tauclose(const Options& o, std::ostream& out, std::ostream& err) {
  const Input in = load_input(o);
  if (!regular_ta(*in.automaton)) {
    err << "warning: input automaton is not regular (an edge endpoint or init is not a node)\n";
  }
  const auto closed = tauclose_ta(*in.automaton);
  const auto* legend = in.legend.empty() ? nullptr : &in.legend;
  emit(o.format == "dot" ? closed_automaton_dot(closed) : closed_automaton_json(closed, legend), o.output,
       out);
  return kOk;
}

int verdict(std::ostream& out, const std::string& name, bool ok) {
  out << name << ": " << (ok ? "pass" : "FAIL") << "\n";
  return ok ? kOk : kViolation;
}

int check_sim(const Options& o, std::ostream& out) {
  if (o.file.empty()) throw Failure{kUsage, "check sim needs a program FILE"};
  const Stmt c = load_program(o.file);
  const auto report = check_simulation(c, load_state(o.state), o.max_steps);
  out << "steps: " << report.trace.step_count() << " (" << status_name(report.trace.status) << ")\n";
  out << "matched: " << report.matched_edges.size() << "\n";
  if (const auto& v = report.violation) {
    out << "violation at step " << v->step << " (" << rule_name(v->rule) << "): " << render_config(v->from.synt)
        << " " << render_state(v->from.state) << " -> " << render_config(v->to.synt) << " "
        << render_state(v->to.state) << " has no matching edge\n";
  }
  return verdict(out, "simulation", report.passed());
}

int check_closure(const Options& o, std::ostream& out) {
  if (o.file.empty()) throw Failure{kUsage, "check closure needs a program FILE"};
  const Stmt c = load_program(o.file);
  const auto aut = stmt_to_ta(c);
  const bool locs = !location_closure_violation(c).has_value();
  const bool nodes = nodes_closed(aut);
  const bool edges = edges_closed(aut);
  verdict(out, "location closure", locs);
  verdict(out, "nodes_closed", nodes);
  verdict(out, "edges_closed", edges);
  verdict(out, "synt_step_image_closed", nodes && edges);
  return locs && nodes && edges ? kOk : kViolation;
}

int check_regular(const Options& o, std::ostream& out) {
  const Input in = load_input(o);
  out << "nodes: " << in.automaton->nodes.size() << "\nedges: " << in.automaton->edges.size() << "\n";
  return verdict(out, "regular_ta", regular_ta(*in.automaton));
}

int check_tausim(const Options& o, std::ostream& out) {
  const Input in = load_input(o);
  const auto& m = *in.automaton;
  const auto report = check_tau_sim_witness(m, tauclose_ta(m));
  out << "regular_ta: " << (regular_ta(m) ? "yes" : "no") << "\n";
  out << "checked pairs: " << report.checked_pairs << "\n";
  if (const auto& v = report.first_violation) {
    using K = TauViolation<int>::Kind;
    out << "violation: ";
    switch (v->kind) {
      case K::NotClosure: out << "closed automaton differs from tauclose_ta"; break;
      case K::InitUnrelated: out << "initial nodes are not related"; break;
      case K::UnmatchedEdge:
        out << "edge " << v->edge->source << " -" << render_action(v->edge->action) << "-> " << v->edge->dest
            << " from pair (" << *v->base << ", " << render_node_set(*v->closed) << ") is not matched";
        break;
    }
    out << "\n";
  }
  return verdict(out, "tau simulation", report.result);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zipper semantics, program automata and tau-closure", "zipaut"};
  app.require_subcommand(1);
  Options o;

  auto* parse = app.add_subcommand("parse", "Parse a program and print its canonical form");
  parse->add_option("file", o.file, "Program file")->required();
  parse->add_flag("--ast", o.ast, "Print the abstract syntax tree instead");

  auto add_state = [&o](CLI::App* sc) {
    sc->add_option("--state", o.state, "Initial state, k=v[,k=v...] with v in true|false|null");
    sc->add_option("--max-steps", o.max_steps, "Step bound")->check(CLI::PositiveNumber);
  };

  auto* run_cmd = app.add_subcommand("run", "Execute a program with the small-step semantics");
  run_cmd->add_option("file", o.file, "Program file")->required();
  add_state(run_cmd);
  run_cmd->add_option("--trace-format", o.trace_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  run_cmd->add_option("-o", o.output, "Output file");

  auto* compile = app.add_subcommand("compile", "Translate a program to its automaton");
  compile->add_option("file", o.file, "Program file")->required();
  compile->add_option("--format", o.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  compile->add_flag("--numbered", o.numbered, "Number nodes and emit the legend");
  compile->add_option("-o", o.output, "Output file");

  auto* close = app.add_subcommand("tauclose", "Remove silent transitions");
  close->add_option("file", o.file, "Program file");
  close->add_option("--automaton", o.automaton_file, "Automaton JSON file");
  close->add_option("--format", o.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  close->add_option("-o", o.output, "Output file");

  auto* check = app.add_subcommand("check", "Check a property");
  check->require_subcommand(1);
  auto* sim = check->add_subcommand("sim", "Every semantic step is matched by an automaton edge");
  auto* closure = check->add_subcommand("closure", "The program automaton is closed under steps");
  auto* regular = check->add_subcommand("regular", "Edge endpoints and init are nodes");
  auto* tausim = check->add_subcommand("tausim", "Membership is a tau-simulation by the closure");
  for (auto* sc : {sim, closure, regular, tausim}) sc->add_option("file", o.file, "Program file");
  add_state(sim);
  for (auto* sc : {regular, tausim}) sc->add_option("--automaton", o.automaton_file, "Automaton JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*parse) return cmd_parse(o, out);
    if (*run_cmd) return cmd_run(o, out, err);
    if (*compile) return cmd_compile(o, out);
    if (*close) return cmd_tauclose(o, out, err);
    if (*sim) return check_sim(o, out);
    if (*closure) return check_closure(o, out);
    if (*regular) return check_regular(o, out);
    if (*tausim) return check_tausim(o, out);
  } catch (const Failure& f) {
    err << "zipaut: " << f.message << "\n";
    return f.code;
  }
  return kUsage;
}

}  // namespace zipaut::cli
