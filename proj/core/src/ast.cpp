#include "zipaut/ast.hpp"

#include <array>
#include <cctype>
#include <stdexcept>

namespace zipaut {

std::string_view Val::literal() const {
  if (is_null()) return "null";
  return *value_ ? "true" : "false";
}

VName::VName(std::string name) : name_(std::move(name)) {
  if (!is_identifier(name_) || is_keyword(name_)) {
    throw std::invalid_argument("invalid variable name '" + name_ + "'");
  }
}

bool VName::is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  for (char ch : s) {
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  }
  return true;
}

bool VName::is_keyword(std::string_view s) {
  static constexpr std::array<std::string_view, 7> kKeywords = {
      "skip", "if", "else", "while", "true", "false", "null"};
  for (auto k : kKeywords) {
    if (s == k) return true;
  }
  return false;
}

std::strong_ordering operator<=>(const Expr& a, const Expr& b) {
  if (auto c = a.e_.index() <=> b.e_.index(); c != 0) return c;
  if (const Val* v = a.as_value()) return *v <=> *b.as_value();
  return *a.as_var() <=> *b.as_var();
}

namespace {

const std::shared_ptr<const StmtNode>& empty_node() {
  static const auto node = std::make_shared<const StmtNode>(StmtNode{EmptyStmt{}});
  return node;
}

}  // namespace

Stmt::Stmt() : node_(empty_node()) {}

Stmt Stmt::empty() { return Stmt(); }

Stmt Stmt::assign(VName var, Val value) {
  return Stmt(std::make_shared<const StmtNode>(StmtNode{AssignStmt{std::move(var), value}}));
}

Stmt Stmt::seq(Stmt first, Stmt second) {
  return Stmt(std::make_shared<const StmtNode>(
      StmtNode{SeqStmt{std::move(first), std::move(second)}}));
}

Stmt Stmt::cond(Expr cond, Stmt then_branch, Stmt else_branch) {
  return Stmt(std::make_shared<const StmtNode>(
      StmtNode{CondStmt{std::move(cond), std::move(then_branch), std::move(else_branch)}}));
}

Stmt Stmt::while_loop(Expr cond, Stmt body) {
  return Stmt(std::make_shared<const StmtNode>(StmtNode{WhileStmt{std::move(cond), std::move(body)}}));
}

bool operator==(const Stmt& a, const Stmt& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->v == b.node_->v;
}

std::strong_ordering operator<=>(const Stmt& a, const Stmt& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& va = a.node_->v;
  const auto& vb = b.node_->v;
  if (auto c = va.index() <=> vb.index(); c != 0) return c;
  return std::visit(
      [&vb](const auto& x) -> std::strong_ordering {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(vb);
        if constexpr (std::is_same_v<T, EmptyStmt>) {
          return std::strong_ordering::equal;
        } else if constexpr (std::is_same_v<T, AssignStmt>) {
          if (auto c = x.var <=> y.var; c != 0) return c;
          return x.value <=> y.value;
        } else if constexpr (std::is_same_v<T, SeqStmt>) {
          if (auto c = x.first <=> y.first; c != 0) return c;
          return x.second <=> y.second;
        } else if constexpr (std::is_same_v<T, CondStmt>) {
          if (auto c = x.cond <=> y.cond; c != 0) return c;
          if (auto c = x.then_branch <=> y.then_branch; c != 0) return c;
          return x.else_branch <=> y.else_branch;
        } else {
          if (auto c = x.cond <=> y.cond; c != 0) return c;
          return x.body <=> y.body;
        }
      },
      va);
}

std::size_t subterm_count(const Stmt& c) {
  return std::visit(
      [](const auto& s) -> std::size_t {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SeqStmt>) {
          return 1 + subterm_count(s.first) + subterm_count(s.second);
        } else if constexpr (std::is_same_v<T, CondStmt>) {
          return 1 + subterm_count(s.then_branch) + subterm_count(s.else_branch);
        } else if constexpr (std::is_same_v<T, WhileStmt>) {
          return 1 + subterm_count(s.body);
        } else {
          return 1;
        }
      },
      c.node().v);
}

std::string dump_expr(const Expr& e) {
  if (const Val* v = e.as_value()) return "Val(" + std::string(v->literal()) + ")";
  return "Var(" + e.as_var()->str() + ")";
}

std::string dump_ast(const Stmt& c) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, EmptyStmt>) {
          return "Empty";
        } else if constexpr (std::is_same_v<T, AssignStmt>) {
          return "Assign(" + s.var.str() + ", " + std::string(s.value.literal()) + ")";
        } else if constexpr (std::is_same_v<T, SeqStmt>) {
          return "Seq(" + dump_ast(s.first) + ", " + dump_ast(s.second) + ")";
        } else if constexpr (std::is_same_v<T, CondStmt>) {
          return "Cond(" + dump_expr(s.cond) + ", " + dump_ast(s.then_branch) + ", " +
                 dump_ast(s.else_branch) + ")";
        } else {
          return "While(" + dump_expr(s.cond) + ", " + dump_ast(s.body) + ")";
        }
      },
      c.node().v);
}

}  // namespace zipaut
