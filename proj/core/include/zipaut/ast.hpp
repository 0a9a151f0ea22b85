#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace zipaut {

/// A runtime value: a Boolean, or Null for the error/unassigned case.
class Val {
 public:
  Val() = default;  // Null

  static Val boolean(bool b) { return Val(b); }
  static Val null() { return Val(); }

  bool is_null() const { return !value_.has_value(); }
  std::optional<bool> as_bool() const { return value_; }

  /// `true`, `false` or `null`.
  std::string_view literal() const;

  friend bool operator==(const Val&, const Val&) = default;
  friend std::strong_ordering operator<=>(const Val& a, const Val& b) {
    // null < false < true
    auto rank = [](const Val& v) { return v.is_null() ? 0 : (*v.value_ ? 2 : 1); };
    return rank(a) <=> rank(b);
  }

 private:
  explicit Val(bool b) : value_(b) {}
  std::optional<bool> value_;
};

/// Variable name. Always a valid identifier that is not a keyword.
class VName {
 public:
  /// Throws std::invalid_argument when `name` is not an identifier.
  explicit VName(std::string name);

  const std::string& str() const { return name_; }

  static bool is_identifier(std::string_view s);
  static bool is_keyword(std::string_view s);

  friend bool operator==(const VName&, const VName&) = default;
  friend std::strong_ordering operator<=>(const VName&, const VName&) = default;

 private:
  std::string name_;
};

class Expr {
 public:
  static Expr value(Val v) { return Expr(v); }
  static Expr var(VName x) { return Expr(std::move(x)); }

  const Val* as_value() const { return std::get_if<Val>(&e_); }
  const VName* as_var() const { return std::get_if<VName>(&e_); }

  friend bool operator==(const Expr&, const Expr&) = default;
  friend std::strong_ordering operator<=>(const Expr& a, const Expr& b);

 private:
  explicit Expr(Val v) : e_(v) {}
  explicit Expr(VName x) : e_(std::move(x)) {}
  std::variant<Val, VName> e_;
};

struct StmtNode;

/// Immutable statement tree. Copies share structure.
class Stmt {
 public:
  Stmt();  // Empty

  static Stmt empty();
  static Stmt assign(VName var, Val value);
  static Stmt seq(Stmt first, Stmt second);
  static Stmt cond(Expr cond, Stmt then_branch, Stmt else_branch);
  static Stmt while_loop(Expr cond, Stmt body);

  const StmtNode& node() const { return *node_; }

  template <class T>
  const T* as() const;

  /// Structural equality; shared subtrees compare in O(1).
  friend bool operator==(const Stmt& a, const Stmt& b);
  friend std::strong_ordering operator<=>(const Stmt& a, const Stmt& b);

 private:
  explicit Stmt(std::shared_ptr<const StmtNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const StmtNode> node_;
};

struct EmptyStmt {
  friend bool operator==(const EmptyStmt&, const EmptyStmt&) = default;
};
struct AssignStmt {
  VName var;
  Val value;
  friend bool operator==(const AssignStmt&, const AssignStmt&) = default;
};
struct SeqStmt {
  Stmt first;
  Stmt second;
  friend bool operator==(const SeqStmt&, const SeqStmt&) = default;
};
struct CondStmt {
  Expr cond;
  Stmt then_branch;
  Stmt else_branch;
  friend bool operator==(const CondStmt&, const CondStmt&) = default;
};
struct WhileStmt {
  Expr cond;
  Stmt body;
  friend bool operator==(const WhileStmt&, const WhileStmt&) = default;
};

struct StmtNode {
  std::variant<EmptyStmt, AssignStmt, SeqStmt, CondStmt, WhileStmt> v;
};

template <class T>
const T* Stmt::as() const {
  return std::get_if<T>(&node_->v);
}

/// Number of statement nodes in the tree, counting `c` itself.
std::size_t subterm_count(const Stmt& c);

/// Structural dump, e.g. `While(Var(e), Seq(Assign(x, true), Empty))`.
std::string dump_ast(const Stmt& c);
std::string dump_expr(const Expr& e);

}  // namespace zipaut
