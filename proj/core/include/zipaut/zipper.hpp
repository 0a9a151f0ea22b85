#pragma once

#include <compare>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "zipaut/ast.hpp"

namespace zipaut {

struct PathNode;

/// Inverted context of a focused statement: the innermost frame first,
/// terminating at the top. Immutable and structurally shared.
class StmtPath {
 public:
  StmtPath();  // PTop

  static StmtPath top() { return StmtPath(); }
  static StmtPath seq_left(StmtPath up, Stmt second);
  static StmtPath seq_right(Stmt first, StmtPath up);
  static StmtPath cond_left(Expr cond, StmtPath up, Stmt else_branch);
  static StmtPath cond_right(Expr cond, Stmt then_branch, StmtPath up);
  static StmtPath while_body(Expr cond, StmtPath up);

  bool is_top() const;
  const PathNode& node() const { return *node_; }

  template <class T>
  const T* as() const;

  /// Root-to-focus segments joined by `/`; `@top` for the empty path.
  const std::string& render() const;
  std::size_t depth() const;

  friend bool operator==(const StmtPath& a, const StmtPath& b);
  friend std::strong_ordering operator<=>(const StmtPath& a, const StmtPath& b);

 private:
  explicit StmtPath(std::shared_ptr<const PathNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const PathNode> node_;
};

struct PTop {
  friend bool operator==(const PTop&, const PTop&) = default;
};
struct PSeqLeft {
  StmtPath up;
  Stmt second;
  friend bool operator==(const PSeqLeft&, const PSeqLeft&) = default;
};
struct PSeqRight {
  Stmt first;
  StmtPath up;
  friend bool operator==(const PSeqRight&, const PSeqRight&) = default;
};
struct PCondLeft {
  Expr cond;
  StmtPath up;
  Stmt else_branch;
  friend bool operator==(const PCondLeft&, const PCondLeft&) = default;
};
struct PCondRight {
  Expr cond;
  Stmt then_branch;
  StmtPath up;
  friend bool operator==(const PCondRight&, const PCondRight&) = default;
};
struct PWhile {
  Expr cond;
  StmtPath up;
  friend bool operator==(const PWhile&, const PWhile&) = default;
};

struct PathNode {
  std::variant<PTop, PSeqLeft, PSeqRight, PCondLeft, PCondRight, PWhile> v;
  std::string render;
  std::size_t depth = 0;
};

template <class T>
const T* StmtPath::as() const {
  return std::get_if<T>(&node_->v);
}

struct StmtLocation {
  Stmt focus;
  StmtPath path;

  friend bool operator==(const StmtLocation&, const StmtLocation&) = default;
};

/// A location with the execution marker: `before` is true ahead of executing
/// the focus and false once it has finished.
struct SyntConfig {
  StmtLocation loc;
  bool before = true;

  friend bool operator==(const SyntConfig&, const SyntConfig&) = default;
};

/// Canonical order: path rendering, then `after < before`, then structure.
bool operator<(const SyntConfig& a, const SyntConfig& b);

Stmt reconstruct(const Stmt& c, const StmtPath& sp);
Stmt reconstruct_loc(const StmtLocation& loc);

/// Every location of `c` under context `sp`, pre-order (self, then left to right).
std::vector<StmtLocation> all_locations(const Stmt& c, const StmtPath& sp);

/// Where control goes once `c` (at context `sp`) has finished.
SyntConfig next_loc(const Stmt& c, const StmtPath& sp);

/// Pairs each location with both flags, `before` first.
std::vector<SyntConfig> nodes_of_stmt_locations(const std::vector<StmtLocation>& locs);

/// `<path>↓` or `<path>↑`.
std::string render_config(const SyntConfig& cfg);
std::string_view flag_arrow(bool before);

}  // namespace zipaut
