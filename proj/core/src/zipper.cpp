#include "zipaut/zipper.hpp"

namespace zipaut {

namespace {

const std::shared_ptr<const PathNode>& top_node() {
  static const auto node = std::make_shared<const PathNode>(PathNode{PTop{}, "@top", 0});
  return node;
}

std::shared_ptr<const PathNode> make_frame(
    std::variant<PTop, PSeqLeft, PSeqRight, PCondLeft, PCondRight, PWhile> v,
    const StmtPath& up, std::string_view segment) {
  std::string render =
      up.is_top() ? std::string(segment) : up.render() + "/" + std::string(segment);
  return std::make_shared<const PathNode>(PathNode{std::move(v), std::move(render), up.depth() + 1});
}

}  // namespace

StmtPath::StmtPath() : node_(top_node()) {}

StmtPath StmtPath::seq_left(StmtPath up, Stmt second) {
  auto n = make_frame(PSeqLeft{up, std::move(second)}, up, "seqL");
  return StmtPath(std::move(n));
}

StmtPath StmtPath::seq_right(Stmt first, StmtPath up) {
  auto n = make_frame(PSeqRight{std::move(first), up}, up, "seqR");
  return StmtPath(std::move(n));
}

StmtPath StmtPath::cond_left(Expr cond, StmtPath up, Stmt else_branch) {
  auto n = make_frame(PCondLeft{std::move(cond), up, std::move(else_branch)}, up, "condT");
  return StmtPath(std::move(n));
}

StmtPath StmtPath::cond_right(Expr cond, Stmt then_branch, StmtPath up) {
  auto n = make_frame(PCondRight{std::move(cond), std::move(then_branch), up}, up, "condF");
  return StmtPath(std::move(n));
}

StmtPath StmtPath::while_body(Expr cond, StmtPath up) {
  auto n = make_frame(PWhile{std::move(cond), up}, up, "body");
  return StmtPath(std::move(n));
}

bool StmtPath::is_top() const { return std::holds_alternative<PTop>(node_->v); }

const std::string& StmtPath::render() const { return node_->render; }

std::size_t StmtPath::depth() const { return node_->depth; }

bool operator==(const StmtPath& a, const StmtPath& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->depth != b.node_->depth || a.node_->render != b.node_->render) return false;
  return a.node_->v == b.node_->v;
}

std::strong_ordering operator<=>(const StmtPath& a, const StmtPath& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.render() <=> b.render(); c != 0) return c;
  // Same shape; compare the sibling subtrees frame by frame.
  const auto& va = a.node_->v;
  const auto& vb = b.node_->v;
  return std::visit(
      [&vb](const auto& x) -> std::strong_ordering {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(vb);
        if constexpr (std::is_same_v<T, PTop>) {
          return std::strong_ordering::equal;
        } else if constexpr (std::is_same_v<T, PSeqLeft>) {
          if (auto c = x.second <=> y.second; c != 0) return c;
          return x.up <=> y.up;
        } else if constexpr (std::is_same_v<T, PSeqRight>) {
          if (auto c = x.first <=> y.first; c != 0) return c;
          return x.up <=> y.up;
        } else if constexpr (std::is_same_v<T, PCondLeft>) {
          if (auto c = x.cond <=> y.cond; c != 0) return c;
          if (auto c = x.else_branch <=> y.else_branch; c != 0) return c;
          return x.up <=> y.up;
        } else if constexpr (std::is_same_v<T, PCondRight>) {
          if (auto c = x.cond <=> y.cond; c != 0) return c;
          if (auto c = x.then_branch <=> y.then_branch; c != 0) return c;
          return x.up <=> y.up;
        } else {
          if (auto c = x.cond <=> y.cond; c != 0) return c;
          return x.up <=> y.up;
        }
      },
      va);
}

bool operator<(const SyntConfig& a, const SyntConfig& b) {
  if (auto c = a.loc.path.render() <=> b.loc.path.render(); c != 0) return c < 0;
  if (a.before != b.before) return !a.before;
  if (auto c = a.loc.focus <=> b.loc.focus; c != 0) return c < 0;
  return (a.loc.path <=> b.loc.path) < 0;
}

Stmt reconstruct(const Stmt& c, const StmtPath& sp) {
  Stmt cur = c;
  StmtPath p = sp;
  while (!p.is_top()) {
    const StmtPath frame = p;
    std::visit(
        [&](const auto& f) {
          using T = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<T, PSeqLeft>) {
            cur = Stmt::seq(cur, f.second);
          } else if constexpr (std::is_same_v<T, PSeqRight>) {
            cur = Stmt::seq(f.first, cur);
          } else if constexpr (std::is_same_v<T, PCondLeft>) {
            cur = Stmt::cond(f.cond, cur, f.else_branch);
          } else if constexpr (std::is_same_v<T, PCondRight>) {
            cur = Stmt::cond(f.cond, f.then_branch, cur);
          } else if constexpr (std::is_same_v<T, PWhile>) {
            cur = Stmt::while_loop(f.cond, cur);
          }
          if constexpr (!std::is_same_v<T, PTop>) {
            p = f.up;
          }
        },
        frame.node().v);
  }
  return cur;
}

Stmt reconstruct_loc(const StmtLocation& loc) { return reconstruct(loc.focus, loc.path); }

namespace {

void collect_locations(const Stmt& c, const StmtPath& sp, std::vector<StmtLocation>& out) {
  out.push_back({c, sp});
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SeqStmt>) {
          collect_locations(s.first, StmtPath::seq_left(sp, s.second), out);
          collect_locations(s.second, StmtPath::seq_right(s.first, sp), out);
        } else if constexpr (std::is_same_v<T, CondStmt>) {
          collect_locations(s.then_branch, StmtPath::cond_left(s.cond, sp, s.else_branch), out);
          collect_locations(s.else_branch, StmtPath::cond_right(s.cond, s.then_branch, sp), out);
        } else if constexpr (std::is_same_v<T, WhileStmt>) {
          collect_locations(s.body, StmtPath::while_body(s.cond, sp), out);
        }
      },
      c.node().v);
}

}  // namespace

std::vector<StmtLocation> all_locations(const Stmt& c, const StmtPath& sp) {
  std::vector<StmtLocation> out;
  collect_locations(c, sp, out);
  return out;
}

SyntConfig next_loc(const Stmt& c, const StmtPath& sp) {
  return std::visit(
      [&](const auto& f) -> SyntConfig {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, PTop>) {
          return {{c, sp}, false};
        } else if constexpr (std::is_same_v<T, PSeqLeft>) {
          return {{f.second, StmtPath::seq_right(c, f.up)}, true};
        } else if constexpr (std::is_same_v<T, PSeqRight>) {
          return {{Stmt::seq(f.first, c), f.up}, false};
        } else if constexpr (std::is_same_v<T, PCondLeft>) {
          return {{Stmt::cond(f.cond, c, f.else_branch), f.up}, false};
        } else if constexpr (std::is_same_v<T, PCondRight>) {
          return {{Stmt::cond(f.cond, f.then_branch, c), f.up}, false};
        } else {
          return {{Stmt::while_loop(f.cond, c), f.up}, true};
        }
      },
      sp.node().v);
}

std::vector<SyntConfig> nodes_of_stmt_locations(const std::vector<StmtLocation>& locs) {
  std::vector<SyntConfig> out;
  out.reserve(2 * locs.size());
  for (const auto& loc : locs) {
    out.push_back({loc, true});
    out.push_back({loc, false});
  }
  return out;
}

std::string_view flag_arrow(bool before) { return before ? "↓" : "↑"; }

std::string render_config(const SyntConfig& cfg) {
  return cfg.loc.path.render() + std::string(flag_arrow(cfg.before));
}

}  // namespace zipaut
