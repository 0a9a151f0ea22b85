#include "zipaut/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace zipaut {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { Ident, Keyword, Assign, Semi, LParen, RParen, LBrace, RBrace, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  std::size_t line = 1;
  std::size_t col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char ch = src[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    if (ch == '/' && i + 1 < src.size() && src[i + 1] == '/') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const std::size_t tl = line;
    const std::size_t tc = col;
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
        ++j;
      }
      std::string word(src.substr(i, j - i));
      const Tok kind = VName::is_keyword(word) ? Tok::Keyword : Tok::Ident;
      out.push_back({kind, std::move(word), tl, tc});
      advance(j - i);
      continue;
    }
    if (ch == ':' && i + 1 < src.size() && src[i + 1] == '=') {
      out.push_back({Tok::Assign, ":=", tl, tc});
      advance(2);
      continue;
    }
    std::optional<Tok> single;
    switch (ch) {
      case ';': single = Tok::Semi; break;
      case '(': single = Tok::LParen; break;
      case ')': single = Tok::RParen; break;
      case '{': single = Tok::LBrace; break;
      case '}': single = Tok::RBrace; break;
      default: break;
    }
    if (!single) {
      throw ParseError(tl, tc, std::string("unexpected character '") + ch + "'");
    }
    out.push_back({*single, std::string(1, ch), tl, tc});
    advance(1);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Stmt program() {
    Stmt s = stmt();
    if (peek().kind != Tok::End) fail("expected ';' or end of input");
    return s;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    throw ParseError(t.line, t.column, what + ", found " + describe(t));
  }

  bool at_keyword(std::string_view kw) const {
    return peek().kind == Tok::Keyword && peek().text == kw;
  }

  void expect(Tok kind, std::string_view what) {
    if (peek().kind != kind) fail("expected '" + std::string(what) + "'");
    ++pos_;
  }

  void expect_keyword(std::string_view kw) {
    if (!at_keyword(kw)) fail("expected '" + std::string(kw) + "'");
    ++pos_;
  }

  Stmt stmt() {
    Stmt first = basic();
    if (peek().kind == Tok::Semi) {
      ++pos_;
      return Stmt::seq(std::move(first), stmt());
    }
    return first;
  }

  Stmt block() {
    expect(Tok::LBrace, "{");
    Stmt s = stmt();
    expect(Tok::RBrace, "}");
    return s;
  }

  std::optional<Val> literal() {
    if (peek().kind != Tok::Keyword) return std::nullopt;
    const std::string& w = peek().text;
    std::optional<Val> v;
    if (w == "true") v = Val::boolean(true);
    if (w == "false") v = Val::boolean(false);
    if (w == "null") v = Val::null();
    if (v) ++pos_;
    return v;
  }

  Expr expr() {
    if (auto v = literal()) return Expr::value(*v);
    if (peek().kind == Tok::Ident) return Expr::var(VName(toks_[pos_++].text));
    fail("expected literal or variable");
  }

  Expr condition() {
    expect(Tok::LParen, "(");
    Expr e = expr();
    expect(Tok::RParen, ")");
    return e;
  }

  Stmt basic() {
    if (at_keyword("skip")) {
      ++pos_;
      return Stmt::empty();
    }
    if (at_keyword("if")) {
      ++pos_;
      Expr e = condition();
      Stmt then_branch = block();
      expect_keyword("else");
      Stmt else_branch = block();
      return Stmt::cond(std::move(e), std::move(then_branch), std::move(else_branch));
    }
    if (at_keyword("while")) {
      ++pos_;
      Expr e = condition();
      Stmt body = block();
      return Stmt::while_loop(std::move(e), std::move(body));
    }
    if (peek().kind == Tok::LBrace) return block();
    if (peek().kind == Tok::Ident) {
      VName x(toks_[pos_++].text);
      expect(Tok::Assign, ":=");
      auto v = literal();
      if (!v) fail("expected literal (true, false or null) on right-hand side of ':='");
      return Stmt::assign(std::move(x), *v);
    }
    fail("expected statement");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

void print_into(const Stmt& c, std::string& out) {
  std::visit(
      [&out](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, EmptyStmt>) {
          out += "skip";
        } else if constexpr (std::is_same_v<T, AssignStmt>) {
          out += s.var.str();
          out += " := ";
          out += s.value.literal();
        } else if constexpr (std::is_same_v<T, SeqStmt>) {
          const bool grouped = s.first.template as<SeqStmt>() != nullptr;
          if (grouped) out += "{ ";
          print_into(s.first, out);
          if (grouped) out += " }";
          out += "; ";
          print_into(s.second, out);
        } else if constexpr (std::is_same_v<T, CondStmt>) {
          out += "if (" + print_expr(s.cond) + ") { ";
          print_into(s.then_branch, out);
          out += " } else { ";
          print_into(s.else_branch, out);
          out += " }";
        } else {
          out += "while (" + print_expr(s.cond) + ") { ";
          print_into(s.body, out);
          out += " }";
        }
      },
      c.node().v);
}

}  // namespace

Stmt parse_program(std::string_view text) { return Parser(lex(text)).program(); }

std::string print_expr(const Expr& e) {
  if (const Val* v = e.as_value()) return std::string(v->literal());
  return e.as_var()->str();
}

std::string print_program(const Stmt& c) {
  std::string out;
  print_into(c, out);
  return out;
}

}  // namespace zipaut
