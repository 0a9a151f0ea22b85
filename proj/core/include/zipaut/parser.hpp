#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "zipaut/ast.hpp"

namespace zipaut {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Concrete syntax:
//
//   program := stmt EOF
//   stmt    := basic (';' stmt)?
//   basic   := 'skip'
//            | IDENT ':=' literal
//            | 'if' '(' expr ')' '{' stmt '}' 'else' '{' stmt '}'
//            | 'while' '(' expr ')' '{' stmt '}'
//            | '{' stmt '}'
//   expr    := literal | IDENT
//   literal := 'true' | 'false' | 'null'
//
// `;` associates to the right. A bare block only matters for a sequence whose
// left part is itself a sequence; the printer emits one exactly then.
// Whitespace and `//` line comments are skipped.

Stmt parse_program(std::string_view text);

/// Canonical concrete syntax; `parse_program(print_program(c)) == c`.
std::string print_program(const Stmt& c);

std::string print_expr(const Expr& e);

}  // namespace zipaut
