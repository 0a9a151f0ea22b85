#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "zipaut/ast.hpp"
#include "zipaut/parser.hpp"

namespace zipaut {
namespace {

const Val T = Val::boolean(true);
const Val F = Val::boolean(false);

Stmt loop_program(Expr cond) {
  return Stmt::while_loop(std::move(cond),
                          Stmt::seq(Stmt::assign(VName("x"), T), Stmt::assign(VName("y"), F)));
}

TEST(Parse, Skip) { EXPECT_EQ(parse_program("skip"), Stmt::empty()); }

TEST(Parse, SequenceIsRightAssociative) {
  EXPECT_EQ(parse_program("x := true; y := false"),
            Stmt::seq(Stmt::assign(VName("x"), T), Stmt::assign(VName("y"), F)));
  EXPECT_EQ(parse_program("skip; skip; x := null"),
            Stmt::seq(Stmt::empty(), Stmt::seq(Stmt::empty(), Stmt::assign(VName("x"), Val::null()))));
}

TEST(Parse, LoopProgram) {
  EXPECT_EQ(parse_program("while (e) { x := true; y := false }"), loop_program(Expr::var(VName("e"))));
}

TEST(Parse, ConditionalAndComments) {
  const auto c = parse_program(
      "// leading comment\n"
      "if (true) {\n  skip // then\n} else {\n  b := false\n}");
  EXPECT_EQ(c, Stmt::cond(Expr::value(T), Stmt::empty(), Stmt::assign(VName("b"), F)));
}

TEST(Parse, BracedBlockGroupsLeftSequence) {
  EXPECT_EQ(parse_program("{ skip; skip }; skip"),
            Stmt::seq(Stmt::seq(Stmt::empty(), Stmt::empty()), Stmt::empty()));
}

TEST(Parse, RejectsVariableOnRightHandSide) {
  try {
    parse_program("x := y");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 6u);
  }
}

TEST(Parse, ReportsLineAndColumn) {
  try {
    parse_program("skip;\n  x :=");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 7u);
  }
  EXPECT_THROW(parse_program("skip $"), ParseError);
  EXPECT_THROW(parse_program(""), ParseError);
  EXPECT_THROW(parse_program("if (b) { skip }"), ParseError);  // else is mandatory
  EXPECT_THROW(parse_program("while (b) skip"), ParseError);   // braces are mandatory
  EXPECT_THROW(parse_program("skip;"), ParseError);
  EXPECT_THROW(parse_program("while := true"), ParseError);
}

TEST(Print, CanonicalForms) {
  EXPECT_EQ(print_program(Stmt::empty()), "skip");
  EXPECT_EQ(print_program(Stmt::assign(VName("x"), Val::null())), "x := null");
  EXPECT_EQ(print_program(Stmt::cond(Expr::var(VName("b")), Stmt::empty(), Stmt::empty())),
            "if (b) { skip } else { skip }");
  EXPECT_EQ(print_program(loop_program(Expr::value(T))), "while (true) { x := true; y := false }");
}

TEST(Ast, VNameValidation) {
  EXPECT_NO_THROW(VName("x_1"));
  EXPECT_THROW(VName(""), std::invalid_argument);
  EXPECT_THROW(VName("1x"), std::invalid_argument);
  EXPECT_THROW(VName("while"), std::invalid_argument);
}

TEST(Ast, SubtermCount) {
  EXPECT_EQ(subterm_count(Stmt::empty()), 1u);
  EXPECT_EQ(subterm_count(Stmt::seq(Stmt::empty(), Stmt::empty())), 3u);
  EXPECT_EQ(subterm_count(loop_program(Expr::var(VName("e")))), 4u);
}

TEST(Ast, DumpIsStructural) {
  EXPECT_EQ(dump_ast(loop_program(Expr::var(VName("e")))),
            "While(Var(e), Seq(Assign(x, true), Assign(y, false)))");
}

TEST(AstProperty, PrintParseRoundTrip) {
  testing::Gen gen(0x5eed);
  for (int i = 0; i < 1000; ++i) {
    const Stmt c = gen.program();
    const std::string text = print_program(c);
    ASSERT_EQ(parse_program(text), c) << text;
  }
}

TEST(AstProperty, SubtermCountMatchesNaiveCount) {
  testing::Gen gen(17);
  for (int i = 0; i < 500; ++i) {
    const Stmt c = gen.program();
    ASSERT_EQ(subterm_count(c), testing::count_nodes(c));
  }
}

TEST(AstProperty, OrderingIsConsistentWithEquality) {
  testing::Gen gen(99);
  for (int i = 0; i < 300; ++i) {
    const Stmt a = gen.program(4, 8);
    const Stmt b = gen.program(4, 8);
    EXPECT_EQ((a <=> b) == 0, a == b);
    EXPECT_EQ(a <=> b, 0 <=> (b <=> a));
    EXPECT_EQ(parse_program(print_program(a)) <=> a, std::strong_ordering::equal);
  }
}

}  // namespace
}  // namespace zipaut
