#include <gtest/gtest.h>

#include <set>

#include "support/generators.hpp"
#include "zipaut/parser.hpp"
#include "zipaut/zipper.hpp"

namespace zipaut {
namespace {

const Val T = Val::boolean(true);
const Val F = Val::boolean(false);

struct LoopProgram {
  Expr e = Expr::var(VName("e"));
  Stmt x = Stmt::assign(VName("x"), T);
  Stmt y = Stmt::assign(VName("y"), F);
  Stmt body = Stmt::seq(x, y);
  Stmt program = Stmt::while_loop(e, body);
};

TEST(Reconstruct, TopIsIdentity) {
  const LoopProgram f;
  EXPECT_EQ(reconstruct(f.program, StmtPath::top()), f.program);
  EXPECT_EQ(reconstruct_loc({f.program, StmtPath::top()}), f.program);
}

TEST(Reconstruct, InsideLoop) {
  const LoopProgram f;
  const auto sp = StmtPath::seq_left(StmtPath::while_body(f.e, StmtPath::top()), f.y);
  EXPECT_EQ(reconstruct(f.x, sp), f.program);
  EXPECT_EQ(reconstruct_loc({f.x, sp}), f.program);
}

TEST(Reconstruct, ElseBranch) {
  const LoopProgram f;
  const auto sp = StmtPath::cond_right(f.e, f.x, StmtPath::top());
  EXPECT_EQ(reconstruct(Stmt::empty(), sp), Stmt::cond(f.e, f.x, Stmt::empty()));
}

TEST(AllLocations, Leaf) {
  const auto locs = all_locations(Stmt::empty(), StmtPath::top());
  ASSERT_EQ(locs.size(), 1u);
  EXPECT_EQ(locs[0], (StmtLocation{Stmt::empty(), StmtPath::top()}));
}

TEST(AllLocations, ThreeNodeTreeInPreOrder) {
  const Stmt e = Stmt::empty();
  const Stmt s = Stmt::seq(e, e);
  const auto locs = all_locations(s, StmtPath::top());
  const std::vector<StmtLocation> expected = {
      {s, StmtPath::top()},
      {e, StmtPath::seq_left(StmtPath::top(), e)},
      {e, StmtPath::seq_right(e, StmtPath::top())},
  };
  EXPECT_EQ(locs, expected);
}

TEST(AllLocations, LoopProgram) {
  const LoopProgram f;
  const auto locs = all_locations(f.program, StmtPath::top());
  ASSERT_EQ(locs.size(), 4u);
  EXPECT_EQ(locs[0].focus, f.program);
  EXPECT_EQ(locs[1].focus, f.body);
  EXPECT_EQ(locs[2].focus, f.x);
  EXPECT_EQ(locs[3].focus, f.y);
  EXPECT_EQ(locs[1].path.render(), "body");
  EXPECT_EQ(locs[2].path.render(), "body/seqL");
  EXPECT_EQ(locs[3].path.render(), "body/seqR");
}

TEST(NextLoc, EveryContextShape) {
  const LoopProgram f;
  const Stmt c = Stmt::empty();
  const StmtPath up = StmtPath::while_body(f.e, StmtPath::top());

  EXPECT_EQ(next_loc(c, StmtPath::top()), (SyntConfig{{c, StmtPath::top()}, false}));
  EXPECT_EQ(next_loc(c, StmtPath::seq_left(up, f.y)), (SyntConfig{{f.y, StmtPath::seq_right(c, up)}, true}));
  EXPECT_EQ(next_loc(c, StmtPath::seq_right(f.x, up)), (SyntConfig{{Stmt::seq(f.x, c), up}, false}));
  EXPECT_EQ(next_loc(c, StmtPath::cond_left(f.e, up, f.y)), (SyntConfig{{Stmt::cond(f.e, c, f.y), up}, false}));
  EXPECT_EQ(next_loc(c, StmtPath::cond_right(f.e, f.x, up)), (SyntConfig{{Stmt::cond(f.e, f.x, c), up}, false}));
  EXPECT_EQ(next_loc(c, StmtPath::while_body(f.e, up)), (SyntConfig{{Stmt::while_loop(f.e, c), up}, true}));
}

TEST(NodesOfLocations, BothFlagsInOrder) {
  EXPECT_TRUE(nodes_of_stmt_locations({}).empty());
  const StmtLocation l{Stmt::empty(), StmtPath::top()};
  const std::vector<SyntConfig> expected = {{l, true}, {l, false}};
  EXPECT_EQ(nodes_of_stmt_locations({l}), expected);
  EXPECT_EQ(nodes_of_stmt_locations(all_locations(LoopProgram{}.program, StmtPath::top())).size(), 8u);
}

TEST(Render, PathsAndConfigs) {
  const LoopProgram f;
  EXPECT_EQ(StmtPath::top().render(), "@top");
  const auto sp = StmtPath::seq_left(StmtPath::while_body(f.e, StmtPath::top()), f.y);
  EXPECT_EQ(sp.render(), "body/seqL");
  EXPECT_EQ(StmtPath::cond_right(f.e, f.x, StmtPath::cond_left(f.e, StmtPath::top(), f.y)).render(),
            "condT/condF");
  EXPECT_EQ(render_config({{f.x, sp}, true}), "body/seqL↓");
  EXPECT_EQ(render_config({{f.program, StmtPath::top()}, false}), "@top↑");
}

TEST(Order, CanonicalOrderOnConfigs) {
  const LoopProgram f;
  const SyntConfig top_before{{f.program, StmtPath::top()}, true};
  const SyntConfig top_after{{f.program, StmtPath::top()}, false};
  const SyntConfig body_before{{f.body, StmtPath::while_body(f.e, StmtPath::top())}, true};
  EXPECT_TRUE(top_after < top_before);
  EXPECT_TRUE(top_before < body_before);  // "@top" < "body"
  EXPECT_FALSE(top_before < top_before);
}

TEST(ZipperProperty, EveryLocationReconstructsTheProgram) {
  testing::Gen gen(1);
  for (int i = 0; i < 500; ++i) {
    const Stmt c = gen.program();
    const auto locs = all_locations(c, StmtPath::top());
    ASSERT_EQ(locs.size(), subterm_count(c));
    std::set<SyntConfig> distinct;
    for (const auto& l : locs) {
      ASSERT_EQ(reconstruct_loc(l), c) << print_program(c);
      distinct.insert({l, true});
    }
    EXPECT_EQ(distinct.size(), locs.size());
  }
}

TEST(ZipperProperty, NextLocPreservesTreeAndStaysInLocations) {
  testing::Gen gen(2);
  for (int i = 0; i < 500; ++i) {
    const Stmt c = gen.program();
    const auto locs = all_locations(c, StmtPath::top());
    std::set<SyntConfig> known;
    for (const auto& l : locs) known.insert({l, true});
    for (const auto& l : locs) {
      if (l.path.is_top()) continue;
      const auto next = next_loc(l.focus, l.path);
      ASSERT_EQ(reconstruct_loc(next.loc), reconstruct(l.focus, l.path));
      ASSERT_TRUE(known.contains({next.loc, true})) << print_program(c) << " at " << l.path.render();
    }
  }
}

TEST(ZipperProperty, LocationsUnderNonTopContext) {
  testing::Gen gen(3);
  for (int i = 0; i < 200; ++i) {
    const Stmt c = gen.program(4, 10);
    const Stmt sibling = gen.program(2, 3);
    const auto sp = StmtPath::seq_right(sibling, StmtPath::top());
    const auto locs = all_locations(c, sp);
    ASSERT_EQ(locs.size(), subterm_count(c));
    for (const auto& l : locs) ASSERT_EQ(reconstruct_loc(l), Stmt::seq(sibling, c));
  }
}

}  // namespace
}  // namespace zipaut
