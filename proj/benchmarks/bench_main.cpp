#include <benchmark/benchmark.h>

#include "zipaut/automaton.hpp"
#include "zipaut/export.hpp"
#include "zipaut/tauclose.hpp"

namespace {

using namespace zipaut;

// n nested conditionals, each branch a short sequence, inside one loop.
Stmt ladder(int n) {
  const VName x("x");
  Stmt s = Stmt::assign(x, Val::boolean(true));
  for (int i = 0; i < n; ++i) {
    const Stmt leaf = Stmt::assign(VName("y"), Val::boolean(i % 2 == 0));
    s = Stmt::cond(Expr::var(x), Stmt::seq(leaf, s), Stmt::seq(s, leaf));
  }
  return Stmt::while_loop(Expr::var(VName("go")), s);
}

void BM_StmtToTa(benchmark::State& st) {
  const Stmt c = ladder(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(stmt_to_ta(c));
  st.counters["nodes"] = static_cast<double>(2 * subterm_count(c));
}
BENCHMARK(BM_StmtToTa)->RangeMultiplier(2)->Range(2, 10);

void BM_TauCloseProgram(benchmark::State& st) {
  const auto m = rename_nodes(stmt_to_ta(ladder(static_cast<int>(st.range(0))))).automaton;
  for (auto _ : st) benchmark::DoNotOptimize(tauclose_ta(m));
  st.counters["nodes"] = static_cast<double>(m.nodes.size());
}
BENCHMARK(BM_TauCloseProgram)->RangeMultiplier(2)->Range(2, 10);

void BM_RunTrace(benchmark::State& st) {
  const Stmt c = ladder(6);
  const State s{{VName("x"), Val::boolean(true)}, {VName("go"), Val::boolean(true)}};
  const auto steps = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(run_trace(c, s, steps));
  st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations()) * st.range(0));
}
BENCHMARK(BM_RunTrace)->RangeMultiplier(10)->Range(100, 100000);

}  // namespace

BENCHMARK_MAIN();
