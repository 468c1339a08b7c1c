#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "termcheck/checker.hpp"
#include "termcheck/driver.hpp"
#include "termcheck/eval.hpp"

using namespace termcheck;

namespace {

std::string nat(int n) {
  std::string s = "O()";
  for (int i = 0; i < n; ++i) s = "S(" + s + ")";
  return s;
}

const char* kArith =
    "add = [x][y]case x of { O z => y | S x' => S(add x' y) };\n"
    "mult = [x][y]case x of { O z => O() | S x' => add y (mult x' y) };\n";

// Ring of n functions of arity k; each passes its arguments rotated, with
// the first one peeled by a case.
std::string ring(int n, int k) {
  std::string src;
  for (int i = 0; i < n; ++i) {
    src += i == 0 ? "" : ",\n";
    src += "f" + std::to_string(i) + " = ";
    for (int j = 0; j < k; ++j) src += "[x" + std::to_string(j) + "]";
    src += "case x0 of { O z => O() | S p => f" + std::to_string((i + 1) % n) + " p";
    for (int j = 1; j < k; ++j) src += " x" + std::to_string(j);
    src += " }";
  }
  return src + ";\n";
}

CallGraph random_graph(std::mt19937& rng, std::size_t vertices, std::size_t arity, std::size_t edges) {
  std::vector<FunctionInfo> vs(vertices);
  for (std::size_t i = 0; i < vertices; ++i) {
    vs[i].id = i;
    vs[i].display_name = "f" + std::to_string(i);
    vs[i].arity = arity;
  }
  CallGraph g(std::move(vs));
  std::uniform_int_distribution<std::size_t> v(0, vertices - 1), col(0, arity - 1);
  std::uniform_int_distribution<int> rel(0, 2);
  for (std::size_t e = 0; e < edges; ++e) {
    std::vector<RelVector> rows(arity, RelVector(arity, Relation::Unknown));
    for (auto& r : rows) r[col(rng)] = static_cast<Relation>(rel(rng));
    std::size_t a = v(rng), b = v(rng);
    g.add_edge(Call{a, b, CallMatrix::from_rows(rows, arity), {a, b}});
  }
  return g;
}

void BM_CompleteRandom(benchmark::State& state) {
  std::mt19937 rng(1);
  auto g = random_graph(rng, static_cast<std::size_t>(state.range(0)), 3, static_cast<std::size_t>(state.range(1)));
  std::size_t edges = 0;
  for (auto _ : state) {
    auto c = complete_graph(g);
    edges = c.edges().size();
    benchmark::DoNotOptimize(edges);
  }
  state.counters["completed_edges"] = static_cast<double>(edges);
}
BENCHMARK(BM_CompleteRandom)->Args({4, 6})->Args({8, 16})->Args({16, 32});

void BM_CheckRing(benchmark::State& state) {
  RunOptions opts;
  opts.check_only = true;
  auto src = ring(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(run(src, opts).output);
}
BENCHMARK(BM_CheckRing)->Args({4, 2})->Args({8, 2})->Args({8, 3});

void BM_EvalMult(benchmark::State& state) {
  auto prog = parse_program(std::string(kArith));
  Env env;
  for (const auto& s : prog.statements) env = bind_recursive(env, std::get<Define>(s.node).bindings);
  int n = static_cast<int>(state.range(0));
  auto term = parse_term("mult (" + nat(n) + ") (" + nat(n) + ")");
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(term, env));
}
BENCHMARK(BM_EvalMult)->Arg(10)->Arg(30)->Arg(60);

void BM_Parse(benchmark::State& state) {
  std::string src = std::string(kArith) + ring(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(parse_program(src));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * src.size()));
}
BENCHMARK(BM_Parse)->Arg(10)->Arg(100);

}  // namespace
BENCHMARK_MAIN();
