// Desk-scale grounding benchmarks: recursive closure on a chain graph and
// the aggregate-heavy ownership example scaled by company count.

#include <benchmark/benchmark.h>

#include <microgringo/engine.hh>
#include <microgringo/parser.hh>

#include <sstream>
#include <string>

namespace {

std::string chain_program(int nodes) {
    std::ostringstream out;
    for (int i = 0; i + 1 < nodes; ++i) {
        out << "edge(n" << i << ",n" << i + 1 << ").\n";
    }
    out << "reach(X,Y) :- edge(X,Y).\n";
    out << "reach(X,Z) :- reach(X,Y), edge(Y,Z).\n";
    return out.str();
}

std::string ownership_program(int companies) {
    std::ostringstream out;
    for (int i = 0; i < companies; ++i) { out << "company(c" << i << ").\n"; }
    for (int i = 0; i + 1 < companies; ++i) {
        out << "owns(c" << i << ",c" << i + 1 << ",60).\n";
    }
    out << "controls(X,Y) :- #sum+ { S : owns(X,Y,S) ; S,Z : controls(X,Z), owns(Z,Y,S) } "
           "> 50, company(X), company(Y), X != Y.\n";
    return out.str();
}

void bench_transitive_closure(benchmark::State &state) {
    auto program = mg::parse_program(chain_program(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        auto result = mg::ground_program(program);
        benchmark::DoNotOptimize(result.rules.size());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(bench_transitive_closure)->Range(8, 128)->Complexity();

void bench_recursive_aggregates(benchmark::State &state) {
    auto program = mg::parse_program(ownership_program(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        auto result = mg::ground_program(program);
        benchmark::DoNotOptimize(result.rules.size());
    }
}
BENCHMARK(bench_recursive_aggregates)->Range(4, 32);

void bench_parse(benchmark::State &state) {
    std::string source = chain_program(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto program = mg::parse_program(source);
        benchmark::DoNotOptimize(program.facts.size());
    }
}
BENCHMARK(bench_parse)->Range(64, 512);

} // namespace
