//
// Copyright (c) 2026 The alogsets authors
//
// Permission is hereby granted, free of charge, to any person obtaining a copy
// of this software and associated documentation files (the "Software"), to
// deal in the Software without restriction, including without limitation the
// rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
// sell copies of the Software, and to permit persons to whom the Software is
// furnished to do so, subject to the following conditions:
//
// The above copyright notice and this permission notice shall be included in
// all copies or substantial portions of the Software.
//
// THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
// IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
// FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
// AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
// LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
// FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS
// IN THE SOFTWARE.
//
#include <alogsets/alogsets.hpp>

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

using namespace alogsets;

namespace {

std::string read(const std::string& name) {
    std::ifstream in(std::string(ALOGSETS_BENCH_DATA_DIR) + "/" + name);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// n even numbers derived by recursion, then a card atom over all of them.
std::string evens(std::int64_t n) {
    return "#int(0," + std::to_string(2 * n) + ").\neven(0).\neven(I+2) :- even(I).\nq :- card{X : even(X)} > 0.\n";
}

void BM_Parse(benchmark::State& state) {
    const std::string src = read("graduate.alog");
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse_program(src));
    }
}
BENCHMARK(BM_Parse);

void BM_Ground(benchmark::State& state) {
    const Program p = parse_program(evens(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ground_program(p));
    }
}
BENCHMARK(BM_Ground)->Arg(8)->Arg(32)->Arg(128);

void BM_Solve(benchmark::State& state) {
    const GroundProgram g = ground_program(parse_program(read("graduate.alog")));
    const auto sem = state.range(0) == 0 ? Semantics::Alog : Semantics::SlogPlus;
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve(g, sem));
    }
}
BENCHMARK(BM_Solve)->Arg(0)->Arg(1);

// n independent choices, each guarded by a card atom over all of them. Every
// head literal is a candidate, so the search space is 2^(4n).
void BM_SolveChoices(benchmark::State& state) {
    std::string src = "#int(0," + std::to_string(state.range(0) - 1) + ").\n";
    src += "p(X) | np(X) :- d(X).\nok(X) :- p(X), card{Y : p(Y)} >= 1.\n";
    for (std::int64_t i = 0; i != state.range(0); ++i) {
        src += "d(" + std::to_string(i) + ").\n";
    }
    const GroundProgram g = ground_program(parse_program(src));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve(g, Semantics::SlogPlus));
    }
}
BENCHMARK(BM_SolveChoices)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_MinimalSupports(benchmark::State& state) {
    const auto n = state.range(0);
    std::string src = "#int(0," + std::to_string(n) + ").\nq :- card{X : p(X)} >= " + std::to_string(n / 2) + ".\n";
    const GroundProgram g = ground_program(parse_program(src));
    const auto& atom = std::get<GroundSetAtom>(g.rules.at(0).body.at(0));
    Interpretation a(g.u().size(), g.u().positive_literals("p"));
    for (auto _ : state) {
        benchmark::DoNotOptimize(minimal_supports(atom, a, g.u()));
    }
}
BENCHMARK(BM_MinimalSupports)->Arg(4)->Arg(8)->Arg(12);

void BM_Audit(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(audit_alog_within_slog(1, static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_Audit)->Arg(50)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
