#include <benchmark/benchmark.h>

#include "lpgame/assignment.hpp"
#include "lpgame/nonneg.hpp"
#include "lpgame/reduction.hpp"
#include "lpgame/simplex.hpp"
#include "test_util.hpp"

using namespace lpgame;

namespace {

LPInstance make_lp(int m, int n, unsigned seed)
{
    testutil::Rng rng(seed);
    return LPInstance(testutil::random_mat(rng, m, n, -5, 5),
                      testutil::random_vec(rng, m, 1, 5),
                      testutil::random_vec(rng, n, 1, 5));
}

void bm_solve_lp(benchmark::State& state)
{
    const int d = static_cast<int>(state.range(0));
    const LPInstance lp = make_lp(d, d, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_lp(lp));
}
BENCHMARK(bm_solve_lp)->Arg(4)->Arg(8)->Arg(16);

void bm_solve_positive_lp(benchmark::State& state)
{
    const int d = static_cast<int>(state.range(0));
    const LPInstance lp = make_lp(d, d, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_positive_lp(lp));
}
BENCHMARK(bm_solve_positive_lp)->Arg(4)->Arg(8);

void bm_solve_game(benchmark::State& state)
{
    const int d = static_cast<int>(state.range(0));
    testutil::Rng rng(3);
    const Game g(testutil::random_mat(rng, d, d, -5, 5));
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_game(g));
}
BENCHMARK(bm_solve_game)->Arg(4)->Arg(8)->Arg(16);

void bm_hide_and_seek(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    testutil::Rng rng(4);
    const AssignmentInstance a(testutil::random_mat(rng, n, n, 1, 9));
    const auto g = hide_and_seek(a);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_game(Game(g.M)));
}
BENCHMARK(bm_hide_and_seek)->Arg(2)->Arg(3)->Arg(4);

void bm_fictitious_play(benchmark::State& state)
{
    testutil::Rng rng(5);
    const Game g(testutil::random_mat(rng, 4, 4, -3, 3));
    const long rounds = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_game_fictitious(g, rounds));
}
BENCHMARK(bm_fictitious_play)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
