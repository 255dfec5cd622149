#include <minrank/canon.hpp>
#include <minrank/field.hpp>
#include <minrank/minrank.hpp>
#include <minrank/named.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace minrank;

namespace {

FMatrix random_matrix(FieldSpec f, int n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    FMatrix m(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.set(i, j, static_cast<long long>(rng() % static_cast<unsigned>(f.p())));
    return m;
}

Graph random_graph(int n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng() & 1u)
                g.add_edge(i, j);
    return g;
}

void BM_RankGF2(benchmark::State& state)
{
    const auto m = random_matrix(FieldSpec::gf2(), static_cast<int>(state.range(0)), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankGF2)->Arg(8)->Arg(16);

void BM_RankGF2Packed(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(2);
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
    for (auto& r : rows)
        r = rng() & ((std::uint64_t{1} << n) - 1);
    for (auto _ : state) {
        auto copy = rows;
        benchmark::DoNotOptimize(rank_gf2_inplace(copy));
    }
}
BENCHMARK(BM_RankGF2Packed)->Arg(8)->Arg(16);

void BM_RankGF3(benchmark::State& state)
{
    const auto m = random_matrix(FieldSpec(3), static_cast<int>(state.range(0)), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankGF3)->Arg(8)->Arg(16);

void BM_CanonicalForm(benchmark::State& state)
{
    const auto g = random_graph(static_cast<int>(state.range(0)), 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(6)->Arg(8)->Arg(10);

void BM_MinRankGF2(benchmark::State& state)
{
    const auto g = random_graph(8, static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(min_rank(FieldSpec::gf2(), g));
}
BENCHMARK(BM_MinRankGF2)->Arg(5)->Arg(6);

void BM_FullHouseGF5(benchmark::State& state)
{
    const auto g = named::full_house();
    for (auto _ : state)
        benchmark::DoNotOptimize(min_rank(FieldSpec(5), g));
}
BENCHMARK(BM_FullHouseGF5)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
