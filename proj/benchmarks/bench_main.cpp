#include <npoly/npoly.hpp>

#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

using namespace npoly;

namespace {

struct Sample {
    ESequence e;
    RSequence r;
};

Sample make_sample(int n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<std::int64_t> e{0};
    for (int i = 1; i < n; ++i) e.push_back(e.back() + static_cast<std::int64_t>(rng() % 4));
    std::vector<Rational> r;
    for (int i = 0; i < n; ++i) r.emplace_back(static_cast<long>(rng() % 1000), 1 + static_cast<long>(rng() % 97));
    for (auto& x : r) x.canonicalize();
    std::sort(r.begin(), r.end(), [](const Rational& a, const Rational& b) { return a > b; });
    return {ESequence(std::move(e)), normalize(RSequence(std::move(r)))};
}

void BM_MinChainHull(benchmark::State& state)
{
    const Sample s = make_sample(static_cast<int>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(min_chain_hull(s.e, s.r));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MinChainHull)->DenseRange(4, 20, 4)->Arg(64)->Arg(256)->Complexity();

void BM_MinChainBruteForce(benchmark::State& state)
{
    const Sample s = make_sample(static_cast<int>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(min_chain_bruteforce(s.e, s.r));
}
BENCHMARK(BM_MinChainBruteForce)->DenseRange(4, 20, 4);

void BM_BoundConstant(benchmark::State& state)
{
    const int d = static_cast<int>(state.range(0));
    const CurveProfile profile(d, (d - 1) / 4);
    const ESequence e = f_sequence(profile);
    const GapWindow w{1, e.size() / 2};
    for (auto _ : state) benchmark::DoNotOptimize(bound_constant(e, w));
}
BENCHMARK(BM_BoundConstant)->Arg(12)->Arg(50)->Arg(200);

void BM_DualMatrices(benchmark::State& state)
{
    const int size = static_cast<int>(state.range(0));
    std::vector<std::int64_t> n;
    for (int k = 0; k < size - 2; ++k) n.push_back(k % 2 == 0 ? 97 : -89);
    for (auto _ : state) benchmark::DoNotOptimize(dual_matrices(n, {1, size}, size, 100));
}
BENCHMARK(BM_DualMatrices)->Arg(5)->Arg(10)->Arg(15);

} // namespace

BENCHMARK_MAIN();
