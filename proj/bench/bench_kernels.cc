// Serial reference kernels against their OpenMP counterparts.

#include <qreliab/kernels.hh>

#include <benchmark/benchmark.h>

#include <random>

using namespace qreliab;
using namespace qreliab::kernels;

namespace
{
    std::vector<Mask> masks_for(unsigned n, int count, std::uint64_t seed)
    {
        std::mt19937_64 rng(seed);
        std::vector<Mask> out;
        for (int k = 0; k < count; ++k) {
            Mask m = 0;
            for (int bit = 0; bit < 3; ++bit)
                m |= Mask{1} << (rng() % n);
            out.push_back(m);
        }
        return out;
    }

    BipartiteShape grid(int side)
    {
        BipartiteShape shape{side, side, {}};
        for (int u = 0; u < side; ++u)
            for (int w = 0; w < side; ++w)
                if ((u + w) % 2 == 0)
                    shape.edges.emplace_back(u, w);
        return shape;
    }

    std::pair<std::vector<Count>, std::vector<Count>> nodes_and_weights(int count, unsigned bits)
    {
        std::vector<Count> nodes, weights;
        for (int k = 0; k < count; ++k) {
            nodes.push_back(pow2(bits + k) + 2 * k + 1);
            weights.emplace_back(static_cast<unsigned long>(k + 1));
        }
        return {nodes, weights};
    }
}

template <auto Kernel>
static void covering(benchmark::State & state)
{
    auto n = static_cast<unsigned>(state.range(0));
    auto masks = masks_for(n, 2 * static_cast<int>(n), 17);
    for (auto _ : state)
        benchmark::DoNotOptimize(Kernel(n, masks));
}

template <auto Kernel>
static void weighted(benchmark::State & state)
{
    auto n = static_cast<unsigned>(state.range(0));
    auto masks = masks_for(n, 2 * static_cast<int>(n), 17);
    std::vector<Count> present(n, 1), absent(n, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(Kernel(n, masks, present, absent));
}

template <auto Kernel>
static void histogram(benchmark::State & state)
{
    auto shape = grid(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(Kernel(shape));
}

template <auto Kernel>
static void powers(benchmark::State & state)
{
    auto [nodes, weights] = nodes_and_weights(90, static_cast<unsigned>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(Kernel(nodes, weights, 243));
}

BENCHMARK(covering<serial::count_covering_subsets>)->Arg(16)->Arg(22);
BENCHMARK(covering<omp::count_covering_subsets>)->Arg(16)->Arg(22);
BENCHMARK(weighted<serial::weighted_covering_sum>)->Arg(14)->Arg(18);
BENCHMARK(weighted<omp::weighted_covering_sum>)->Arg(14)->Arg(18);
BENCHMARK(histogram<serial::profile_histogram>)->Arg(6)->Arg(9);
BENCHMARK(histogram<omp::profile_histogram>)->Arg(6)->Arg(9);
BENCHMARK(powers<serial::power_sums>)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(powers<omp::power_sums>)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
