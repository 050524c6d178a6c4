#include <benchmark/benchmark.h>

#include <random>

#include "bks/alcove.hpp"
#include "bks/density.hpp"
#include "bks/pairing.hpp"
#include "bks/weyl.hpp"

using namespace bks;

namespace {

const std::pair<char, int> kGroups[] = {{'A', 3}, {'B', 3}, {'D', 4}, {'G', 2}, {'F', 4}, {'E', 6}};

void BM_WeylEnumerate(benchmark::State& state) {
    const auto [t, r] = kGroups[state.range(0)];
    const RootSystem rs = build_root_system(t, r);
    std::size_t order = 0;
    for (auto _ : state) {
        auto W = enumerate_weyl(rs);
        order = W.size();
        benchmark::DoNotOptimize(W);
    }
    state.SetLabel(rs.name() + " |W|=" + std::to_string(order));
}
BENCHMARK(BM_WeylEnumerate)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_PairingTable(benchmark::State& state) {
    const auto [t, r] = kGroups[state.range(0)];
    const int k = static_cast<int>(state.range(1));
    const RootSystem rs = build_root_system(t, r);
    const auto W = enumerate_weyl(rs);
    const auto pts = enumerate_admissible(rs, k);
    for (auto _ : state) {
        for (const auto& p : pts)
            for (const auto& q : pts) benchmark::DoNotOptimize(bks_pairing(rs, W, k, p.beta, q.beta));
    }
    state.SetLabel(rs.name() + " k=" + std::to_string(k) + " pairs=" + std::to_string(pts.size() * pts.size()));
}
BENCHMARK(BM_PairingTable)->Args({0, 8})->Args({1, 9})->Args({3, 10})->Unit(benchmark::kMillisecond);

void BM_SeqIso(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const int d = static_cast<int>(state.range(0));
    const auto seq = density::random_exact_sequence(rng, d, d, "");
    const density::DensityValue du{seq.u(), 0.5, 1.0}, dw{seq.w(), 0.5, 1.0};
    for (auto _ : state) benchmark::DoNotOptimize(density::seq_iso(seq, du, dw));
}
BENCHMARK(BM_SeqIso)->Arg(2)->Arg(8)->Arg(32);

void BM_DensityPhi(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const int n = static_cast<int>(state.range(0));
    const auto pair = density::random_clean_pair(rng, n, n / 2);
    for (auto _ : state) benchmark::DoNotOptimize(density::bks_density_phi(pair.omega, pair.l1, 1.0, pair.l2, 1.0));
}
BENCHMARK(BM_DensityPhi)->Arg(2)->Arg(6)->Arg(16);

}  // namespace
BENCHMARK_MAIN();
