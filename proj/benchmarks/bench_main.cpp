#include "vqc/boson.hpp"
#include "vqc/fermion.hpp"
#include "vqc/identities.hpp"
#include "vqc/plactic.hpp"
#include "vqc/spectral.hpp"

#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

using namespace vqc;

static void BM_FusionTableLattice(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(fusion_table_lattice(n, k));
    state.counters["basis"] = static_cast<double>(affine_weights(n, k).size());
}
BENCHMARK(BM_FusionTableLattice)->Args({3, 2})->Args({3, 4})->Args({4, 3})->Args({5, 2})->Unit(benchmark::kMillisecond);

static void BM_GwTableLattice(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const int big_n = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(gw_table_lattice(k, big_n));
    state.counters["basis"] = static_cast<double>(partitions_in_box(k, big_n - k).size());
}
BENCHMARK(BM_GwTableLattice)->Args({2, 5})->Args({3, 6})->Args({3, 7})->Args({4, 8})->Unit(benchmark::kMillisecond);

static void BM_GwTableBvi(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const int big_n = static_cast<int>(state.range(1));
    const auto basis = partitions_in_box(k, big_n - k);
    for (auto _ : state) {
        long long total = 0;
        for (const auto& l : basis)
            for (const auto& m : basis)
                for (const auto& n : basis) total += bvi_coeff(l, m, n, k, big_n).c;
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_GwTableBvi)->Args({2, 5})->Args({3, 6})->Unit(benchmark::kMillisecond);

static void BM_VerlindeTable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    const auto weights = affine_weights(n, k);
    for (auto _ : state) {
        long long total = 0;
        for (const auto& a : weights)
            for (const auto& b : weights)
                for (const auto& c : weights) total += verlinde_coeff(a, b, c);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_VerlindeTable)->Args({3, 3})->Args({4, 2})->Unit(benchmark::kMillisecond);

static void BM_QuantumProduct(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(quantum_product(Partition{3, 3, 2, 1}, Partition{2, 2, 1}, 4, 7));
}
BENCHMARK(BM_QuantumProduct)->Unit(benchmark::kMicrosecond);

static void BM_HierarchyBuild(benchmark::State& state) {
    const int big_n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hierarchy_build(big_n));
}
BENCHMARK(BM_HierarchyBuild)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_SMatrix(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(smatrix(n, k));
}
BENCHMARK(BM_SMatrix)->Args({3, 3})->Args({4, 4})->Args({5, 3})->Unit(benchmark::kMicrosecond);

static void BM_NormalizeTableau(benchmark::State& state) {
    const int count = static_cast<int>(state.range(0));
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(1, 9);
    std::vector<Tableau> inputs;
    for (int t = 0; t < 64; ++t) {
        std::vector<std::vector<int>> rows;
        for (int c = 0; c < count; ++c) {
            int x = entry(rng);
            for (std::size_t r = 0;; ++r) {
                if (r == rows.size()) {
                    rows.push_back({x});
                    break;
                }
                auto it = std::upper_bound(rows[r].begin(), rows[r].end(), x);
                if (it == rows[r].end()) {
                    rows[r].push_back(x);
                    break;
                }
                std::swap(x, *it);
            }
        }
        inputs.emplace_back(rows);
    }
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(normalize_tableau(inputs[i++ % inputs.size()]));
}
BENCHMARK(BM_NormalizeTableau)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

static void BM_DengDuRoundTrip(benchmark::State& state) {
    const int length = static_cast<int>(state.range(0));
    std::mt19937 rng(8);
    std::uniform_int_distribution<int> letter(0, 3);
    GenWord w(static_cast<std::size_t>(length));
    for (auto& x : w) x = letter(rng);
    for (auto _ : state) benchmark::DoNotOptimize(multipartition_to_word(word_to_multipartition(w, 4)));
}
BENCHMARK(BM_DengDuRoundTrip)->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

static void BM_LaurentMultiply(benchmark::State& state) {
    const int terms = static_cast<int>(state.range(0));
    LaurentInt a;
    LaurentInt b;
    for (int i = -terms / 2; i < terms / 2; ++i) {
        a += LaurentInt::monomial(BigInt(i * 7 + 3), i);
        b += LaurentInt::monomial(BigInt(i * 11 - 5), 2 * i);
    }
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_LaurentMultiply)->Arg(8)->Arg(64)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
