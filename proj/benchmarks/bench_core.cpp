#include <benchmark/benchmark.h>

#include "ringwalk/limiting.hpp"
#include "ringwalk/oracle.hpp"
#include "ringwalk/transport.hpp"

using namespace ringwalk;

static void BM_BlochEigenvalues(benchmark::State& state) {
    const LatticeSpec lattice = LatticeSpec::ring(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bloch_eigenvalues(lattice));
    }
}
BENCHMARK(BM_BlochEigenvalues)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_SnapshotRow(benchmark::State& state) {
    const LatticeSpec lattice = LatticeSpec::ring(static_cast<int>(state.range(0)), 2);
    const TimeGrid grid = TimeGrid::from_points({7.5});
    for (auto _ : state) {
        benchmark::DoNotOptimize(distribution_snapshot(lattice, 0, WalkKind::quantum, grid));
    }
}
BENCHMARK(BM_SnapshotRow)->Arg(100)->Arg(400);

static void BM_LimitingDistribution(benchmark::State& state) {
    const LatticeSpec lattice = LatticeSpec::ring(static_cast<int>(state.range(0)), 12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(limiting_distribution(lattice, 0));
    }
}
BENCHMARK(BM_LimitingDistribution)->Arg(100)->Arg(400);

static void BM_InfiniteQuantum(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(infinite_quantum(m, 10 * m, 5.0));
    }
}
BENCHMARK(BM_InfiniteQuantum)->Arg(1)->Arg(2)->Arg(3);

static void BM_OdeOracle(benchmark::State& state) {
    const LatticeSpec lattice = LatticeSpec::ring(static_cast<int>(state.range(0)), 2);
    const TimeGrid grid = TimeGrid::linear(0.0, 5.0, 6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            oracle::oracle_ode_snapshot(lattice, 0, WalkKind::quantum, grid));
    }
}
BENCHMARK(BM_OdeOracle)->Arg(16)->Arg(32);

BENCHMARK_MAIN();
