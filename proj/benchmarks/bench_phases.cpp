#include <benchmark/benchmark.h>

#include "qpt/dicke.hpp"
#include "qpt/oracle.hpp"
#include "qpt/probe_qubit.hpp"
#include "qpt/scaling.hpp"
#include "qpt/xy_chain.hpp"

namespace {

void GroundPhaseFinite(benchmark::State& state)
{
    qpt::xy::XYParams p{1.0, 0.9, static_cast<int>(state.range(0))};
    for (auto _ : state)
        benchmark::DoNotOptimize(qpt::xy::ground_phase_finite(p).beta_g);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(GroundPhaseFinite)->Arg(101)->Arg(1001)->Arg(10001)->Arg(100001)->Complexity();

void PhaseDerivativeLimitNearCritical(benchmark::State& state)
{
    double lambda = 1.0 - std::pow(10.0, -static_cast<double>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(qpt::xy::phase_derivative_limit(1.0, lambda));
}
BENCHMARK(PhaseDerivativeLimitNearCritical)->DenseRange(2, 6);

void LocatePeak(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto peak = qpt::scaling::locate_peak(
            [n](double l) { return qpt::xy::phase_derivative_finite({1.0, l, n}); },
            0.5, 1.1, 1e-9);
        benchmark::DoNotOptimize(peak.lambda_m);
    }
}
BENCHMARK(LocatePeak)->Arg(101)->Arg(1001)->Arg(10001);

void DickeOscillator(benchmark::State& state)
{
    auto p = qpt::dicke::DickeParams::from_dimensionless(10.0, 2.0,
                                                         static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(qpt::dicke::dicke_phase_finite(p).beta_g);
}
BENCHMARK(DickeOscillator)->Arg(8)->Arg(32)->Arg(64);

void ProbeDerivative(benchmark::State& state)
{
    qpt::probe::ProbeParams p{0.1, 2.0, 0.5, {1.0, 0.99, static_cast<int>(state.range(0))}};
    for (auto _ : state)
        benchmark::DoNotOptimize(qpt::probe::probe_derivative(p));
}
BENCHMARK(ProbeDerivative)->Arg(51)->Arg(501);

void SpinChainEDGround(benchmark::State& state)
{
    qpt::xy::XYParams p{1.0, 0.5, static_cast<int>(state.range(0))};
    for (auto _ : state)
        benchmark::DoNotOptimize(qpt::oracle::spin_chain_ed_ground_sector(p, 0.3, -1));
}
BENCHMARK(SpinChainEDGround)->Arg(5)->Arg(7)->Arg(9);

} // namespace

BENCHMARK_MAIN();
