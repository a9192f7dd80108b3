#include <benchmark/benchmark.h>

#include "hcflink/explore.hpp"
#include "hcflink/system.hpp"

using namespace hcflink;

namespace {

const LinkPlan& plan() {
    static const LinkPlan p;
    return p;
}

const TransceiverModel& trx() {
    static const TransceiverModel m =
        ShannonGapModel{calibrate_trx_gap(plan(), OperatingPoint{0.06, 20.3}, 1000.0, false)};
    return m;
}

void BM_LinkGsnr(benchmark::State& state) {
    const OperatingPoint op{0.06, 20.3};
    for (auto _ : state) benchmark::DoNotOptimize(link_gsnr(plan(), op, true));
}
BENCHMARK(BM_LinkGsnr);

// Default 81 x 111 lattice; the argument is the thread count.
void BM_SweepGrid(benchmark::State& state) {
    const explore::GridSpec grid;
    const auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(explore::sweep_grid(plan(), trx(), grid, true, threads));
    state.SetItemsProcessed(state.iterations() * grid.loss_steps * grid.power_steps);
}
BENCHMARK(BM_SweepGrid)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ExtractContour(benchmark::State& state) {
    const explore::SweepGrid grid = explore::sweep_grid(plan(), trx(), explore::GridSpec{}, true);
    for (auto _ : state)
        benchmark::DoNotOptimize(explore::extract_contour(grid, explore::Field::throughput, 1000.0));
}
BENCHMARK(BM_ExtractContour)->Unit(benchmark::kMicrosecond);

void BM_RequiredEdfaPower(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(explore::required_edfa_power(plan(), trx(), 0.06, 200.0, 1000.0, true));
}
BENCHMARK(BM_RequiredEdfaPower)->Unit(benchmark::kMicrosecond);

void BM_SpanLengthCurve(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            explore::span_length_curve(plan(), trx(), 0.06, 150.0, 250.0, 21, 1000.0, true));
}
BENCHMARK(BM_SpanLengthCurve)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
