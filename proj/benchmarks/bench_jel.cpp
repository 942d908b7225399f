#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "logsym/distributions.hpp"
#include "logsym/jel.hpp"
#include "logsym/rng.hpp"
#include "logsym/sample.hpp"

namespace {

void bm_el_solve(benchmark::State& state) {
    // a representative pseudo-value vector from null data
    logsym::Rng rng(7, 1);
    const auto s = logsym::validate_sample(
        logsym::sample(logsym::LogNormalSpec{0.0, 1.0}, static_cast<std::size_t>(state.range(0)), rng));
    const auto pv = logsym::pseudo_values(s, logsym::KernelConfig(1));
    for (auto _ : state) {
        auto sol = logsym::jel_log_ratio(pv.values);
        benchmark::DoNotOptimize(sol.stat);
    }
}
BENCHMARK(bm_el_solve)->Arg(25)->Arg(100)->Arg(500);

// one full simulation replication: draw, sort, jackknife, EL, decide
void bm_replication(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::uint64_t rep = 0;
    for (auto _ : state) {
        logsym::Rng rng(99, rep++);
        const auto s =
            logsym::validate_sample(logsym::sample(logsym::LogNormalSpec{0.0, 1.0}, n, rng));
        const auto r = logsym::jel_test(s, logsym::KernelConfig(1), 0.05);
        benchmark::DoNotOptimize(r.reject);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(bm_replication)->Arg(25)->Arg(100)->Arg(500);

void bm_sampler(benchmark::State& state) {
    logsym::Rng rng(3, 0);
    const logsym::DistributionSpec spec =
        state.range(0) == 0 ? logsym::DistributionSpec{logsym::LogNormalSpec{0.0, 1.0}}
                            : logsym::DistributionSpec{logsym::GammaSpec{0.7, 1.0}};
    for (auto _ : state) {
        auto xs = logsym::sample(spec, 1000, rng);
        benchmark::DoNotOptimize(xs.data());
    }
    state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(bm_sampler)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
