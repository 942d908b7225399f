#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "logsym/rng.hpp"
#include "logsym/sample.hpp"
#include "logsym/ustat.hpp"

namespace {

logsym::Sample make_sample(std::size_t n) {
    logsym::Rng rng(4242, n);
    std::vector<double> raw(n);
    for (auto& v : raw) v = std::exp(rng.normal());
    return logsym::validate_sample(std::move(raw));
}

void bm_ustat_fast(benchmark::State& state) {
    const auto sample = make_sample(static_cast<std::size_t>(state.range(0)));
    const logsym::KernelConfig kc(static_cast<int>(state.range(1)));
    for (auto _ : state) {
        auto result = logsym::ustat_fast(sample, kc);
        benchmark::DoNotOptimize(result.delta_hat);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_ustat_fast)
    ->ArgsProduct({{100, 1000, 10000, 100000}, {1, 3}});

void bm_ustat_naive(benchmark::State& state) {
    const auto sample = make_sample(static_cast<std::size_t>(state.range(0)));
    const logsym::KernelConfig kc(2);
    for (auto _ : state) {
        auto result = logsym::ustat_naive(sample, kc);
        benchmark::DoNotOptimize(result.delta_hat);
    }
}
BENCHMARK(bm_ustat_naive)->Arg(8)->Arg(12)->Arg(16);

void bm_leave_one_out(benchmark::State& state) {
    const auto sample = make_sample(static_cast<std::size_t>(state.range(0)));
    const logsym::KernelConfig kc(1);
    for (auto _ : state) {
        auto loo = logsym::leave_one_out(sample, kc);
        benchmark::DoNotOptimize(loo.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_leave_one_out)->Arg(100)->Arg(1000)->Arg(10000);

}  // namespace
