// Serial reference kernel vs. OpenMP kernel on the heaviest suites.

#include <benchmark/benchmark.h>

#include "hvs/essential.hpp"
#include "hvs/inner.hpp"
#include "hvs/wvs_axioms.hpp"

namespace {

const hvs::ModelSpec kGeometric{hvs::FieldTag::RealRationals, 3, hvs::Family::Geometric, hvs::Rational(1, 2)};
const hvs::ModelSpec kSign{hvs::FieldTag::RealRationals, 3, hvs::Family::Sign, hvs::Rational(1, 2)};

template <class Items>
void run(benchmark::State& state, hvs::Exec exec, const hvs::ModelSpec& model, Items items)
{
    hvs::SampleConfig cfg;
    cfg.samples = static_cast<std::size_t>(state.range(0));
    const auto samples = hvs::sample_stream(cfg, model.field, model.dim);
    const auto checks = items(model, cfg.depth);
    for (auto _ : state) {
        auto report = hvs::evaluate_suite("bench", checks, samples, exec);
        benchmark::DoNotOptimize(report);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * samples.size()));
}

void BM_WvsAxioms_Serial(benchmark::State& state)
{
    run(state, hvs::Exec::serial, kGeometric, hvs::wvs_axiom_items);
}
void BM_WvsAxioms_Parallel(benchmark::State& state)
{
    run(state, hvs::Exec::parallel, kGeometric, hvs::wvs_axiom_items);
}

void BM_StrongNormal_Serial(benchmark::State& state)
{
    run(state, hvs::Exec::serial, kSign, hvs::strong_normal_items);
}
void BM_StrongNormal_Parallel(benchmark::State& state)
{
    run(state, hvs::Exec::parallel, kSign, hvs::strong_normal_items);
}

void BM_Hip_Serial(benchmark::State& state)
{
    run(state, hvs::Exec::serial, kGeometric, [](const hvs::ModelSpec& m, std::size_t d) {
        return hvs::hip_items(m, hvs::InnerProductSpec::dot(), d);
    });
}
void BM_Hip_Parallel(benchmark::State& state)
{
    run(state, hvs::Exec::parallel, kGeometric, [](const hvs::ModelSpec& m, std::size_t d) {
        return hvs::hip_items(m, hvs::InnerProductSpec::dot(), d);
    });
}

}  // namespace

BENCHMARK(BM_WvsAxioms_Serial)->Arg(500)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WvsAxioms_Parallel)->Arg(500)->Arg(4000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_StrongNormal_Serial)->Arg(500)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StrongNormal_Parallel)->Arg(500)->Arg(4000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Hip_Serial)->Arg(500)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Hip_Parallel)->Arg(500)->Arg(4000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
