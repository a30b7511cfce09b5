#include <benchmark/benchmark.h>

#include "qhsa/checks.hpp"
#include "qhsa/document.hpp"
#include "qhsa/drinfeld.hpp"
#include "qhsa/suites.hpp"

namespace {

qhsa::QhsaStructure fixture(const char* name) {
    return qhsa::load_structure(std::string(QHSA_BENCH_FIXTURE_DIR) + "/" + name + ".qhsa");
}

void BM_TensorMultiply(benchmark::State& state) {
    auto h = fixture("h2ext-twisted");
    auto x = qhsa::apply_delta(h, h.phi, 0);
    auto y = qhsa::apply_delta(h, h.phi, 2);
    for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_TensorMultiply);

void BM_Pentagon(benchmark::State& state) {
    auto h = fixture("h2ext-twisted");
    for (auto _ : state) benchmark::DoNotOptimize(qhsa::check_quasi_bialgebra(h));
}
BENCHMARK(BM_Pentagon);

void BM_DefaultSuites(benchmark::State& state) {
    auto h = fixture("h2ext-twisted");
    for (auto _ : state) benchmark::DoNotOptimize(qhsa::run_suites(h, qhsa::default_suites()));
}
BENCHMARK(BM_DefaultSuites);

void BM_DrinfeldPipeline(benchmark::State& state) {
    auto h = fixture("h2ext-twisted");
    for (auto _ : state) {
        auto d = qhsa::compute_drinfeld_twist(h);
        benchmark::DoNotOptimize(qhsa::run_drinfeld_battery(h, d));
    }
}
BENCHMARK(BM_DrinfeldPipeline);

} // namespace

BENCHMARK_MAIN();
