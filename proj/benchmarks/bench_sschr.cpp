#include <benchmark/benchmark.h>

#include "sschr/quotient.hpp"
#include "sschr/realization.hpp"

using namespace sschr;

namespace {

LowestWeight n1(Rational d, Rational m) { return {AlgebraKind::ssch1, d, m, 0, std::nullopt}; }
LowestWeight n2(Rational d, Rational m, Rational r) { return {AlgebraKind::ssch2, d, m, r, std::nullopt}; }

}  // namespace

static void SuperJacobi(benchmark::State& state) {
    const StructureTable table = buildAlgebra(AlgebraKind::ssch2);
    for (auto _ : state) benchmark::DoNotOptimize(verifySuperJacobi(table));
}
BENCHMARK(SuperJacobi);

static void NormalOrderN2(benchmark::State& state) {
    const std::vector<std::string> word{"Q+", "S-", "K", "G", "X+", "Q-", "S+", "G"};
    for (auto _ : state) {
        VermaModule mod(n2(Rational(3, 2), 1, Rational(1, 3)));
        benchmark::DoNotOptimize(mod.normalOrder(word));
    }
}
BENCHMARK(NormalOrderN2);

static void FindSingularN1(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(findSingular(n1(Rational(2 * p - 1, 2), 1), 2 * p + 2));
}
BENCHMARK(FindSingularN1)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void FindSingularN2(benchmark::State& state) {
    const int maxDegree = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(findSingular(n2(Rational(5, 2), 1, 0), maxDegree));
}
BENCHMARK(FindSingularN2)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void ClassifyMassless(benchmark::State& state) {
    const int l = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(classify(n2(l, 0, -l), 2 * l + 4));
}
BENCHMARK(ClassifyMassless)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void GramDeterminant(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        VermaModule mod(n1(Rational(1, 3), 1));
        benchmark::DoNotOptimize(gram(mod, {n}, n));
    }
}
BENCHMARK(GramDeterminant)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void RealizationRelations(benchmark::State& state) {
    const Realization rz = buildRealization(AlgebraKind::ssch2, 1, 2);
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verifyRelations(rz, rz.table, degree));
}
BENCHMARK(RealizationRelations)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
