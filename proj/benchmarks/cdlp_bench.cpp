#include <benchmark/benchmark.h>

#include "cdlp/attacks.hpp"
#include "cdlp/complexity.hpp"
#include "cdlp/generic_group.hpp"
#include "cdlp/menelaus.hpp"
#include "cdlp/sets.hpp"

namespace cdlp {
namespace {

void BM_OracleQuery(benchmark::State& state) {
  const PrimeModulus p(1000003);
  DlpInstance inst(p, 12345, Seed{1});
  u64 a = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(inst.query(inst.target(), inst.generator(), a, 7));
    a = a * 31 % p.value();
  }
}
BENCHMARK(BM_OracleQuery);

void BM_BsgsInterval(benchmark::State& state) {
  const PrimeModulus p(static_cast<u64>(state.range(0)));
  u64 seed = 0;
  for (auto _ : state) {
    DlpInstance inst(p, seed % p.value(), Seed{seed});
    benchmark::DoNotOptimize(bsgs_interval_attack(inst, 0, p.value()));
    ++seed;
  }
}
BENCHMARK(BM_BsgsInterval)->Arg(10007)->Arg(1000003);

void BM_TwelveDet(benchmark::State& state) {
  const PrimeModulus p(10007);
  const TwelvePoints pts = grid_points(p, sample_grid(p, Seed{3}, false));
  for (auto _ : state) benchmark::DoNotOptimize(twelve_det(p, pts));
}
BENCHMARK(BM_TwelveDet);

void BM_TwelveCrossCheck(benchmark::State& state) {
  const PrimeModulus p(10007);
  const TwelvePoints pts = grid_points(p, sample_grid(p, Seed{3}, false));
  for (auto _ : state) benchmark::DoNotOptimize(twelve_det_cross_check(p, pts));
}
BENCHMARK(BM_TwelveCrossCheck);

void BM_ExactComplexity(benchmark::State& state) {
  const auto kind = static_cast<ComplexityKind>(state.range(0));
  const ConstrainedSet s(PrimeModulus(7), {0, 1, 3, 5});
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_complexity(s, Fraction(1, 1), kind));
  }
  state.SetLabel(std::string(kind_name(kind)));
}
BENCHMARK(BM_ExactComplexity)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_CheckTwelveRandomized(benchmark::State& state) {
  const PrimeModulus p(1000003);
  const ConstrainedSet s = sample_snk(p, 16, 12, Seed{4}).set;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        check_twelve(s, CheckMode::kRandomized, 1000, Seed{5}));
  }
}
BENCHMARK(BM_CheckTwelveRandomized)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace cdlp

BENCHMARK_MAIN();
