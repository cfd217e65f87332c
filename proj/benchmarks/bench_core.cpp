#include <benchmark/benchmark.h>

#include <powfactor/engine.hpp>
#include <powfactor/shifted_eval.hpp>

#include <variant>

using namespace powfactor;

namespace {

// 2^61 - 1 keeps every window element invertible.
const Modulus& bench_modulus() {
  static const Modulus mod{(mpz_class(1) << 61) - 1};
  return mod;
}

void BM_EvalShifted(benchmark::State& state) {
  const auto e = static_cast<unsigned>(state.range(0));
  const auto plan = std::get<EvalPlan>(build_eval_plan(bench_modulus(), e, mpz_class(-7)));
  const LinearPoly h{mpz_class(12345)};
  for (auto _ : state) benchmark::DoNotOptimize(eval_shifted_factorials(h, plan));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(plan.k));
}
BENCHMARK(BM_EvalShifted)->DenseRange(4, 10, 2)->Complexity();

void BM_NaiveEval(benchmark::State& state) {
  const auto k = static_cast<std::uint64_t>(1) << state.range(0);
  const auto points = progression_points(bench_modulus(), mpz_class(-7), k);
  const LinearPoly h{mpz_class(12345)};
  for (auto _ : state) benchmark::DoNotOptimize(naive_eval(bench_modulus(), h, k, points));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(k));
}
BENCHMARK(BM_NaiveEval)->DenseRange(4, 10, 2)->Complexity();

void BM_SpecialForm(benchmark::State& state) {
  const SpecialForm form{2, 1, static_cast<std::uint64_t>(state.range(0)), Sign::Minus};
  for (auto _ : state) benchmark::DoNotOptimize(special_form_factor(form));
}
BENCHMARK(BM_SpecialForm)->Arg(49)->Arg(59)->Arg(67)->Unit(benchmark::kMillisecond);

void BM_ResidueVersusBaseline(benchmark::State& state) {
  const mpz_class n = (mpz_class(1) << 59) - 1;
  const ResidueInfo info{static_cast<std::uint64_t>(state.range(0)), 1};
  for (auto _ : state) benchmark::DoNotOptimize(factor_with_residue(n, info));
}
BENCHMARK(BM_ResidueVersusBaseline)->Arg(2)->Arg(59)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
