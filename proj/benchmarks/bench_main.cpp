#include <benchmark/benchmark.h>

#include "zetaforge/catalog.hpp"
#include "zetaforge/seriesengine.hpp"
#include "zetaforge/startransform.hpp"
#include "zetaforge/stirling1.hpp"

using namespace zetaforge;

namespace {

const Params p21(Rational(2), Rational(1));

void BM_Triangle(benchmark::State& state) {
  for (auto _ : state) {
    const Triangle t = build_triangle(state.range(0), p21);
    benchmark::DoNotOptimize(t.entry(t.n_max(), 1));
  }
}
BENCHMARK(BM_Triangle)->Arg(8)->Arg(64)->Arg(256);

// Fresh table each iteration: fills column k+2 through row j by recurrence.
void BM_StarColumn(benchmark::State& state) {
  for (auto _ : state) {
    const StarTable<Rational> t(p21);
    benchmark::DoNotOptimize(t.entry(5, state.range(0)));
  }
}
BENCHMARK(BM_StarColumn)->Arg(50)->Arg(200)->Arg(400);

void BM_StarDefinition(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(star_coeff(5, state.range(0), p21));
}
BENCHMARK(BM_StarDefinition)->Arg(50)->Arg(200);

void BM_GeometricTransform(benchmark::State& state) {
  const EvalSpec spec(state.range(0), 4 * state.range(0));
  const BigFloat z(-1L, spec.working_precision());
  for (auto _ : state) benchmark::DoNotOptimize(geometric_transform(2, p21, z, spec).value);
}
BENCHMARK(BM_GeometricTransform)->Arg(128)->Arg(256)->Arg(512);

void BM_LerchRtilde(benchmark::State& state) {
  const EvalSpec spec(state.range(0), 4 * state.range(0));
  const BigFloat z(-1L, spec.working_precision());
  const Params p(Rational(3), Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(lerch_phi_rtilde<Rational>(z, 3, p, spec).value);
}
BENCHMARK(BM_LerchRtilde)->Arg(128)->Arg(256);

void BM_ExponentialTransform(benchmark::State& state) {
  const EvalSpec spec(128);
  const BigFloat one(1L, spec.working_precision());
  for (auto _ : state) benchmark::DoNotOptimize(exponential_transform(3, p21, one, one, spec).value);
}
BENCHMARK(BM_ExponentialTransform);

void BM_Identity(benchmark::State& state, const char* id) {
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_identity(id).abs_err);
}
BENCHMARK_CAPTURE(BM_Identity, beta2, "beta2")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Identity, quad_s3, "quad_s3")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Identity, zeta3_cot, "zeta3_cot")->Unit(benchmark::kMillisecond);

void BM_CatalogRequired(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_all(Tier::required).size());
}
BENCHMARK(BM_CatalogRequired)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace

BENCHMARK_MAIN();
