#include <benchmark/benchmark.h>

#include "casimir/modes.hpp"
#include "casimir/specfun.hpp"
#include "casimir/spheroidal.hpp"
#include "casimir/zeta.hpp"
#include "casimir/zeta_family.hpp"

using namespace casimir;

static void BM_BesselArray(benchmark::State& st) {
  const int lmax = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(specfun::sph_bessel_j_array(lmax, 17.3));
}
BENCHMARK(BM_BesselArray)->Arg(20)->Arg(200);

static void BM_BesselILogDeriv(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(specfun::sph_bessel_i_logderiv(40, 3.7));
}
BENCHMARK(BM_BesselILogDeriv);

static void BM_LambdaEigenvalue(benchmark::State& st) {
  const double g2 = static_cast<double>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(spheroidal::lambda_eigenvalue(5, 2, g2));
}
BENCHMARK(BM_LambdaEigenvalue)->Arg(1)->Arg(16);

static void BM_RadialKind3(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(spheroidal::radial_S(3, 2, 1, 1.5, 4.0));
}
BENCHMARK(BM_RadialKind3);

static void BM_RemainderZeta(benchmark::State& st) {
  const int l = static_cast<int>(st.range(0));
  for (auto _ : st)
    benchmark::DoNotOptimize(zeta::remainder_zeta(zeta::Family::dirichlet, zeta::Side::interior, l));
}
BENCHMARK(BM_RemainderZeta)->Arg(1)->Arg(100);

static void BM_SphereZeta(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(zeta::sphere_zeta_dirichlet_interior());
}
BENCHMARK(BM_SphereZeta)->Unit(benchmark::kMillisecond);

static void BM_SpheroidalRoot(benchmark::State& st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(modes::spheroidal_root(2, 1, 1, 0.05, modes::ModeBC::dirichlet));
}
BENCHMARK(BM_SpheroidalRoot)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
