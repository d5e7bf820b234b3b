#include <benchmark/benchmark.h>

#include <random>

#include "vinberg/coadjoint.hpp"
#include "vinberg/group_model.hpp"
#include "vinberg/ideal_lattice.hpp"
#include "vinberg/tube_algebra.hpp"
#include "vinberg/siegel.hpp"

using namespace vinberg;

static void BM_Jacobi(benchmark::State& state) {
  const LieAlgebra& g = tube_algebra();
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_violations(g));
}
BENCHMARK(BM_Jacobi);

static void BM_VerifyModel(benchmark::State& state) {
  const LieAlgebra& g = tube_algebra();
  for (auto _ : state) benchmark::DoNotOptimize(verify_model(g));
}
BENCHMARK(BM_VerifyModel);

static void BM_EnumerateIdeals(benchmark::State& state) {
  const LieAlgebra& g = tube_algebra();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ideals(g));
}
BENCHMARK(BM_EnumerateIdeals)->Unit(benchmark::kMillisecond);

static void BM_Radical(benchmark::State& state) {
  const LieAlgebra& g = tube_algebra();
  for (auto _ : state) benchmark::DoNotOptimize(radical(g));
}
BENCHMARK(BM_Radical);

static void BM_Isotropy(benchmark::State& state) {
  const LieAlgebra& g = tube_algebra();
  const RVector xi = linear_form(g, {-1, 0, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(isotropy_algebra(g, xi));
}
BENCHMARK(BM_Isotropy);

static void BM_ExactInverse(benchmark::State& state) {
  std::mt19937_64 rng(42);
  const GroupElement g = GroupElement::from_params(random_group_params(rng));
  for (auto _ : state) benchmark::DoNotOptimize(g.inverse());
}
BENCHMARK(BM_ExactInverse);

static void BM_AdjointMap(benchmark::State& state) {
  std::mt19937_64 rng(42);
  const GroupElement g = GroupElement::from_params(random_group_params(rng));
  for (auto _ : state) benchmark::DoNotOptimize(adjoint_map(g));
}
BENCHMARK(BM_AdjointMap);

static void BM_SiegelAct(benchmark::State& state) {
  std::mt19937_64 rng(42);
  const Matrix6d g = to_double(GroupElement::from_params(random_group_params(rng)).matrix());
  const SiegelPoint z = random_siegel_point(rng);
  for (auto _ : state) benchmark::DoNotOptimize(act(g, z));
}
BENCHMARK(BM_SiegelAct);

static void BM_ExpAlgebra(benchmark::State& state) {
  std::array<double, 12> c{};
  for (std::size_t k = 0; k < 12; ++k) c[k] = 0.1 * static_cast<double>(k) - 0.5;
  for (auto _ : state) benchmark::DoNotOptimize(exp_algebra(c));
}
BENCHMARK(BM_ExpAlgebra);
BENCHMARK_MAIN();
