#include <benchmark/benchmark.h>

#include "reflen/reflen.hpp"

using namespace reflen;
using namespace reflen::oracle;

namespace {

Field field_of(std::int64_t p) { return p == 0 ? Field::rationals() : Field::prime(static_cast<std::uint32_t>(p)); }

void BM_Rank(benchmark::State& state) {
  Rng rng(1);
  const Field f = field_of(state.range(0));
  const Matrix m = random_invertible(f, static_cast<std::size_t>(state.range(1)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(rank(minus_identity(m)));
}
BENCHMARK(BM_Rank)->ArgsProduct({{5, 0}, {4, 8, 16}});

void BM_FactorMinimalGl(benchmark::State& state) {
  Rng rng(2);
  const Field f = field_of(state.range(0));
  const Matrix m = random_invertible(f, static_cast<std::size_t>(state.range(1)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(factor_minimal_gl(m));
}
BENCHMARK(BM_FactorMinimalGl)->ArgsProduct({{5, 0}, {4, 8}});

void BM_FactorMinimalAffine(benchmark::State& state) {
  Rng rng(3);
  const Field f = field_of(state.range(0));
  const AffineMap g = random_affine(f, static_cast<std::size_t>(state.range(1)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(factor_minimal_affine(g));
}
BENCHMARK(BM_FactorMinimalAffine)->ArgsProduct({{2, 5, 0}, {3, 6}});

void BM_Enumerate(benchmark::State& state) {
  const auto kind = state.range(0) ? GroupKind::GA : GroupKind::GL;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_group(kind, 3, 2));
}
BENCHMARK(BM_Enumerate)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

// The BFS frontier loop over GA_3(F_2) and GL_3(F_3).
void BM_Bfs(benchmark::State& state) {
  const GroupTable t = state.range(0) ? enumerate_group(GroupKind::GA, 3, 2) : enumerate_group(GroupKind::GL, 3, 3);
  const auto gens = reflections_of(t);
  for (auto _ : state) benchmark::DoNotOptimize(bfs_lengths(t, gens));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * t.size()));
}
BENCHMARK(BM_Bfs)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_VerifyGa32(benchmark::State& state) {
  const GroupTable t = enumerate_group(GroupKind::GA, 2, 3);
  VerifyOptions o;
  o.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_formulas(t, o));
}
BENCHMARK(BM_VerifyGa32)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
