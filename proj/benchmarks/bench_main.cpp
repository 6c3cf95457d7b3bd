#include <benchmark/benchmark.h>

#include "gfl/io/generate.hpp"
#include "gfl/ladicdiv/ladicdiv.hpp"
#include "gfl/projgeom/projgeom.hpp"

namespace {

using namespace gfl;

void BM_IsFlagMap(benchmark::State& state) {
  const auto mu = gen::random_map(7, static_cast<int>(state.range(0)), 3, true);
  for (auto _ : state) benchmark::DoNotOptimize(flag::is_flag_map(mu));
}
BENCHMARK(BM_IsFlagMap)->Arg(3)->Arg(4)->Arg(5);

void BM_FindFlagCombination(benchmark::State& state) {
  const auto inst = gen::cpair_instance(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(flag::find_flag_combination(inst.mu, inst.mu2));
}
BENCHMARK(BM_FindFlagCombination)->Arg(2)->Arg(3);

void BM_ClassMap(benchmark::State& state) {
  const auto D = gen::class_zero_divisor(5, static_cast<int>(state.range(0)), lat::Zl(3, 2));
  for (auto _ : state) benchmark::DoNotOptimize(ladic::class_map(D));
}
BENCHMARK(BM_ClassMap)->Arg(4)->Arg(8);

void BM_Decompose(benchmark::State& state) {
  const auto D = gen::class_zero_divisor(5, static_cast<int>(state.range(0)), lat::Zl(3, 2));
  for (auto _ : state) benchmark::DoNotOptimize(ladic::dd_decompose(D));
}
BENCHMARK(BM_Decompose)->Arg(4)->Arg(8);

void BM_SubfieldSearch(benchmark::State& state) {
  const auto pair = gen::subfield_pair(static_cast<std::uint64_t>(state.range(0)), false, lat::Zl(3, 2));
  for (auto _ : state) benchmark::DoNotOptimize(ladic::gff_subfield(pair.f, pair.g));
}
BENCHMARK(BM_SubfieldSearch)->Arg(0)->Arg(1);

void BM_Coordinatize(benchmark::State& state) {
  const auto st = proj::build_pg(2, gen::field_of_order(static_cast<std::uint32_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(proj::coordinatize_plane(st));
}
BENCHMARK(BM_Coordinatize)->Arg(3)->Arg(5)->Arg(7);

void BM_PappusHall(benchmark::State& state) {
  const auto st = proj::hall_plane();
  for (auto _ : state) benchmark::DoNotOptimize(proj::check_pappus(st));
}
BENCHMARK(BM_PappusHall);

}  // namespace
BENCHMARK_MAIN();
