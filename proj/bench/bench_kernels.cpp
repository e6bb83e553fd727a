// Serial reference vs OpenMP residue kernels.

#include <benchmark/benchmark.h>

#include "quatalg/funcfield_fp.hpp"
#include "quatalg/funcfield_q.hpp"
#include "quatalg/properties.hpp"

using namespace quatalg;

namespace {

// f and g with many distinct irreducible factors, so there are many places.
QuaternionFF many_places_q(int factors) {
  gen::Rng rng(17);
  PolyQ f = PolyQ::constant(3), g = PolyQ::constant(-2);
  for (int i = 0; i < factors; ++i) {
    (i % 2 ? f : g) *= gen::irreducible_q(rng, 2 + i % 3, 5);
  }
  return {FactoredFunc::from_poly(f), FactoredFunc::from_poly(g)};
}

QuaternionFFp many_places_fp(std::uint64_t p, int degree) {
  gen::Rng rng(23);
  PolyFp f = gen::poly_fp(rng, p, degree), g = gen::poly_fp(rng, p, degree);
  while (f.degree() < degree / 2) f = gen::poly_fp(rng, p, degree);
  while (g.degree() < degree / 2) g = gen::poly_fp(rng, p, degree);
  return {FactoredFuncFp::from_poly(f), FactoredFuncFp::from_poly(g)};
}

void BM_ResidueTableSerial(benchmark::State& state) {
  const QuaternionFF d = many_places_q(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(residue_table_serial(d));
}

void BM_ResidueTableParallel(benchmark::State& state) {
  const QuaternionFF d = many_places_q(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(residue_table(d));
}

void BM_ClassFpSerial(benchmark::State& state) {
  const QuaternionFFp d = many_places_fp(1000003, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(class_fp_serial(d));
}

void BM_ClassFpParallel(benchmark::State& state) {
  const QuaternionFFp d = many_places_fp(1000003, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(class_fp(d));
}

}  // namespace

BENCHMARK(BM_ResidueTableSerial)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ResidueTableParallel)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassFpSerial)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassFpParallel)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
