#include <benchmark/benchmark.h>

#include "arithcert/brauer.hpp"
#include "arithcert/families.hpp"
#include "arithcert/fieldforge.hpp"
#include "arithcert/intpoly.hpp"
#include "arithcert/localsym.hpp"
#include "arithcert/quadform.hpp"

using namespace arithcert;

static void BM_HilbertSweep(benchmark::State& state) {
  const Place v = Place::finite(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    int acc = 0;
    for (long a = -30; a <= 30; ++a) {
      if (a == 0) continue;
      for (long b = 1; b <= 30; ++b) acc += hilbert(Rational(a), Rational(b, 7), v);
    }
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * 60 * 30);
}
BENCHMARK(BM_HilbertSweep)->Arg(2)->Arg(3)->Arg(13);

static void BM_WittIndex(benchmark::State& state) {
  const QuadForm f({1, 2, -3, 5, -7, 11});
  for (auto _ : state) benchmark::DoNotOptimize(witt_index(f, Place::finite(3)));
}
BENCHMARK(BM_WittIndex);

static void BM_Realize(benchmark::State& state) {
  QFProfile p;
  p.dim = 5;
  p.det = -30;
  p.signature = {2, 3};
  p.hasse_negative = {Place::finite(3), Place::finite(5)};
  if (!admissible(p)) p.hasse_negative = {Place::finite(3)};
  for (auto _ : state) benchmark::DoNotOptimize(realize(p));
}
BENCHMARK(BM_Realize);

static void BM_FactorModP(benchmark::State& state) {
  const IntPoly f{3, 1, 0, 2, 0, 0, 1, 5, 0, 1};
  for (auto _ : state) benchmark::DoNotOptimize(try_factor_degrees_mod_p(f, 1'000'003));
}
BENCHMARK(BM_FactorModP);

static void BM_CertifySn(benchmark::State& state) {
  const IntPoly f{2, -4, 0, 0, 0, 1};
  for (auto _ : state) benchmark::DoNotOptimize(certify_sn(f));
}
BENCHMARK(BM_CertifySn);

static void BM_FindTypeII(benchmark::State& state) {
  SearchOptions opts;
  opts.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(find_type_II_poly(static_cast<std::uint64_t>(state.range(0)), opts));
}
BENCHMARK(BM_FindTypeII)->Args({5, 1})->Args({7, 1})->Args({7, 4})->Unit(benchmark::kMillisecond);

static void BM_DivisionPair(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(find_division_pair(static_cast<unsigned long>(state.range(0)), 2));
}
BENCHMARK(BM_DivisionPair)->Arg(3)->Arg(12);

static void BM_VerifySoFamily(benchmark::State& state) {
  const auto ds = build_so_family(6, 2, static_cast<unsigned>(state.range(0))).descriptors;
  for (auto _ : state) benchmark::DoNotOptimize(verify_family(ds));
}
BENCHMARK(BM_VerifySoFamily)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
