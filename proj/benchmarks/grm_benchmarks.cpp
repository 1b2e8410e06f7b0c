#include <benchmark/benchmark.h>

#include <random>

#include "grm/coset_search.hpp"
#include "grm/distance_kernel.hpp"
#include "grm/odometer.hpp"
#include "grm/polynomial_text.hpp"
#include "grm/rm_codes.hpp"

namespace {

using namespace grm;

std::vector<Elem> random_values(std::uint64_t q, int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Elem> v(checked_power(q, m));
  for (auto& x : v) x = Elem(rng() % q);
  return v;
}

// args: q, m
void BM_KernelDistance(benchmark::State& state) {
  const auto q = std::uint64_t(state.range(0));
  const int m = int(state.range(1));
  const DistanceKernel kernel(field_of_order(q), m);
  const auto v = random_values(q, m, 1);
  for (auto _ : state) benchmark::DoNotOptimize(kernel.distance(v));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_KernelDistance)->Args({3, 3})->Args({2, 6})->Args({3, 5})->Args({4, 3})->Args({2, 10});

// Threshold 16 at q = 3, m = 3 rejects most functions after a few lambdas.
void BM_KernelAtLeast(benchmark::State& state) {
  const DistanceKernel kernel(field_of_order(3), 3);
  std::vector<std::vector<Elem>> samples;
  for (std::uint64_t s = 0; s < 64; ++s) samples.push_back(random_values(3, 3, s));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(kernel.at_least(samples[i++ & 63], 16));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_KernelAtLeast);

void BM_OracleDistance(benchmark::State& state) {
  const FunctionTable t{field_of_order(3), 3, random_values(3, 3, 2)};
  for (auto _ : state) benchmark::DoNotOptimize(distance_to_first_order_oracle(t));
}
BENCHMARK(BM_OracleDistance);

void BM_OdometerAdvance(benchmark::State& state) {
  const auto spec = named_space("deg4");
  CosetOdometer odo(spec.field, spec.m, spec.monomials, spec.radices(), spec.fixed);
  for (auto _ : state) {
    odo.advance();
    benchmark::DoNotOptimize(odo.values().data());
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_OdometerAdvance);

// Whole engine on a capped run of the degree-5 slice.
void BM_EnumerateCosets(benchmark::State& state) {
  const auto spec = named_space("deg5-slice");
  SearchOptions opts;
  opts.max_cosets = std::uint64_t(state.range(0));
  std::uint64_t examined = 0;
  for (auto _ : state) {
    const auto r = enumerate_cosets(spec, opts);
    examined += r.cosets_examined;
    benchmark::DoNotOptimize(r.checksum);
  }
  state.SetItemsProcessed(std::int64_t(examined));
}
BENCHMARK(BM_EnumerateCosets)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

void BM_LiftedWitnessDistance(benchmark::State& state) {
  const auto v0 = truth_table(parse_polynomial("y^2+x*y+y^2*z+x*y*z+y^2*z^2+x^2*z^2", field_of_order(3), 3));
  const auto u = lift_witness(v0);
  for (auto _ : state) benchmark::DoNotOptimize(distance_to_first_order(u));
}
BENCHMARK(BM_LiftedWitnessDistance);

}  // namespace

BENCHMARK_MAIN();
