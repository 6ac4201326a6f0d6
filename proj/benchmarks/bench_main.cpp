#include "infsub/bch.hpp"
#include "infsub/dist.hpp"
#include "infsub/heisenberg.hpp"
#include "infsub/oneparam.hpp"
#include "infsub/rootdata.hpp"

#include <benchmark/benchmark.h>

using namespace infsub;

namespace {

void BM_Lift(benchmark::State &state) {
  const Field f = Field::prime(static_cast<unsigned>(state.range(0)));
  const auto r = static_cast<unsigned>(state.range(1));
  const CommutingTuple t = random_commuting_tuple(f, 3, r, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(lift(t));
}
BENCHMARK(BM_Lift)->Args({3, 2})->Args({5, 2})->Args({5, 3})->Args({7, 2});

void BM_Decompose(benchmark::State &state) {
  const Field f = Field::prime(static_cast<unsigned>(state.range(0)));
  const auto r = static_cast<unsigned>(state.range(1));
  const PolyMatrix phi = lift(random_commuting_tuple(f, 3, r, 1)).poly();
  for (auto _ : state)
    benchmark::DoNotOptimize(decompose(phi));
}
BENCHMARK(BM_Decompose)->Args({3, 2})->Args({5, 2})->Args({5, 3});

void BM_VerifyHomomorphism(benchmark::State &state) {
  const Field f = Field::prime(static_cast<unsigned>(state.range(0)));
  const auto r = static_cast<unsigned>(state.range(1));
  const PolyMatrix phi = lift(random_commuting_tuple(f, 3, r, 1)).poly();
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_homomorphism(phi));
}
BENCHMARK(BM_VerifyHomomorphism)->Args({3, 2})->Args({5, 2})->Args({5, 3});

void BM_ExpLog(benchmark::State &state) {
  const Field f = Field::prime(97);
  SplitMix64 rng(1);
  const Matrix x = random_strict_upper(f, static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(log_p(exp_p(x)));
}
BENCHMARK(BM_ExpLog)->Arg(4)->Arg(8)->Arg(16);

void BM_BchProduct(benchmark::State &state) {
  const Field f = Field::prime(7);
  const UnipotentRadicalModel m(f, std::vector<std::size_t>(static_cast<std::size_t>(state.range(0)), 1));
  SplitMix64 rng(2);
  const BCHElement x(m, m.random_element(rng)), y(m, m.random_element(rng));
  for (auto _ : state)
    benchmark::DoNotOptimize(bch_mul(m, x, y));
}
BENCHMARK(BM_BchProduct)->Arg(3)->Arg(5)->Arg(7);

void BM_PrettyGood(benchmark::State &state) {
  const RootDatum d = builtin_datum(state.range(0) == 0 ? "SL3" : "G2");
  for (auto _ : state)
    benchmark::DoNotOptimize(is_pretty_good(d, 5));
}
BENCHMARK(BM_PrettyGood)->Arg(0)->Arg(1);

void BM_HopfEnumeration(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_hopf_maps(3, 2));
}
BENCHMARK(BM_HopfEnumeration)->Unit(benchmark::kMillisecond);

void BM_DistCheck(benchmark::State &state) {
  const Field f = Field::prime(3);
  for (auto _ : state)
    benchmark::DoNotOptimize(dist_check(f, 3, 0, 0));
}
BENCHMARK(BM_DistCheck)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
