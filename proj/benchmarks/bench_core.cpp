#include <benchmark/benchmark.h>

#include <vector>

#include "primod/crt.hpp"
#include "primod/oracle.hpp"
#include "primod/wheel.hpp"

using namespace primod;

namespace {

std::vector<std::uint64_t> classification_primes(const PrimeLevel& level) {
  const auto root = isqrt(level.primorial()).convert_to<std::uint64_t>();
  return oracle::sieve(std::max<std::uint64_t>(root + 1, 2)).primes();
}

void BM_MakeLevel(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(make_level(n));
  }
}
BENCHMARK(BM_MakeLevel)->Arg(4)->Arg(8)->Arg(16);

void BM_BasisBuild(benchmark::State& state) {
  auto level = make_level(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    CrtBasis basis(level);
    benchmark::DoNotOptimize(basis.coefficients().data());
  }
}
BENCHMARK(BM_BasisBuild)->Arg(4)->Arg(8)->Arg(16);

void BM_Reconstruct(benchmark::State& state) {
  auto level = make_level(static_cast<unsigned>(state.range(0)));
  auto basis = crt_basis(level);
  std::vector<ResidueTuple> tuples;
  auto stream = CoprimeEnumerator::full(level);
  while (auto t = stream.next()) {
    tuples.push_back(*t);
    if (tuples.size() == 1024) break;
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(reconstruct(tuples[i], *basis).value());
    i = (i + 1) % tuples.size();
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Reconstruct)->Arg(4)->Arg(6)->Arg(8);

void BM_EnumerateTuples(benchmark::State& state) {
  auto level = make_level(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    std::uint64_t count = 0;
    auto stream = CoprimeEnumerator::full(level);
    while (auto t = stream.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(state.iterations() *
                          coprime_count(*level).convert_to<std::int64_t>());
}
BENCHMARK(BM_EnumerateTuples)->Arg(4)->Arg(6)->Arg(7);

void BM_EnumerateClassify(benchmark::State& state) {
  auto level = make_level(static_cast<unsigned>(state.range(0)));
  auto basis = crt_basis(level);
  auto primes = classification_primes(*level);
  for (auto _ : state) {
    std::uint64_t primes_found = 0;
    auto stream = CoprimeEnumerator::full(level);
    while (auto t = stream.next()) {
      if (classify(*t, *basis, primes).kind == CandidateKind::prime) ++primes_found;
    }
    benchmark::DoNotOptimize(primes_found);
  }
  state.SetItemsProcessed(state.iterations() *
                          coprime_count(*level).convert_to<std::int64_t>());
}
BENCHMARK(BM_EnumerateClassify)->Arg(4)->Arg(6);

void BM_Sieve(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    oracle::SieveTable table(limit);
    benchmark::DoNotOptimize(table.limit());
  }
}
BENCHMARK(BM_Sieve)->Arg(30030)->Arg(1'000'000);

void BM_OracleCoprimeList(benchmark::State& state) {
  auto level = make_level(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::coprime_list(*level));
  }
}
BENCHMARK(BM_OracleCoprimeList)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
