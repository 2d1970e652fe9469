// Parallel kernels against their serial reference versions.

#include <benchmark/benchmark.h>

#include "substkit/arith.hpp"
#include "substkit/correlation.hpp"
#include "substkit/fixtures.hpp"
#include "substkit/reference.hpp"

using namespace substkit;

namespace {

constexpr std::uint64_t kSieveN = 20'000'000;
constexpr std::uint64_t kCorrN = 10'000'000;

void BM_MoebiusSieve(benchmark::State& state) {
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(moebius_sieve(kSieveN, workers));
  state.SetItemsProcessed(state.iterations() * kSieveN);
}

void BM_MoebiusSerialReference(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reference::moebius(kSieveN));
  state.SetItemsProcessed(state.iterations() * kSieveN);
}

struct Setup {
  FixedPointHandle handle = find_fixed_seed(load_fixture("rudin_shapiro"));
  Observable f = Observable::parse("code1:a=1,b=1,c=-1,d=-1", handle.base().alphabet()).centered(handle);
  ArithmeticFunction mu = ArithmeticFunction::moebius(kCorrN, 8);
  std::vector<std::uint64_t> checkpoints = parse_checkpoints("log10", kCorrN);
};

const Setup& setup() {
  static const Setup s;
  return s;
}

void BM_Correlate(benchmark::State& state) {
  const auto& s = setup();
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(correlate(s.handle, s.f, s.mu, kCorrN, s.checkpoints, workers));
  state.SetItemsProcessed(state.iterations() * kCorrN);
}

void BM_CorrelateSerialReference(benchmark::State& state) {
  const auto& s = setup();
  for (auto _ : state) benchmark::DoNotOptimize(reference::correlate(s.handle, s.f, s.mu, kCorrN, s.checkpoints));
  state.SetItemsProcessed(state.iterations() * kCorrN);
}

void BM_Kbsz(benchmark::State& state) {
  const auto& s = setup();
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(kbsz_cross(s.handle, s.f, 31, 37, 1'000'000, {1'000'000}, workers));
}

void BM_LetterAt(benchmark::State& state) {
  const auto& s = setup();
  std::uint64_t n = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(s.handle.letter_at(n));
    n = (n * 2862933555777941757ull + 3037000493ull) % kCorrN;
  }
}

}  // namespace

BENCHMARK(BM_MoebiusSieve)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MoebiusSerialReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Correlate)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CorrelateSerialReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Kbsz)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LetterAt);

BENCHMARK_MAIN();
