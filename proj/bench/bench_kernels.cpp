// Serial reference kernels against their OpenMP versions, and naive against
// recursive plans.  Multiplication counts are reported as counters.

#include <benchmark/benchmark.h>

#include <random>

#include "fmm/catalog.hpp"
#include "fmm/compose.hpp"

using namespace fmm;

namespace {

MatrixOf<Float64> random_f64(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  MatrixOf<Float64> m(n, n, 0.0);
  for (auto& x : m.data()) x = d(rng);
  return m;
}

MatrixOf<PrimeField> random_fp(std::size_t n, std::uint64_t p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  MatrixOf<PrimeField> m(n, n, 0);
  for (auto& x : m.data()) x = rng() % p;
  return m;
}

Execution exec_of(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::Serial : Execution::Parallel;
}

void BM_NaiveF64(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto a = random_f64(n, 1), b = random_f64(n, 2);
  Float64 ring;
  for (auto _ : state) benchmark::DoNotOptimize(naive_multiply(ring, a, b, exec_of(state)));
  state.counters["mults"] = static_cast<double>(n * n * n);
}

template <const char* Plan>
void BM_RecursiveF64(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto a = random_f64(n, 1), b = random_f64(n, 2);
  const auto plan = parse_plan(Plan);
  RingContext<Float64> ctx(Float64{}, 1);
  MulCounter counter;
  for (auto _ : state) {
    counter.reset();
    benchmark::DoNotOptimize(recursive_multiply(a, b, plan, ctx, &counter, exec_of(state)));
  }
  state.counters["mults"] = static_cast<double>(counter.value());
}

void BM_RecursiveF101(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  PrimeField f(101);
  auto a = random_fp(n, 101, 1), b = random_fp(n, 101, 2);
  const auto plan = parse_plan("makarov99,strassen,cutoff=16");
  RingContext<PrimeField> ctx(f, 1);
  for (auto _ : state) benchmark::DoNotOptimize(recursive_multiply(a, b, plan, ctx, nullptr, exec_of(state)));
}

void BM_VerifyBrent(benchmark::State& state) {
  const auto s = makarov_sedoglavic_5x5x5_99();
  for (auto _ : state) benchmark::DoNotOptimize(verify_brent(s, exec_of(state)));
}

void BM_VerifyBasis(benchmark::State& state) {
  const auto s = makarov_sedoglavic_5x5x5_99();
  for (auto _ : state) benchmark::DoNotOptimize(verify_basis_oracle(s, RingSpec::rationals(2), exec_of(state)));
}

constexpr char kMakarov[] = "makarov99,cutoff=32";
constexpr char kMakarovStrassen[] = "makarov99,strassen,cutoff=32";
constexpr char kStrassen3[] = "strassen,strassen,strassen,cutoff=32";

}  // namespace

BENCHMARK(BM_NaiveF64)->ArgsProduct({{100, 200, 400}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RecursiveF64<kMakarov>)->ArgsProduct({{100, 200, 400}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RecursiveF64<kMakarovStrassen>)->ArgsProduct({{100, 200, 400}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RecursiveF64<kStrassen3>)->ArgsProduct({{100, 200, 400}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RecursiveF101)->ArgsProduct({{160}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyBrent)->ArgsProduct({{0}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyBasis)->ArgsProduct({{0}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
