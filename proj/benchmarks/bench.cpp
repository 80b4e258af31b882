#include <benchmark/benchmark.h>

#include "indpro/harness.hpp"
#include "indpro/linalg.hpp"
#include "indpro/rng.hpp"
#include "indpro/tate.hpp"
#include "indpro/windows.hpp"

using namespace indpro;

namespace {

void BM_rank(benchmark::State& state) {
  PrimeField k(65521);
  Rng rng(1);
  Mat m = random_mat(rng, k, int(state.range(0)), int(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank(m));
  }
}
BENCHMARK(BM_rank)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_kernel(benchmark::State& state) {
  PrimeField k(3);
  Rng rng(2);
  Mat m = random_mat(rng, k, int(state.range(0)), int(state.range(0)) * 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel(m));
  }
}
BENCHMARK(BM_kernel)->Arg(8)->Arg(32);

void BM_is_kato_laurent(benchmark::State& state) {
  int span = int(state.range(0));
  PiWindow w = laurent_window(LaurentSpec{2, -span / 2, span - span / 2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_kato(w).ok);
  }
}
BENCHMARK(BM_is_kato_laurent)->Arg(4)->Arg(8);

void BM_square_ses_roundtrip(benchmark::State& state) {
  int span = int(state.range(0));
  PiWindow w = laurent_window(LaurentSpec{3, 0, span});
  for (auto _ : state) {
    benchmark::DoNotOptimize(square_ses_roundtrip(w));
  }
}
BENCHMARK(BM_square_ses_roundtrip)->Arg(4)->Arg(8);

void BM_strictify_pro(benchmark::State& state) {
  PrimeField k(5);
  Rng rng(3);
  int len = int(state.range(0));
  std::vector<int> dims;
  std::vector<Mat> maps;
  for (int i = 0; i <= len; ++i) dims.push_back(5);
  for (int i = 0; i < len; ++i) maps.push_back(random_mat(rng, k, 5, 5));
  ProWindow y(k, dims, maps);
  for (auto _ : state) {
    benchmark::DoNotOptimize(strictify_pro(y));
  }
}
BENCHMARK(BM_strictify_pro)->Arg(4)->Arg(8);

void BM_extension_roundtrip(benchmark::State& state) {
  PiWindow x = random_kato_window(2, -2, 2, 3, 11);
  PiWindow z = random_kato_window(2, -2, 2, 3, 12);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    harness::Extension e = harness::gen_extension(x, z, seed++);
    benchmark::DoNotOptimize(is_kato(e.total).ok);
  }
}
BENCHMARK(BM_extension_roundtrip);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
