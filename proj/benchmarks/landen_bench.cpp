#include <benchmark/benchmark.h>

static void BM_Noop(benchmark::State& state) {
  for (auto _ : state) {
  }
}
BENCHMARK(BM_Noop);

int main(int argc, char** argv) {
  ::benchmark::Initialize(&argc, argv);
  if (::benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  ::benchmark::RunSpecifiedBenchmarks();
  ::benchmark::Shutdown();
  return 0;
}
