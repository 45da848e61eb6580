#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "seqcpd/detectors.hpp"
#include "seqcpd/dominance.hpp"
#include "seqcpd/multiplier.hpp"
#include "seqcpd/threshold.hpp"
#include "seqcpd/types.hpp"

using namespace seqcpd;

namespace {

ObservationMatrix random_data(std::size_t rows, std::size_t cols,
                              std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  ObservationMatrix x(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) x(i, j) = unif(gen);
  return x;
}

void BM_DetectorStep(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  const std::size_t n = 2 * m;
  const ObservationMatrix x = random_data(n, 1, 1);
  DominanceState s(x);
  MonitorConfig cfg;
  cfg.m = m;
  cfg.n = n;
  cfg.detector = DetectorKind::T;
  for (auto _ : state) benchmark::DoNotOptimize(compute_detector(s, cfg, n));
}
BENCHMARK(BM_DetectorStep)->Arg(50)->Arg(100)->Arg(200);

void BM_DetectorPathBatch(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  const std::size_t n = 2 * m;
  const ObservationMatrix x = random_data(n, 1, 2);
  DominanceState s(x);
  const std::vector<DetectorSpec> specs{{DetectorKind::R, 0.0},
                                        {DetectorKind::S, 0.0},
                                        {DetectorKind::T, 0.0},
                                        {DetectorKind::T, 0.5}};
  for (auto _ : state)
    benchmark::DoNotOptimize(detector_paths_batch(s, m, n, specs, 1e-4));
}
BENCHMARK(BM_DetectorPathBatch)->Arg(50)->Arg(100);

void BM_ReplicatePath(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  const ObservationMatrix x = random_data(m, 1, 3);
  MonitorConfig cfg;
  cfg.m = m;
  cfg.n = 2 * m;
  cfg.detector = DetectorKind::T;
  MultiplierConfig mult;
  mult.B = 1;
  mult.seed = 7;
  for (auto _ : state)
    benchmark::DoNotOptimize(replicate_paths(x, cfg, mult));
}
BENCHMARK(BM_ReplicatePath)->Arg(100)->Arg(200);

void BM_McThreshold(benchmark::State& state) {
  MonitorConfig cfg;
  cfg.m = 50;
  cfg.n = 100;
  cfg.detector = DetectorKind::T;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        mc_threshold(cfg, static_cast<std::size_t>(state.range(0)), 11));
}
BENCHMARK(BM_McThreshold)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
