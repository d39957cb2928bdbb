#include <benchmark/benchmark.h>

#include <random>

#include "hgsi/kernels.hpp"
#include "hgsi/probmodel.hpp"
#include "hgsi/synth.hpp"

namespace {

using namespace hgsi;

FeatureMatrix features(std::size_t n, std::size_t d) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  std::vector<double> data(n * d);
  for (auto& v : data) v = g(rng);
  return FeatureMatrix(n, d, std::move(data));
}

template <auto Kernel>
void BM_pairwise(benchmark::State& state) {
  const auto x = features(static_cast<std::size_t>(state.range(0)), 1000);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(x));
}

template <auto Kernel>
void BM_neighbours(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto d = kernels::serial::pairwise_sq_distances(features(n, 64));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(d, n, 7));
}

template <auto Kernel>
void BM_score(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x = features(n, 1000);
  const auto nn = kernels::serial::nearest_neighbours(kernels::serial::pairwise_sq_distances(x), n, 7);
  std::vector<Edge> sets;
  for (std::size_t a = 0; a < n; ++a) {
    Edge e = nn[a];
    e.push_back(a);
    std::sort(e.begin(), e.end());
    sets.push_back(std::move(e));
  }
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(sets, x, SmoothnessVariant::max()));
}

template <auto Kernel>
void BM_solve(benchmark::State& state) {
  SynthConfig cfg;
  cfg.n = static_cast<Index>(state.range(0));
  cfg.edge_spec = {{8, cfg.n / 8}};
  const auto L = incidence_laplacian(generate_ground_truth(cfg));
  Eigen::MatrixXd p = L.matrix;
  p.diagonal().array() += 1e-6;
  const Eigen::MatrixXd lower = p.llt().matrixL();
  const Eigen::MatrixXd rhs = Eigen::MatrixXd::Random(p.rows(), 1000);
  for (auto _ : state) {
    Eigen::MatrixXd z = rhs;
    Kernel(lower, z);
    benchmark::DoNotOptimize(z.data());
  }
}

BENCHMARK(BM_pairwise<kernels::serial::pairwise_sq_distances>)->Name("pairwise/serial")->Arg(100)->Arg(400);
BENCHMARK(BM_pairwise<kernels::parallel::pairwise_sq_distances>)->Name("pairwise/omp")->Arg(100)->Arg(400);
BENCHMARK(BM_neighbours<kernels::serial::nearest_neighbours>)->Name("knn/serial")->Arg(100)->Arg(400);
BENCHMARK(BM_neighbours<kernels::parallel::nearest_neighbours>)->Name("knn/omp")->Arg(100)->Arg(400);
BENCHMARK(BM_score<kernels::serial::score_sets>)->Name("score/serial")->Arg(100)->Arg(400);
BENCHMARK(BM_score<kernels::parallel::score_sets>)->Name("score/omp")->Arg(100)->Arg(400);
BENCHMARK(BM_solve<kernels::serial::back_substitute_columns>)->Name("solve/serial")->Arg(100)->Arg(400);
BENCHMARK(BM_solve<kernels::parallel::back_substitute_columns>)->Name("solve/omp")->Arg(100)->Arg(400);

}  // namespace

BENCHMARK_MAIN();
