#include <benchmark/benchmark.h>

#include "poisonlab/core.hpp"
#include "poisonlab/kernels.hpp"

using namespace poisonlab;

namespace {

struct Problem {
  Matrix X;
  std::vector<double> y;
  std::vector<double> alpha;
  Matrix g;
};

Problem make_problem(std::size_t n, std::size_t D) {
  SeededRng rng(7);
  Problem p{Matrix(n, D), std::vector<double>(n), std::vector<double>(D), Matrix(n, D)};
  rng.fill_normal(p.X.data());
  rng.fill_normal(p.y);
  rng.fill_normal(p.alpha);
  rng.fill_normal(p.g.data());
  return p;
}

// Arguments: rows, columns, parallel (0 or 1).
void BM_Gradients(benchmark::State& state) {
  auto p = make_problem(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  Matrix out;
  for (auto _ : state) {
    if (state.range(2)) {
      kernels::per_example_gradients(TaskKind::Logistic, p.X, p.y, p.alpha, out);
    } else {
      kernels::serial::per_example_gradients(TaskKind::Logistic, p.X, p.y, p.alpha, out);
    }
    benchmark::DoNotOptimize(out.data().data());
  }
}

void BM_Mean(benchmark::State& state) {
  auto p = make_problem(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) {
    auto m = state.range(2) ? kernels::column_mean(p.g) : kernels::serial::column_mean(p.g);
    benchmark::DoNotOptimize(m.data());
  }
}

void BM_Median(benchmark::State& state) {
  auto p = make_problem(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) {
    auto m = state.range(2) ? kernels::coordinate_median(p.g) : kernels::serial::coordinate_median(p.g);
    benchmark::DoNotOptimize(m.data());
  }
}

void BM_TrimmedMean(benchmark::State& state) {
  auto p = make_problem(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  const std::size_t trim = p.g.rows() / 20;
  for (auto _ : state) {
    auto m = state.range(2) ? kernels::coordinate_trimmed_mean(p.g, trim)
                            : kernels::serial::coordinate_trimmed_mean(p.g, trim);
    benchmark::DoNotOptimize(m.data());
  }
}

void shapes(benchmark::internal::Benchmark* b) {
  for (int parallel : {0, 1}) {
    b->Args({500, 500, parallel});
    b->Args({2000, 2048, parallel});
  }
  b->ArgNames({"rows", "cols", "parallel"})->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_Gradients)->Apply(shapes);
BENCHMARK(BM_Mean)->Apply(shapes);
BENCHMARK(BM_Median)->Apply(shapes);
BENCHMARK(BM_TrimmedMean)->Apply(shapes);

BENCHMARK_MAIN();
