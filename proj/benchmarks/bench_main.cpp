#include <benchmark/benchmark.h>

#include "fraclab/bounds.hpp"
#include "fraclab/kernels.hpp"
#include "fraclab/operators.hpp"
#include "fraclab/specfun.hpp"

using namespace fraclab;

namespace {

void BM_Digamma(benchmark::State& state) {
  double x = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::digamma(x));
    x = x < 50.0 ? x + 0.37 : 0.5;
  }
}
BENCHMARK(BM_Digamma);

void BM_FracLaplacianGaussian(benchmark::State& state) {
  const auto u = ScalarField::smooth([](const Point& y) { return std::exp(-y.norm2()); });
  const Order s(static_cast<double>(state.range(0)) / 100.0);
  QuadConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(frac_laplacian(u, Point{0.2, 0.1}, s, cfg));
}
BENCHMARK(BM_FracLaplacianGaussian)->Arg(25)->Arg(75)->Unit(benchmark::kMicrosecond);

void BM_LogLaplacianGaussian(benchmark::State& state) {
  const auto u = ScalarField::smooth([](const Point& y) { return std::exp(-y.norm2()); });
  QuadConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(log_laplacian(u, Point{0.2, 0.1}, cfg));
}
BENCHMARK(BM_LogLaplacianGaussian)->Unit(benchmark::kMicrosecond);

void BM_CompPoissonKernel(benchmark::State& state) {
  const Domain b = Domain::unit_ball(2);
  const Order s(static_cast<double>(state.range(0)) / 100.0);
  QuadConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(comp_poisson_kernel(b, s, Point{0.3, 0.0}, Point{0.0, 0.5}, cfg));
  }
}
BENCHMARK(BM_CompPoissonKernel)->Arg(80)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_QConstant(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(q_constant(2, 0.5));
}
BENCHMARK(BM_QConstant)->Unit(benchmark::kMicrosecond);

}  // namespace
