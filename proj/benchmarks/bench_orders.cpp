#include <benchmark/benchmark.h>

#include "domainkit/calculus.hpp"
#include "domainkit/exactness.hpp"
#include "domainkit/logics.hpp"
#include "domainkit/simplex.hpp"
#include "domainkit/spectra.hpp"

namespace {

using namespace domainkit;

void BM_SymmetricDecider(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  std::vector<std::pair<ClassicalState, ClassicalState>> pairs;
  for (int i = 0; i < 256; ++i) pairs.push_back(sample_comparable_pair(n, rng));
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& [x, y] = pairs[k++ & 255];
    benchmark::DoNotOptimize(bayesian_leq_symmetric(x, y));
  }
}
BENCHMARK(BM_SymmetricDecider)->Arg(2)->Arg(3)->Arg(4)->Arg(6)->Arg(8);

void BM_RecursiveDecider(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(2);
  std::vector<std::pair<ClassicalState, ClassicalState>> pairs;
  for (int i = 0; i < 256; ++i) pairs.push_back(sample_comparable_pair(n, rng));
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& [x, y] = pairs[k++ & 255];
    benchmark::DoNotOptimize(bayesian_leq_recursive(x, y));
  }
}
BENCHMARK(BM_RecursiveDecider)->Arg(3)->Arg(4)->Arg(6)->Arg(8);

void BM_SpectralDecider(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(3);
  std::vector<std::pair<DensityMatrix, DensityMatrix>> pairs;
  for (int i = 0; i < 64; ++i) pairs.push_back(sample_comparable_density_pair(n, rng));
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& [rho, sigma] = pairs[k++ & 63];
    benchmark::DoNotOptimize(spectral_leq(rho, sigma));
  }
}
BENCHMARK(BM_SpectralDecider)->Arg(2)->Arg(4)->Arg(8);

void BM_HermitianEigen(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(4);
  CMatrix g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = rng.complex_gaussian();
  }
  const CMatrix a = g + g.adjoint();
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_eigen(a));
  }
}
BENCHMARK(BM_HermitianEigen)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_IrreducibleEnumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(irreducibles_classical(n));
  }
}
BENCHMARK(BM_IrreducibleEnumeration)->Arg(4)->Arg(6)->Arg(8);

void BM_CoordinateDecomposition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(5);
  std::vector<ClassicalState> states;
  for (int i = 0; i < 256; ++i) states.push_back(sample_state(n, rng));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(coordinate_decomposition(states[k++ & 255]));
  }
}
BENCHMARK(BM_CoordinateDecomposition)->Arg(3)->Arg(6);

void BM_InformaticDerivative(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(informatic_derivative([](double v) { return std::sin(v); }, 0.4));
  }
}
BENCHMARK(BM_InformaticDerivative);

}  // namespace

BENCHMARK_MAIN();
