#include <benchmark/benchmark.h>

#include "ratext/extension.hpp"
#include "ratext/numverify.hpp"
#include "ratext/parajacobi.hpp"

namespace {

using ratext::exact::Rational;
using ratext::parajacobi::ParaJacobiIndex;

ParaJacobiIndex square_index(int n) { return ParaJacobiIndex(n, n, n); }

void BM_ParaJacobi(benchmark::State& state) {
  const auto idx = square_index(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ratext::parajacobi::para_jacobi(idx, Rational(1, 3)));
}
BENCHMARK(BM_ParaJacobi)->Arg(2)->Arg(4)->Arg(8)->Arg(12);

void BM_LogFormPotential(benchmark::State& state) {
  const auto idx = square_index(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ratext::extension::extended_potential_log_form(idx, Rational(1, 3)));
}
BENCHMARK(BM_LogFormPotential)->Arg(2)->Arg(4)->Arg(8);

void BM_SchrodingerResidual(benchmark::State& state) {
  const ParaJacobiIndex idx(2, 2, 2);
  const Rational lambda(1, 2);
  const int k = static_cast<int>(state.range(0));
  const auto model = ratext::extension::ExtendedModel::build(idx, lambda, k);
  const auto psi = ratext::extension::eigenstate(k, idx, lambda);
  const Rational energy = model.spectrum.back().energy;
  for (auto _ : state) benchmark::DoNotOptimize(ratext::extension::schrodinger_residual(psi, energy, model.potential));
}
BENCHMARK(BM_SchrodingerResidual)->Arg(1)->Arg(3)->Arg(6);

void BM_Gram(benchmark::State& state) {
  const ParaJacobiIndex idx(2, 2, 2);
  const auto rule = ratext::numverify::gauss_jacobi(static_cast<int>(state.range(0)), 1.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(ratext::numverify::gram_matrix(idx, Rational(1), 6, rule));
}
BENCHMARK(BM_Gram)->Arg(32)->Arg(96)->Unit(benchmark::kMillisecond);

void BM_FdSpectrum(benchmark::State& state) {
  const auto model = ratext::extension::ExtendedModel::build(ParaJacobiIndex(2, 2, 2), Rational(1), 2);
  const auto v = ratext::numverify::sampler(model.potential);
  const ratext::numverify::GridSpec grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ratext::numverify::fd_spectrum(v, grid, 4));
}
BENCHMARK(BM_FdSpectrum)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
