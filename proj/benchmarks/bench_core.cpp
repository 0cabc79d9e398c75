// Microbenchmarks for the hot paths: Bloch-matrix assembly, the 4x4 dense
// eigensolver, the Wilson loop, the k-grid sweep, and finite-chain
// diagonalization.  Run with --benchmark_filter=... to focus on one.

#include <benchmark/benchmark.h>

#include <cmath>

#include "nhssh/bands.hpp"
#include "nhssh/eigensolver.hpp"
#include "nhssh/model.hpp"
#include "nhssh/realspace.hpp"
#include "nhssh/topology.hpp"

using namespace nhssh;

namespace {
const ModelParams kRef = make_params(1.0, 0.3, M_PI, 1.5, 1.0);
}

static void BM_BlochAssembly(benchmark::State& state) {
  double k = 0.0;
  for (auto _ : state) {
    k += 1e-3;
    benchmark::DoNotOptimize(bloch_hamiltonian(kRef, k));
  }
}
BENCHMARK(BM_BlochAssembly);

static void BM_AnalyticBands(benchmark::State& state) {
  double k = 0.0;
  for (auto _ : state) {
    k += 1e-3;
    benchmark::DoNotOptimize(analytic_bands(kRef, k));
  }
}
BENCHMARK(BM_AnalyticBands);

static void BM_EigDense4(benchmark::State& state) {
  const Matrix4c H = bloch_hamiltonian(kRef, 0.37);
  for (auto _ : state) benchmark::DoNotOptimize(eig_dense(H));
}
BENCHMARK(BM_EigDense4);

static void BM_Biorthogonalize(benchmark::State& state) {
  const Matrix4c H = bloch_hamiltonian(kRef, 0.37);
  const EigenSystem es = eig_dense(H);
  for (auto _ : state) {
    EigenSystem copy = es;
    benchmark::DoNotOptimize(biorthogonalize(std::move(copy), H));
  }
}
BENCHMARK(BM_Biorthogonalize);

static void BM_ZakPhase(benchmark::State& state) {
  const int nk = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zak_phase(kRef, nk));
  state.SetComplexityN(nk);
}
BENCHMARK(BM_ZakPhase)->Arg(64)->Arg(128)->Arg(256)->Complexity();

static void BM_BandSweep(benchmark::State& state) {
  const int nk = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(band_sweep(kRef, nk));
}
BENCHMARK(BM_BandSweep)->Arg(101)->Arg(401);

static void BM_ClassifyPoint(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(classify_phase_point(kRef, 201, 96));
}
BENCHMARK(BM_ClassifyPoint);

static void BM_ObcSpectrum(benchmark::State& state) {
  const int cells = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(obc_spectrum(kRef, cells));
  state.SetComplexityN(cells);
}
BENCHMARK(BM_ObcSpectrum)->Arg(25)->Arg(50)->Arg(100)->Complexity();

BENCHMARK_MAIN();
