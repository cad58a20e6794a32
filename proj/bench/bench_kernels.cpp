// Serial reference vs OpenMP kernels. Arguments are the Fock cutoff (or grid
// size) per mode.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "hbt/fock_oracle.hpp"
#include "hbt/kernels.hpp"

namespace {

using namespace hbt;
namespace ser = hbt::kernels::serial;
namespace par = hbt::kernels::omp;

struct BsInputs {
  Eigen::MatrixXcd a, b;
  kernels::Blocks blocks;
};

BsInputs bs_inputs(int cutoff) {
  const int wide = 2 * cutoff - 1;
  BsInputs in;
  // cost does not depend on the entries; Hermitian stand-ins avoid the cutoff cap
  const Eigen::MatrixXcd r = Eigen::MatrixXcd::Random(wide, wide);
  in.a = r * r.adjoint();
  in.b = r.adjoint() * r;
  for (int N = 0; N <= 2 * cutoff - 2; ++N) in.blocks.push_back(beam_splitter_block(0.4, N));
  return in;
}

template <kernels::BsConjugate F>
void BM_bs_conjugate(benchmark::State& st) {
  const int c = static_cast<int>(st.range(0));
  const auto in = bs_inputs(c);
  for (auto _ : st) benchmark::DoNotOptimize(F(in.a, in.b, in.blocks, c));
}

template <kernels::PartialTranspose F>
void BM_partial_transpose(benchmark::State& st) {
  const int c = static_cast<int>(st.range(0));
  const Eigen::MatrixXcd rho = Eigen::MatrixXcd::Random(c * c, c * c);
  for (auto _ : st) benchmark::DoNotOptimize(F(rho, c));
}

template <kernels::FringeGrid F>
void BM_fringe_grid(benchmark::State& st) {
  const int k = static_cast<int>(st.range(0));
  const auto f = fringe_coefficients(TwoModeGaussian::correlated(1.0, 0.4, 0.9, 0.3, 1.2));
  std::vector<double> phi;
  for (int i = 0; i < k; ++i) phi.push_back(2.0 * 3.141592653589793 * i / k);
  for (auto _ : st) benchmark::DoNotOptimize(F(f, phi, phi));
}

template <kernels::Sweep F>
void BM_sweep(benchmark::State& st) {
  const int k = static_cast<int>(st.range(0));
  std::vector<double> xs;
  for (int i = 0; i < k; ++i) xs.push_back(0.05 + 1.4 * i / k);
  // a row costs about as much as a figure row with a fringe scan
  const kernels::RowFn row = [](double n) {
    const auto f = fringe_coefficients(TwoModeGaussian::epr(n, 0.9 * n));
    double lo = INFINITY;
    for (int i = 0; i < 64; ++i)
      for (int j = 0; j < 64; ++j) lo = std::min(lo, f(0.098 * i, 0.098 * j));
    return std::vector<double>{n, lo};
  };
  for (auto _ : st) benchmark::DoNotOptimize(F(row, xs));
}

}  // namespace

BENCHMARK(BM_bs_conjugate<ser::bs_conjugate>)->Name("bs_conjugate/serial")->Arg(15)->Arg(25)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bs_conjugate<par::bs_conjugate>)->Name("bs_conjugate/omp")->Arg(15)->Arg(25)->Arg(40)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_partial_transpose<ser::partial_transpose>)->Name("partial_transpose/serial")->Arg(25)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_partial_transpose<par::partial_transpose>)->Name("partial_transpose/omp")->Arg(25)->Arg(40)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_fringe_grid<ser::fringe_grid>)->Name("fringe_grid/serial")->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fringe_grid<par::fringe_grid>)->Name("fringe_grid/omp")->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_sweep<ser::sweep>)->Name("sweep/serial")->Arg(101)->Arg(1001)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sweep<par::sweep>)->Name("sweep/omp")->Arg(101)->Arg(1001)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
