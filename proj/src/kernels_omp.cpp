#include <omp.h>

#include <algorithm>
#include <exception>

#include "hbt/kernels.hpp"

namespace hbt::kernels::omp {

namespace {

// First exception thrown inside a parallel region, rethrown after it.
class ErrorSlot {
 public:
  template <class F>
  void run(F&& f) {
    try {
      f();
    } catch (...) {
#pragma omp critical(hbt_error_slot)
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::exception_ptr error_;
};

}  // namespace

int max_threads() { return omp_get_max_threads(); }

Eigen::MatrixXcd bs_conjugate(const Eigen::MatrixXcd& rho_a, const Eigen::MatrixXcd& rho_b, const Blocks& blocks,
                              int c) {
  const int top = 2 * c - 2;
  const int pairs = (top + 1) * (top + 1);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(c * c, c * c);
  // every (N, M) block pair writes a disjoint set of entries
#pragma omp parallel for schedule(dynamic, 4)
  for (int idx = 0; idx < pairs; ++idx) {
    const int N = idx / (top + 1), M = idx % (top + 1);
    const int lo = std::max(0, N - c + 1), hi = std::min(N, c - 1);
    const int lo2 = std::max(0, M - c + 1), hi2 = std::min(M, c - 1);
    Eigen::MatrixXcd in(N + 1, M + 1);
    for (int p = 0; p <= N; ++p)
      for (int q = 0; q <= M; ++q) in(p, q) = rho_a(p, q) * rho_b(N - p, M - q);
    const Eigen::MatrixXcd blk =
        blocks[N].middleRows(lo, hi - lo + 1) * in * blocks[M].middleRows(lo2, hi2 - lo2 + 1).adjoint();
    for (int i = lo; i <= hi; ++i)
      for (int k = lo2; k <= hi2; ++k) out(i * c + (N - i), k * c + (M - k)) = blk(i - lo, k - lo2);
  }
  return out;
}

Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd& rho, int c) {
  Eigen::MatrixXcd out(rho.rows(), rho.cols());
#pragma omp parallel for collapse(2) schedule(static)
  for (int k = 0; k < c; ++k)
    for (int l = 0; l < c; ++l)
      for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j) out(i * c + j, k * c + l) = rho(i * c + l, k * c + j);
  return out;
}

Eigen::MatrixXd fringe_grid(const FringeCoefficients& f, const std::vector<double>& phi1,
                            const std::vector<double>& phi2) {
  const long rows = static_cast<long>(phi1.size()), cols = static_cast<long>(phi2.size());
  Eigen::MatrixXd out(rows, cols);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) out(i, j) = f(phi1[i], phi2[j]);
  return out;
}

std::vector<std::vector<double>> sweep(const RowFn& row, const std::vector<double>& xs) {
  std::vector<std::vector<double>> out(xs.size());
  ErrorSlot slot;
  const long count = static_cast<long>(xs.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) slot.run([&] { out[i] = row(xs[i]); });
  slot.rethrow();
  return out;
}

}  // namespace hbt::kernels::omp
