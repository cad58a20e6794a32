#include "hbt/kernels.hpp"

#include <algorithm>

namespace hbt::kernels::serial {

Eigen::MatrixXcd bs_conjugate(const Eigen::MatrixXcd& rho_a, const Eigen::MatrixXcd& rho_b, const Blocks& blocks,
                              int c) {
  const int top = 2 * c - 2;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(c * c, c * c);
  for (int N = 0; N <= top; ++N) {
    const int lo = std::max(0, N - c + 1), hi = std::min(N, c - 1);
    const auto rows = blocks[N].middleRows(lo, hi - lo + 1);
    for (int M = 0; M <= top; ++M) {
      const int lo2 = std::max(0, M - c + 1), hi2 = std::min(M, c - 1);
      Eigen::MatrixXcd in(N + 1, M + 1);
      for (int p = 0; p <= N; ++p)
        for (int q = 0; q <= M; ++q) in(p, q) = rho_a(p, q) * rho_b(N - p, M - q);
      const Eigen::MatrixXcd blk = rows * in * blocks[M].middleRows(lo2, hi2 - lo2 + 1).adjoint();
      for (int i = lo; i <= hi; ++i)
        for (int k = lo2; k <= hi2; ++k) out(i * c + (N - i), k * c + (M - k)) = blk(i - lo, k - lo2);
    }
  }
  return out;
}

Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd& rho, int c) {
  Eigen::MatrixXcd out(rho.rows(), rho.cols());
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j)
      for (int k = 0; k < c; ++k)
        for (int l = 0; l < c; ++l) out(i * c + j, k * c + l) = rho(i * c + l, k * c + j);
  return out;
}

Eigen::MatrixXd fringe_grid(const FringeCoefficients& f, const std::vector<double>& phi1,
                            const std::vector<double>& phi2) {
  Eigen::MatrixXd out(phi1.size(), phi2.size());
  for (std::size_t i = 0; i < phi1.size(); ++i)
    for (std::size_t j = 0; j < phi2.size(); ++j) out(i, j) = f(phi1[i], phi2[j]);
  return out;
}

std::vector<std::vector<double>> sweep(const RowFn& row, const std::vector<double>& xs) {
  std::vector<std::vector<double>> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back(row(x));
  return out;
}

}  // namespace hbt::kernels::serial
