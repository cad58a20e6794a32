#pragma once

// Hot loops of the oracle and the sweeps, in two builds: a plain serial
// reference and an OpenMP version. Both produce identical results; the
// library calls the OpenMP one, tests and the benchmark compare them.

#include <Eigen/Dense>

#include <functional>
#include <vector>

#include "hbt/interference.hpp"

namespace hbt::kernels {

/// Block N of the beam-splitter unitary in the basis |i, N - i>, i = 0..N.
using Blocks = std::vector<Eigen::MatrixXcd>;

/// rho_out = U (rho_a (x) rho_b) U^dag restricted to per-mode index < cutoff.
/// rho_a, rho_b must have dimension >= 2 cutoff - 1; blocks must cover
/// N = 0..2 cutoff - 2.
using BsConjugate = Eigen::MatrixXcd (*)(const Eigen::MatrixXcd& rho_a, const Eigen::MatrixXcd& rho_b,
                                         const Blocks& blocks, int cutoff);
/// Transpose on the second factor of a cutoff x cutoff product space.
using PartialTranspose = Eigen::MatrixXcd (*)(const Eigen::MatrixXcd& rho, int cutoff);
/// out(i, j) = f(phi1[i], phi2[j]).
using FringeGrid = Eigen::MatrixXd (*)(const FringeCoefficients& f, const std::vector<double>& phi1,
                                       const std::vector<double>& phi2);
/// rows[i] = row(xs[i]), in input order. Exceptions propagate.
using RowFn = std::function<std::vector<double>(double)>;
using Sweep = std::vector<std::vector<double>> (*)(const RowFn& row, const std::vector<double>& xs);

namespace serial {
Eigen::MatrixXcd bs_conjugate(const Eigen::MatrixXcd& rho_a, const Eigen::MatrixXcd& rho_b, const Blocks& blocks,
                              int cutoff);
Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd& rho, int cutoff);
Eigen::MatrixXd fringe_grid(const FringeCoefficients& f, const std::vector<double>& phi1,
                            const std::vector<double>& phi2);
std::vector<std::vector<double>> sweep(const RowFn& row, const std::vector<double>& xs);
}  // namespace serial

namespace omp {
Eigen::MatrixXcd bs_conjugate(const Eigen::MatrixXcd& rho_a, const Eigen::MatrixXcd& rho_b, const Blocks& blocks,
                              int cutoff);
Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd& rho, int cutoff);
Eigen::MatrixXd fringe_grid(const FringeCoefficients& f, const std::vector<double>& phi1,
                            const std::vector<double>& phi2);
std::vector<std::vector<double>> sweep(const RowFn& row, const std::vector<double>& xs);
/// Threads the OpenMP runtime will use.
int max_threads();
}  // namespace omp

}  // namespace hbt::kernels
