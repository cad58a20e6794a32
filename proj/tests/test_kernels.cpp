#include <doctest.h>

#include <omp.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "hbt/fock_oracle.hpp"
#include "hbt/kernels.hpp"
#include "hbt/transforms.hpp"
#include "support.hpp"

using namespace hbt;
namespace ser = hbt::kernels::serial;
namespace par = hbt::kernels::omp;

namespace {
Eigen::MatrixXcd random_density(int dim, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Eigen::MatrixXcd a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = {g(rng), g(rng)};
  Eigen::MatrixXcd rho = a * a.adjoint();
  return rho / rho.trace();
}
}  // namespace

TEST_CASE("beam-splitter conjugation: serial and OpenMP agree") {
  omp_set_num_threads(4);
  const int c = 9, dim = 2 * c - 1;
  kernels::Blocks blocks;
  for (int N = 0; N <= 2 * c - 2; ++N) blocks.push_back(beam_splitter_block(0.37, N));
  const auto a = random_density(dim, 1), b = random_density(dim, 2);
  const auto s = ser::bs_conjugate(a, b, blocks, c);
  const auto p = par::bs_conjugate(a, b, blocks, c);
  CHECK(s.rows() == c * c);
  CHECK((s - p).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("partial transpose: serial and OpenMP agree") {
  const int c = 7;
  const auto rho = random_density(c * c, 3);
  const auto s = ser::partial_transpose(rho, c);
  CHECK(s == par::partial_transpose(rho, c));
  CHECK(ser::partial_transpose(s, c) == rho);
  CHECK(s(0 * c + 1, 2 * c + 3) == rho(0 * c + 3, 2 * c + 1));
}

TEST_CASE("fringe grid: serial and OpenMP agree") {
  const auto f = fringe_coefficients(TwoModeGaussian::correlated(1.0, 0.2, 1.1, 0.3, -0.4));
  std::vector<double> p1, p2;
  for (int k = 0; k < 37; ++k) p1.push_back(0.17 * k);
  for (int k = 0; k < 23; ++k) p2.push_back(-0.29 * k);
  const auto s = ser::fringe_grid(f, p1, p2);
  CHECK(s == par::fringe_grid(f, p1, p2));
  CHECK(s(5, 7) == f(p1[5], p2[7]));
}

TEST_CASE("sweep keeps input order and propagates errors") {
  std::vector<double> xs;
  for (int k = 0; k < 500; ++k) xs.push_back(0.01 * k);
  const kernels::RowFn row = [](double x) { return std::vector<double>{x, std::sin(x), x * x}; };
  const auto s = ser::sweep(row, xs);
  CHECK(s == par::sweep(row, xs));
  for (std::size_t i = 0; i < xs.size(); ++i) CHECK(s[i][0] == xs[i]);

  const kernels::RowFn bad = [](double x) -> std::vector<double> {
    if (x > 2.0) throw std::domain_error("boom");
    return {x};
  };
  CHECK_THROWS_AS(par::sweep(bad, xs), std::domain_error);
  CHECK_THROWS_AS(ser::sweep(bad, xs), std::domain_error);
  CHECK(par::max_threads() >= 1);
}
