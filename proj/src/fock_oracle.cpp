#include "hbt/fock_oracle.hpp"

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <istream>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

#include "hbt/errors.hpp"
#include "hbt/kernels.hpp"
#include "hbt/transforms.hpp"

namespace hbt {

namespace {

using Eigen::MatrixXcd;

void check_cutoff(int cutoff) {
  if (cutoff < 2 || cutoff > kMaxCutoff) throw std::invalid_argument("cutoff must lie in [2, 60]");
}

// Thermal occupation and squeeze xi = r e^{i phi} with
// n + 1/2 = (nbar + 1/2) cosh 2r, m = e^{i phi} (nbar + 1/2) sinh 2r.
struct SqueezedThermal {
  double nbar;
  Complex xi;
};

SqueezedThermal squeezed_thermal_params(double n, Complex m) {
  const double nu = std::sqrt(std::max((n + 0.5) * (n + 0.5) - std::norm(m), 0.25));
  const double r = 0.5 * std::asinh(std::abs(m) / nu);
  return {std::max(nu - 0.5, 0.0), std::polar(r, std::arg(m))};
}

double thermal_weight(double nbar, int k) {
  if (nbar == 0.0) return k == 0 ? 1.0 : 0.0;
  return std::pow(nbar / (nbar + 1.0), k) / (nbar + 1.0);
}

int padded(int cutoff) { return 2 * cutoff + 20; }

// Untruncated-quality one-mode density at dimension `cutoff` (no cap).
MatrixXcd one_mode_matrix(const OneModeGaussian& s, int cutoff) {
  if (!is_physical_one_mode(s)) throw NonPhysicalState("state violates |m|^2 <= n(n+1)");
  const auto [nbar, xi] = squeezed_thermal_params(s.n(), s.m());
  const int P = padded(cutoff);
  Eigen::VectorXcd w(P);
  for (int k = 0; k < P; ++k) w(k) = thermal_weight(nbar, k);
  const MatrixXcd S = squeeze_matrix(xi, P);
  const MatrixXcd full = S * w.asDiagonal() * S.adjoint();
  const MatrixXcd rho = full.topLeftCorner(cutoff, cutoff);
  return 0.5 * (rho + rho.adjoint());
}

FockDensity finish(int modes, int cutoff, MatrixXcd rho, bool require_converged) {
  FockDensity d;
  d.modes = modes;
  d.cutoff = cutoff;
  d.rho = std::move(rho);
  d.trace_deficit = std::max(0.0, 1.0 - d.rho.trace().real());
  if (require_converged && !d.converged())
    throw ConvergenceError("truncated density lost trace weight " + std::to_string(d.trace_deficit) +
                               " at cutoff " + std::to_string(cutoff),
                           d.trace_deficit);
  return d;
}

void apply_local_phases(MatrixXcd& rho, int c, double ta, double tb) {
  if (ta == 0.0 && tb == 0.0) return;
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j)
      for (int k = 0; k < c; ++k)
        for (int l = 0; l < c; ++l) rho(i * c + j, k * c + l) *= std::polar(1.0, ta * (i - k) + tb * (j - l));
}

}  // namespace

MatrixXcd squeeze_matrix(Complex xi, int dim) {
  MatrixXcd a = MatrixXcd::Zero(dim, dim);
  for (int k = 1; k < dim; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  const MatrixXcd a2 = a * a;
  const MatrixXcd gen = 0.5 * (std::conj(xi) * a2 - xi * a2.adjoint());
  return gen.exp();
}

MatrixXcd beam_splitter_block(double lambda, int N) {
  MatrixXcd K = MatrixXcd::Zero(N + 1, N + 1);
  for (int i = 0; i < N; ++i) {
    const double v = std::sqrt(static_cast<double>((i + 1) * (N - i)));
    K(i + 1, i) = v;
    K(i, i + 1) = -v;
  }
  MatrixXcd U = (std::numbers::pi / 4.0 * K).exp();
  for (int i = 0; i <= N; ++i) {
    U.row(i) *= ((N - i) % 2 == 0) ? 1.0 : -1.0;
    U.col(i) *= std::polar(1.0, lambda * (N - i));
  }
  return U;
}

MatrixXcd beam_splitter_matrix(double lambda, int c) {
  MatrixXcd U = MatrixXcd::Zero(c * c, c * c);
  for (int N = 0; N <= 2 * c - 2; ++N) {
    const int lo = std::max(0, N - c + 1), hi = std::min(N, c - 1), L = hi - lo + 1;
    MatrixXcd K = MatrixXcd::Zero(L, L);
    for (int i = lo; i < hi; ++i) {
      const double v = std::sqrt(static_cast<double>((i + 1) * (N - i)));
      K(i + 1 - lo, i - lo) = v;
      K(i - lo, i + 1 - lo) = -v;
    }
    MatrixXcd B = (std::numbers::pi / 4.0 * K).exp();
    for (int i = lo; i <= hi; ++i) {
      B.row(i - lo) *= ((N - i) % 2 == 0) ? 1.0 : -1.0;
      B.col(i - lo) *= std::polar(1.0, lambda * (N - i));
    }
    for (int i = lo; i <= hi; ++i)
      for (int k = lo; k <= hi; ++k) U(i * c + (N - i), k * c + (N - k)) = B(i - lo, k - lo);
  }
  return U;
}

FockDensity one_mode_density(const OneModeGaussian& s, int cutoff, bool require_converged) {
  check_cutoff(cutoff);
  return finish(1, cutoff, one_mode_matrix(s, cutoff), require_converged);
}

FockDensity tensor(const FockDensity& a, const FockDensity& b) {
  if (a.modes != 1 || b.modes != 1 || a.cutoff != b.cutoff)
    throw std::invalid_argument("tensor needs two one-mode densities with equal cutoff");
  FockDensity d;
  d.modes = 2;
  d.cutoff = a.cutoff;
  d.rho = Eigen::kroneckerProduct(a.rho, b.rho);
  d.trace_deficit = std::max(0.0, 1.0 - d.rho.trace().real());
  return d;
}

FockDensity epr_density(double n, Complex m_c, int c, bool require_converged) {
  check_cutoff(c);
  if (std::norm(m_c) > n * (n + 1.0) + kPhysTol) throw NonPhysicalState("EPR state violates |m_c|^2 <= n(n+1)");
  const auto [nbar, xi] = squeezed_thermal_params(n, m_c);
  const int P = padded(c);
  MatrixXcd rho = MatrixXcd::Zero(c * c, c * c);
  // exp(r(e^{-i phi} ab - e^{i phi} a^dag b^dag)) keeps n_a - n_b = +-k fixed
  for (int k = 0; k < c; ++k) {
    const int L = P - k;
    MatrixXcd G = MatrixXcd::Zero(L, L);
    for (int j = 1; j < L; ++j) {
      const double v = std::sqrt(static_cast<double>(j + k) * j);
      G(j - 1, j) = std::conj(xi) * v;
      G(j, j - 1) = -xi * v;
    }
    const MatrixXcd U = G.exp();
    Eigen::VectorXcd w(L);
    for (int j = 0; j < L; ++j) w(j) = thermal_weight(nbar, j + k) * thermal_weight(nbar, j);
    const MatrixXcd B = U * w.asDiagonal() * U.adjoint();
    for (int j = 0; j + k < c; ++j)
      for (int jj = 0; jj + k < c; ++jj) {
        rho((j + k) * c + j, (jj + k) * c + jj) = B(j, jj);
        if (k > 0) rho(j * c + j + k, jj * c + jj + k) = B(j, jj);
      }
  }
  return finish(2, c, 0.5 * (rho + rho.adjoint()), require_converged);
}

FockDensity beam_splitter_density(const OneModeGaussian& sa, const OneModeGaussian& sb, double lambda, int c,
                                  bool require_converged) {
  check_cutoff(c);
  const int L = 2 * c - 1;
  const MatrixXcd ra = one_mode_matrix(sa, L), rb = one_mode_matrix(sb, L);
  kernels::Blocks blocks;
  blocks.reserve(2 * c - 1);
  for (int N = 0; N <= 2 * c - 2; ++N) blocks.push_back(beam_splitter_block(lambda, N));
  const MatrixXcd rho = kernels::omp::bs_conjugate(ra, rb, blocks, c);
  return finish(2, c, 0.5 * (rho + rho.adjoint()), require_converged);
}

FockDensity two_mode_density(const TwoModeGaussian& s, int c, bool require_converged) {
  check_cutoff(c);
  if (!satisfies_uncertainty(s)) throw NonPhysicalState("two-mode moments admit no quantum state");
  if (s.is_epr_family()) return epr_density(s.n(), s.m_c(), c, require_converged);
  const ProductDecomposition d = product_decomposition(s);
  if (d.product) {
    FockDensity out = tensor(one_mode_density(d.a, c, false), one_mode_density(d.b, c, false));
    return finish(2, c, std::move(out.rho), require_converged);
  }
  FockDensity out = beam_splitter_density(d.a, d.b, 0.0, c, false);
  apply_local_phases(out.rho, c, d.theta_a, d.theta_b);
  return finish(2, c, std::move(out.rho), require_converged);
}

FockDensity two_mode_density(const GaussianMixture& mix, int c, bool require_converged) {
  check_cutoff(c);
  MatrixXcd rho = MatrixXcd::Zero(c * c, c * c);
  for (const auto& part : mix.components()) rho += part.weight * two_mode_density(part.state, c, false).rho;
  return finish(2, c, std::move(rho), require_converged);
}

Complex moment(const FockDensity& d, const OperatorWord& word) {
  if (2 * static_cast<int>(word.size()) > d.cutoff)
    throw std::invalid_argument("operator word too long for this cutoff");
  for (const auto& t : word.tokens())
    if (t.mode == Mode::B && d.modes < 2) throw std::invalid_argument("mode-b token on a one-mode density");

  const int c = d.cutoff;
  const auto tokens = word.tokens();
  Complex total = 0.0;
  for (Eigen::Index x = 0; x < d.dim(); ++x) {
    int idx[2] = {d.modes == 2 ? static_cast<int>(x / c) : static_cast<int>(x),
                  d.modes == 2 ? static_cast<int>(x % c) : 0};
    double coeff = 1.0;
    for (auto it = tokens.rbegin(); it != tokens.rend() && coeff != 0.0; ++it) {
      int& k = idx[it->mode == Mode::A ? 0 : 1];
      if (it->dagger) {
        coeff *= std::sqrt(static_cast<double>(k + 1));
        if (++k >= c) coeff = 0.0;
      } else {
        coeff *= std::sqrt(static_cast<double>(k));
        --k;
      }
    }
    if (coeff == 0.0) continue;
    const Eigen::Index y = d.modes == 2 ? idx[0] * c + idx[1] : idx[0];
    total += coeff * d.rho(x, y);
  }
  return total / d.rho.trace().real();
}

double purity(const FockDensity& d) {
  const double tr = d.rho.trace().real();
  return d.rho.squaredNorm() / (tr * tr);
}

double min_eigenvalue(const FockDensity& d) {
  const MatrixXcd rho = d.rho / d.rho.trace().real();
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("Hermitian eigensolver did not converge");
  return es.eigenvalues()(0);
}

double ppt_min_eigenvalue(const FockDensity& d) {
  if (d.modes != 2) throw std::invalid_argument("partial transpose needs a two-mode density");
  const MatrixXcd pt = kernels::omp::partial_transpose(d.rho / d.rho.trace().real(), d.cutoff);
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(pt, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("Hermitian eigensolver did not converge");
  return es.eigenvalues()(0);
}

double expectation_of_witness(const FockDensity& d, WitnessKind kind) {
  auto mom = [&](const char* w) { return moment(d, OperatorWord::parse(w)); };
  if (kind == WitnessKind::W2) {
    const double n = mom("a+ a").real();
    if (!(n > 0.0)) throw DomainError("W2 undefined for n = 0");
    return 3.0 - mom("a+ a+ a a").real() / (n * n);
  }
  if (d.modes != 2) throw std::invalid_argument("HBT witness needs a two-mode density");
  const double q = mom("a+ b+ a b").real();
  const double S = mom("a+ a+ a a").real() + mom("b+ b+ b b").real() + 2.0 * q;
  if (!(S > 0.0)) throw DomainError("HBT witness normalization vanishes (vacuum)");
  return 0.5 - (2.0 * q + 2.0 * mom("b+ b+ a a").real()) / S;
}

// ---------------------------------------------------------------------------
// Binary dump

namespace {

void put_u32(std::ostream& out, std::uint32_t v) {
  unsigned char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(b), 4);
}

void put_f64(std::ostream& out, double x) {
  const auto v = std::bit_cast<std::uint64_t>(x);
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(b), 8);
}

std::uint64_t get_le(std::istream& in, int bytes) {
  unsigned char b[8] = {};
  if (!in.read(reinterpret_cast<char*>(b), bytes)) throw std::runtime_error("truncated density dump");
  std::uint64_t v = 0;
  for (int i = bytes - 1; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

}  // namespace

void write_binary(const FockDensity& d, std::ostream& out) {
  put_u32(out, static_cast<std::uint32_t>(d.modes));
  put_u32(out, static_cast<std::uint32_t>(d.cutoff));
  put_u32(out, 0);
  put_u32(out, 0);
  for (Eigen::Index i = 0; i < d.dim(); ++i)
    for (Eigen::Index j = 0; j < d.dim(); ++j) {
      put_f64(out, d.rho(i, j).real());
      put_f64(out, d.rho(i, j).imag());
    }
}

FockDensity read_binary(std::istream& in) {
  const auto modes = static_cast<int>(get_le(in, 4));
  const auto cutoff = static_cast<int>(get_le(in, 4));
  get_le(in, 4);
  get_le(in, 4);
  if ((modes != 1 && modes != 2) || cutoff < 1 || cutoff > kMaxCutoff)
    throw std::runtime_error("malformed density dump header");
  const int dim = modes == 2 ? cutoff * cutoff : cutoff;
  MatrixXcd rho(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const double re = std::bit_cast<double>(get_le(in, 8));
      const double im = std::bit_cast<double>(get_le(in, 8));
      rho(i, j) = {re, im};
    }
  return finish(modes, cutoff, std::move(rho), false);
}

}  // namespace hbt
