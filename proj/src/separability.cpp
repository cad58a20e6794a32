#include "hbt/separability.hpp"

#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "hbt/errors.hpp"
#include "hbt/fock_oracle.hpp"
#include "hbt/transforms.hpp"

namespace hbt {

bool epr_is_entangled(double n, double mc_abs) {
  if (mc_abs * mc_abs > n * (n + 1.0) + kPhysTol) throw NonPhysicalState("EPR state violates |m_c|^2 <= n(n+1)");
  return mc_abs > n + kClassTol;
}

double bs_output_separability_margin(double n, double m_abs, double lambda) {
  const double s = std::sqrt(std::max(0.0, 0.5 * (1.0 - std::cos(2.0 * lambda))));
  return n * (n + 1.0) - m_abs * m_abs - s * m_abs;
}

bool bs_output_is_separable(double n, double m_abs, double lambda) {
  return bs_output_separability_margin(n, m_abs, lambda) >= -kPhysTol;
}

double general_separability_margin(double n, double m, double m_c, double lambda1, double lambda2) {
  const double root = std::sqrt(std::max(0.0, 1.0 + 2.0 * (1.0 + std::cos(lambda1 + lambda2)) * m * m));
  return n * (n + 1.0) - m * m - m_c * m_c - std::abs(m_c) * root;
}

bool general_is_separable(double n, double m, double m_c, double lambda1, double lambda2) {
  return general_separability_margin(n, m, m_c, lambda1, lambda2) >= -kPhysTol;
}

double werner_hbt_threshold(double n) {
  if (!(n > 0.0)) throw DomainError("Werner threshold needs n > 0");
  return n / (n + 1.0);
}

double werner_ppt_threshold(double n) {
  if (!(n > 0.0)) throw DomainError("Werner threshold needs n > 0");
  const double q = 1.0 + 2.0 * n * n;
  return 1.0 / (1.0 + std::sqrt((1.0 + n) / n) * q * q / (n * (1.0 + 2.0 * n) * (1.0 + n * n)));
}

namespace {

using Key = std::array<double, 9>;

Key key_of(const TwoModeGaussian& s) {
  return {s.n(),          s.m_a().real(), s.m_a().imag(), s.m_b().real(), s.m_b().imag(),
          s.m_c().real(), s.m_c().imag(), s.m_x().real(), s.m_x().imag()};
}

// concurrent readers, one writer at a time; stored verdicts never change
struct Cache {
  std::shared_mutex mu;
  std::map<Key, bool> verdicts;
};

Cache& cache() {
  static Cache c;
  return c;
}

bool oracle_verdict(const TwoModeGaussian& s) {
  const ProductDecomposition d = product_decomposition(s);
  if (!is_physical_one_mode(d.a) || !is_physical_one_mode(d.b)) return false;
  for (int cutoff : kCutoffSchedule) {
    const FockDensity rho = two_mode_density(s, cutoff, false);
    if (!rho.converged()) continue;
    return min_eigenvalue(rho) >= -kEigTol;
  }
  throw InconclusiveError("trace did not converge on the cutoff schedule");
}

}  // namespace

bool is_physical_two_mode(const TwoModeGaussian& s) {
  const Key k = key_of(s);
  auto& c = cache();
  {
    std::shared_lock lock(c.mu);
    if (auto it = c.verdicts.find(k); it != c.verdicts.end()) return it->second;
  }
  const bool verdict = oracle_verdict(s);
  std::unique_lock lock(c.mu);
  c.verdicts.emplace(k, verdict);
  return verdict;
}

std::size_t physicality_cache_size() {
  auto& c = cache();
  std::shared_lock lock(c.mu);
  return c.verdicts.size();
}

}  // namespace hbt
