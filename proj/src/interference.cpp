#include "hbt/interference.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hbt/errors.hpp"

namespace hbt {

namespace {

using W = OperatorWord;

const W& word(std::string_view text) {
  // the handful of words used below, parsed once
  static const std::array<std::pair<std::string_view, W>, 7> table{{
      {"a+ a+ a a", W::parse("a+ a+ a a")},
      {"b+ b+ b b", W::parse("b+ b+ b b")},
      {"a+ b+ a b", W::parse("a+ b+ a b")},
      {"a+ b+ a a", W::parse("a+ b+ a a")},
      {"b+ b+ a b", W::parse("b+ b+ a b")},
      {"b+ b+ a a", W::parse("b+ b+ a a")},
      {"a+ a+ b b", W::parse("a+ a+ b b")},
  }};
  for (const auto& [k, w] : table)
    if (k == text) return w;
  throw std::logic_error("unregistered word");
}

void require_physical(const TwoModeGaussian& s) {
  if (!satisfies_uncertainty(s)) throw NonPhysicalState("two-mode moments admit no quantum state");
}

template <class State>
FringeCoefficients coefficients_of(const State& s) {
  FringeCoefficients f;
  f.Q = wick_moment(s, word("a+ b+ a b")).real();
  f.S = wick_moment(s, word("a+ a+ a a")).real() + wick_moment(s, word("b+ b+ b b")).real() + 2.0 * f.Q;
  f.X = wick_moment(s, word("a+ b+ a a")) + wick_moment(s, word("b+ b+ a b"));
  f.Y = wick_moment(s, word("b+ b+ a a"));
  return f;
}

double direct_correlation(const TwoModeGaussian& s, double phi1, double phi2) {
  // E(phi) = a + b e^{i phi}; expand E1^dag E2^dag E1 E2 over the 16 mode choices.
  const std::array<double, 2> phi{phi1, phi2};
  Complex total = 0.0;
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<LadderToken> tokens;
    double phase = 0.0;
    for (unsigned slot = 0; slot < 4; ++slot) {
      const bool is_b = mask & (1u << slot);
      const bool dagger = slot < 2;
      tokens.push_back({is_b ? Mode::B : Mode::A, dagger});
      if (is_b) phase += (dagger ? -1.0 : 1.0) * phi[slot % 2];
    }
    total += std::polar(1.0, phase) * wick_moment(s, OperatorWord(std::move(tokens)));
  }
  return 0.25 * total.real();
}

double denominator(double n, double m_abs) { return 3.0 * n * n + m_abs * m_abs; }

}  // namespace

double FringeCoefficients::operator()(double phi1, double phi2) const {
  const Complex single = std::polar(1.0, -phi1) + std::polar(1.0, -phi2);
  return 0.25 * (S + 2.0 * Q * std::cos(phi1 - phi2) + 2.0 * (single * X).real() +
                 2.0 * (std::polar(1.0, -(phi1 + phi2)) * Y).real());
}

FringeCoefficients fringe_coefficients(const TwoModeGaussian& s) {
  require_physical(s);
  return coefficients_of(s);
}

FringeCoefficients fringe_coefficients(const GaussianMixture& mix) {
  for (const auto& c : mix.components()) require_physical(c.state);
  return coefficients_of(mix);
}

double hbt_correlation(const TwoModeGaussian& s, double phi1, double phi2) {
  require_physical(s);
  return direct_correlation(s, phi1, phi2);
}

double hbt_correlation(const GaussianMixture& mix, double phi1, double phi2) {
  double total = 0.0;
  for (const auto& c : mix.components()) total += c.weight * hbt_correlation(c.state, phi1, phi2);
  return total;
}

VisibilityRecord visibility_record(const FringeCoefficients& f, double lambda1, double lambda2) {
  if (!(f.S > 0.0)) throw DomainError("no intensity correlation to normalize (vacuum)");
  VisibilityRecord r;
  r.v_minus = 2.0 * f.Q / f.S;
  r.v_plus = 2.0 * std::abs(f.Y) / f.S;
  r.phase_offset_plus = r.v_plus > 0.0 ? -std::arg(f.Y) : 0.0;
  const Complex kappa = std::polar(1.0, lambda1) + std::polar(1.0, -lambda2);
  if (std::norm(kappa) > 1e-24) r.v_m = (std::conj(kappa) * (2.0 * f.X / f.S)).real() / std::norm(kappa);
  return r;
}

VisibilityRecord visibility_record(const TwoModeGaussian& s) {
  return visibility_record(fringe_coefficients(s), std::arg(s.m_a()), std::arg(s.m_b()));
}

VisibilityRecord visibilities_uncorrelated(double n, double m_abs, double lambda) {
  if (n == 0.0 && m_abs == 0.0) throw DomainError("vacuum has no fringes");
  const double d = denominator(n, m_abs);
  return {n * n / d, m_abs * m_abs / d, 0.0, m_abs > 0.0 ? lambda : 0.0};
}

VisibilityRecord visibility_epr(double n, double mc_abs) {
  if (mc_abs * mc_abs > n * (n + 1.0) + kPhysTol) throw NonPhysicalState("EPR state violates |m_c|^2 <= n(n+1)");
  if (n == 0.0) throw DomainError("vacuum has no fringes");
  const double c2 = mc_abs * mc_abs;
  return {(n * n + c2) / (3.0 * n * n + c2), 0.0, 0.0, 0.0};
}

VisibilityRecord visibility_werner(double n, double mc_abs, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("mixing probability must lie in [0, 1]");
  if (mc_abs * mc_abs > n * (n + 1.0) + kPhysTol) throw NonPhysicalState("EPR state violates |m_c|^2 <= n(n+1)");
  if (n == 0.0) throw DomainError("vacuum has no fringes");
  const double c2 = p * mc_abs * mc_abs;
  return {(n * n + c2) / (3.0 * n * n + c2), 0.0, 0.0, 0.0};
}

VisibilityRecord visibilities_bs_output(double n, double m_abs, double lambda) {
  if (n == 0.0 && m_abs == 0.0) throw DomainError("vacuum has no fringes");
  const double c2l = std::cos(2.0 * lambda);
  const double m2 = m_abs * m_abs;
  const double d = denominator(n, m_abs);
  return {(n * n + 0.5 * (1.0 - c2l) * m2) / d, 0.5 * (1.0 + c2l) * m2 / d, 0.0, 0.0};
}

VisibilityRecord visibilities_general(double n, double m, double m_c, double lambda1, double lambda2) {
  require_physical(TwoModeGaussian::correlated(n, m, m_c, lambda1, lambda2));
  const double d = 3.0 * n * n + m_c * m_c + m * m;
  if (!(d > 0.0)) throw DomainError("vacuum has no fringes");
  return {(n * n + m_c * m_c) / d, m * m / d, m * m_c / d, m != 0.0 ? lambda2 - lambda1 : 0.0};
}

InequalityReport classical_inequality_report(const VisibilityRecord& v, InequalityContext context) {
  constexpr double tol = 1e-12;
  const double vm_upper = context == InequalityContext::UncorrelatedPair ? 1.0 / 3.0 : 0.5;
  InequalityReport r;
  r.v_minus_lower = v.v_minus >= 0.25 - tol;
  r.v_minus_upper = v.v_minus <= vm_upper + tol;
  r.v_plus_lower = v.v_plus >= -tol;
  r.v_plus_upper = v.v_plus <= 0.25 + tol;
  r.sum_upper = v.v_minus + v.v_plus <= 0.5 + tol;
  return r;
}

std::size_t parameter_count(FitModel model) {
  switch (model) {
    case FitModel::InPhaseOnly: return 3;
    case FitModel::InOut: return 5;
    case FitModel::General: return 9;
  }
  return 0;
}

FitResult fit_visibilities(std::span<const FringeSample> samples, FitModel model, double lambda1, double lambda2) {
  const std::size_t k = parameter_count(model);
  if (samples.size() < 2 * k) throw IllConditioned("need at least twice as many samples as fit parameters");

  Eigen::MatrixXd A(samples.size(), k);
  Eigen::VectorXd y(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double p1 = samples[i].phi1, p2 = samples[i].phi2;
    const std::array<double, 9> basis{1.0,          std::cos(p1 - p2), std::sin(p1 - p2),
                                      std::cos(p1 + p2), std::sin(p1 + p2), std::cos(p1),
                                      std::sin(p1),  std::cos(p2),      std::sin(p2)};
    for (std::size_t j = 0; j < k; ++j) A(i, j) = basis[j];
    y(i) = samples[i].value;
  }

  Eigen::BDCSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= 0.0 || sv(0) / sv(sv.size() - 1) > 1e6)
    throw IllConditioned("fringe phases do not resolve the model basis");
  const Eigen::VectorXd beta = svd.solve(y);

  FitResult out;
  out.beta.assign(beta.data(), beta.data() + beta.size());
  out.residual = std::sqrt((A * beta - y).squaredNorm() / static_cast<double>(samples.size()));

  const double b0 = beta(0);
  if (!(b0 > 0.0)) throw DomainError("fitted mean intensity correlation is not positive");
  auto& r = out.record;
  r.v_minus = beta(1) / b0;
  if (k >= 5) {
    r.v_plus = std::hypot(beta(3), beta(4)) / b0;
    r.phase_offset_plus = r.v_plus > 0.0 ? std::atan2(-beta(4), beta(3)) : 0.0;
  }
  if (k >= 9) {
    const Complex kappa = std::polar(1.0, lambda1) + std::polar(1.0, -lambda2);
    const Complex K = 0.5 * (Complex(beta(5), beta(6)) + Complex(beta(7), beta(8))) / b0;
    if (std::norm(kappa) > 1e-24) r.v_m = (std::conj(kappa) * K).real() / std::norm(kappa);
  }
  return out;
}

std::vector<FringeSample> sample_fringes(const FringeCoefficients& f, int points) {
  std::vector<FringeSample> out;
  out.reserve(static_cast<std::size_t>(points) * points);
  for (int i = 0; i < points; ++i)
    for (int j = 0; j < points; ++j) {
      const double p1 = 2.0 * std::numbers::pi * i / points, p2 = 2.0 * std::numbers::pi * j / points;
      out.push_back({p1, p2, f(p1, p2)});
    }
  return out;
}

}  // namespace hbt
