#include "hbt/transforms.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

#include "hbt/errors.hpp"

namespace hbt {

namespace {

constexpr double kMatchTol = 1e-12;

bool close(Complex x, Complex y, double scale) { return std::abs(x - y) <= kMatchTol * (1.0 + scale); }

}  // namespace

OneModeGaussian amplifier_output(AmplifierGains g) {
  if (!(g.G >= 1.0) || !(g.H >= 1.0)) throw std::invalid_argument("amplifier gains must satisfy G >= 1, H >= 1");
  const double n = 0.5 * (1.0 / g.G + g.G) * (g.H - 0.5) - 0.5;
  const double m = 0.5 * (g.G - 1.0 / g.G) * (g.H - 0.5);
  return {std::max(n, 0.0), m};
}

bool is_classical_threshold(AmplifierGains g) { return g.H >= 0.5 * (g.G + 1.0); }

OneModeGaussian phase_shift(const OneModeGaussian& s, double lambda) {
  return {s.n(), s.m() * std::polar(1.0, 2.0 * lambda)};
}

TwoModeGaussian beam_splitter(const OneModeGaussian& sa, const OneModeGaussian& sb, double lambda) {
  if (!is_physical_one_mode(sa) || !is_physical_one_mode(sb))
    throw NonPhysicalState("beam splitter input violates |m|^2 <= n(n+1)");
  const Complex mb = sb.m() * std::polar(1.0, 2.0 * lambda);
  const Complex m_tilde = 0.5 * (sa.m() + mb);
  const Complex m_c = 0.5 * (sa.m() - mb);
  return {0.5 * (sa.n() + sb.n()), m_tilde, m_tilde, m_c, 0.5 * (sa.n() - sb.n())};
}

ModePair inverse_beam_splitter(const TwoModeGaussian& s, double lambda) {
  const double scale = std::abs(s.m_a()) + std::abs(s.m_b()) + s.n();
  if (!close(s.m_a(), s.m_b(), scale) || std::abs(s.m_x().imag()) > kMatchTol * (1.0 + scale))
    throw DomainError("state is not the output of a 50/50 beam splitter on uncorrelated inputs");
  const Complex m_tilde = 0.5 * (s.m_a() + s.m_b());
  const double dx = s.m_x().real();
  const double na = s.n() + dx, nb = s.n() - dx;
  if (nb < 0.0 || na < 0.0) throw DomainError("beam splitter inputs would have negative photon number");
  return {OneModeGaussian(na, m_tilde + s.m_c()),
          OneModeGaussian(nb, (m_tilde - s.m_c()) * std::polar(1.0, -2.0 * lambda))};
}

namespace {

std::optional<ProductDecomposition> try_decompose(const TwoModeGaussian& s) {
  if (s.is_uncorrelated()) return ProductDecomposition{s.marginal_a(), s.marginal_b(), 0.0, 0.0, true};

  const double ra = std::abs(s.m_a()), rb = std::abs(s.m_b());
  const double scale = ra + rb + std::abs(s.m_c()) + std::abs(s.m_x()) + s.n();
  if (std::abs(ra - rb) > kMatchTol * (1.0 + scale)) return std::nullopt;

  double ta = 0.0, tb = 0.0;
  if (ra > kMatchTol * (1.0 + scale)) {
    ta = 0.5 * std::arg(s.m_a());
    tb = 0.5 * std::arg(s.m_b());
  } else {
    // no local squeezing: only the relative phase matters for m_x
    tb = std::arg(s.m_x());
  }
  const Complex mx = s.m_x() * std::polar(1.0, -(tb - ta));
  if (std::abs(mx.imag()) > kMatchTol * (1.0 + scale)) return std::nullopt;

  const double m_tilde = ra;
  const Complex mc = s.m_c() * std::polar(1.0, -(ta + tb));
  const double na = s.n() + mx.real(), nb = s.n() - mx.real();
  if (na < 0.0 || nb < 0.0) return std::nullopt;
  return ProductDecomposition{OneModeGaussian(na, m_tilde + mc), OneModeGaussian(nb, m_tilde - mc), ta, tb, false};
}

}  // namespace

ProductDecomposition product_decomposition(const TwoModeGaussian& s) {
  auto d = try_decompose(s);
  if (!d) throw DomainError("two-mode state is outside the beam-splitter-reducible class");
  return *d;
}

bool has_product_decomposition(const TwoModeGaussian& s) { return try_decompose(s).has_value(); }

double rotated_quadrature_variance(const OneModeGaussian& s, double lambda, double theta) {
  if (s.m().imag() != 0.0) throw UnsupportedPhase("rotated quadrature variance needs real m");
  return s.n() + 0.5 - s.m().real() * std::cos(theta - 2.0 * lambda);
}

GaussianMixture werner_mix(const TwoModeGaussian& epr, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("mixing probability must lie in [0, 1]");
  if (!epr.is_epr_family()) throw std::invalid_argument("Werner mixing needs an EPR-family state");
  if (std::norm(epr.m_c()) > epr.n() * (epr.n() + 1.0) + kPhysTol)
    throw NonPhysicalState("EPR component violates |m_c|^2 <= n(n+1)");
  const TwoModeGaussian th(epr.n(), 0.0, 0.0, 0.0, 0.0);
  std::vector<MixtureComponent> parts;
  if (p > 0.0) parts.push_back({p, epr});
  if (p < 1.0) parts.push_back({1.0 - p, th});
  return GaussianMixture(std::move(parts));
}

}  // namespace hbt
