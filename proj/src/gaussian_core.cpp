#include "hbt/gaussian_core.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hbt/errors.hpp"

namespace hbt {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite(Complex z, const char* name) {
  if (!finite(z)) throw std::invalid_argument(std::string(name) + " must be finite");
}

void require_photon_number(double n) {
  if (!std::isfinite(n) || n < 0.0) throw std::invalid_argument("photon number n must be finite and >= 0");
}

}  // namespace

OneModeGaussian::OneModeGaussian(double n, Complex m) : n_(n), m_(m) {
  require_photon_number(n);
  require_finite(m, "m");
}

OneModeGaussian vacuum() { return {0.0, 0.0}; }
OneModeGaussian thermal(double n) { return {n, 0.0}; }

TwoModeGaussian::TwoModeGaussian(double n, Complex m_a, Complex m_b, Complex m_c, Complex m_x)
    : n_(n), m_a_(m_a), m_b_(m_b), m_c_(m_c), m_x_(m_x) {
  require_photon_number(n);
  require_finite(m_a, "m_a");
  require_finite(m_b, "m_b");
  require_finite(m_c, "m_c");
  require_finite(m_x, "m_x");
}

TwoModeGaussian TwoModeGaussian::uncorrelated(const OneModeGaussian& a, const OneModeGaussian& b) {
  if (a.n() != b.n()) throw std::invalid_argument("uncorrelated pair needs equal photon numbers");
  return {a.n(), a.m(), b.m(), 0.0, 0.0};
}

TwoModeGaussian TwoModeGaussian::epr(double n, Complex m_c) { return {n, 0.0, 0.0, m_c, 0.0}; }

TwoModeGaussian TwoModeGaussian::correlated(double n, double m, double m_c, double lambda1, double lambda2) {
  return {n, std::polar(m, lambda1), std::polar(m, lambda2), m_c, 0.0};
}

GaussianMixture::GaussianMixture(std::vector<MixtureComponent> components) : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("mixture needs at least one component");
  double total = 0.0;
  for (const auto& c : components_) {
    if (!(c.weight > 0.0 && c.weight <= 1.0)) throw std::invalid_argument("mixture weight outside (0, 1]");
    total += c.weight;
  }
  if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("mixture weights must sum to 1");
}

// ---------------------------------------------------------------------------
// Operator words

OperatorWord::OperatorWord(std::vector<LadderToken> tokens) : tokens_(std::move(tokens)) {
  bool seen_annihilator = false;
  for (const auto& t : tokens_) {
    if (t.dagger && seen_annihilator) throw std::invalid_argument("operator word is not normally ordered");
    if (!t.dagger) seen_annihilator = true;
  }
}

OperatorWord OperatorWord::parse(std::string_view text) {
  std::vector<LadderToken> tokens;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "a") tokens.push_back({Mode::A, false});
    else if (tok == "a+") tokens.push_back({Mode::A, true});
    else if (tok == "b") tokens.push_back({Mode::B, false});
    else if (tok == "b+") tokens.push_back({Mode::B, true});
    else throw std::invalid_argument("unknown ladder token '" + tok + "'");
  }
  return OperatorWord(std::move(tokens));
}

OperatorWord OperatorWord::adjoint() const {
  std::vector<LadderToken> out;
  out.reserve(tokens_.size());
  // (x1 ... xk)^dag = xk^dag ... x1^dag; creators and annihilators each commute
  // among themselves, so only the dagger flags and the group order change.
  for (bool dagger : {true, false})
    for (Mode mode : {Mode::A, Mode::B})
      for (const auto& t : tokens_)
        if (t.mode == mode && !t.dagger == dagger) out.push_back({mode, dagger});
  return OperatorWord(std::move(out));
}

std::string OperatorWord::to_string() const {
  std::string s;
  for (const auto& t : tokens_) {
    if (!s.empty()) s += ' ';
    s += t.mode == Mode::A ? 'a' : 'b';
    if (t.dagger) s += '+';
  }
  return s;
}

std::vector<OperatorWord> all_words(std::size_t max_length) {
  std::vector<OperatorWord> words;
  for (std::size_t len = 1; len <= max_length; ++len)
    for (std::size_t ad = 0; ad <= len; ++ad)
      for (std::size_t bd = 0; ad + bd <= len; ++bd)
        for (std::size_t an = 0; ad + bd + an <= len; ++an) {
          const std::size_t bn = len - ad - bd - an;
          std::vector<LadderToken> t;
          t.insert(t.end(), ad, {Mode::A, true});
          t.insert(t.end(), bd, {Mode::B, true});
          t.insert(t.end(), an, {Mode::A, false});
          t.insert(t.end(), bn, {Mode::B, false});
          words.emplace_back(std::move(t));
        }
  return words;
}

// ---------------------------------------------------------------------------
// One-mode predicates and closed forms

bool is_physical_one_mode(const OneModeGaussian& s) {
  return std::norm(s.m()) <= s.n() * (s.n() + 1.0) + kPhysTol;
}

std::string_view to_string(PClass c) {
  switch (c) {
    case PClass::Classical: return "Classical";
    case PClass::Boundary: return "Boundary";
    case PClass::Quantum: return "Quantum";
  }
  return "?";
}

PClass is_p_representable(const OneModeGaussian& s) {
  if (!is_physical_one_mode(s)) throw NonPhysicalState("state violates |m|^2 <= n(n+1)");
  const double gap = s.n() - std::abs(s.m());
  if (gap > kClassTol) return PClass::Classical;
  if (gap < -kClassTol) return PClass::Quantum;
  return PClass::Boundary;
}

double PFunction::operator()(Complex alpha) const {
  const double exponent = coeff_nn * std::norm(alpha) + 2.0 * (coeff_sq * std::conj(alpha * alpha)).real();
  return std::exp(exponent) / (std::numbers::pi * std::sqrt(d));
}

PFunction p_function_params(const OneModeGaussian& s) {
  if (is_p_representable(s) != PClass::Classical)
    throw NotPRepresentable("P function is singular unless n > |m|");
  const double d = s.n() * s.n() - std::norm(s.m());
  return {d, -s.n() / d, -s.m() / (2.0 * d)};
}

Complex weyl_characteristic(const OneModeGaussian& s, Complex alpha) {
  if (!is_physical_one_mode(s)) throw NonPhysicalState("state violates |m|^2 <= n(n+1)");
  if (alpha == Complex{}) return 1.0;
  const double exponent = -(s.n() + 0.5) * std::norm(alpha) - (s.m() * std::conj(alpha) * std::conj(alpha)).real();
  return std::exp(exponent);
}

std::pair<double, double> quadrature_variances(const OneModeGaussian& s) {
  const double re = s.m().real();  // |m| cos(arg m)
  return {s.n() + 0.5 - re, s.n() + 0.5 + re};
}

double g2(const OneModeGaussian& s) {
  if (s.n() == 0.0) throw DomainError("g2 undefined for n = 0");
  return 2.0 + std::norm(s.m()) / (s.n() * s.n());
}

double purity_one_mode(const OneModeGaussian& s) {
  if (!is_physical_one_mode(s)) throw NonPhysicalState("state violates |m|^2 <= n(n+1)");
  const double det = (s.n() + 0.5) * (s.n() + 0.5) - std::norm(s.m());
  return std::min(1.0, 1.0 / (2.0 * std::sqrt(det)));
}

std::array<Complex, 16> weyl_covariance(const TwoModeGaussian& s) {
  const double d = s.n() + 0.5;
  const Complex ma = s.m_a(), mb = s.m_b(), mc = s.m_c(), mx = s.m_x();
  return {d,            ma,           std::conj(mx), mc,
          std::conj(ma), d,           std::conj(mc), mx,
          mx,           mc,           d,             mb,
          std::conj(mc), std::conj(mx), std::conj(mb), d};
}

double purity_two_mode(const TwoModeGaussian& s) {
  const auto c = weyl_covariance(s);
  Eigen::Matrix4cd m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = c[4 * i + j];
  const double det = m.determinant().real();
  if (!(det > 0.0)) throw NonPhysicalState("two-mode covariance is not positive definite");
  return 1.0 / (4.0 * std::sqrt(det));
}

double moment_matrix_min_eigenvalue(const TwoModeGaussian& s) {
  const double n = s.n();
  const Complex ma = s.m_a(), mb = s.m_b(), mc = s.m_c(), mx = s.m_x();
  Eigen::Matrix4cd g;
  g << n, mx, -std::conj(ma), -std::conj(mc),
       std::conj(mx), n, -std::conj(mc), -std::conj(mb),
       -ma, -mc, n + 1.0, std::conj(mx),
       -mc, -mb, mx, n + 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(g, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

bool satisfies_uncertainty(const TwoModeGaussian& s) { return moment_matrix_min_eigenvalue(s) >= -kPhysTol; }

// ---------------------------------------------------------------------------
// Wick engine

Complex contraction(const TwoModeGaussian& s, LadderToken first, LadderToken second) {
  const bool same = first.mode == second.mode;
  if (first.dagger && !second.dagger) {
    if (same) return s.n();
    return first.mode == Mode::A ? s.m_x() : std::conj(s.m_x());
  }
  if (!first.dagger && second.dagger)
    throw std::invalid_argument("contraction of an anti-normally ordered pair");
  Complex squeeze = same ? (first.mode == Mode::A ? s.m_a() : s.m_b()) : s.m_c();
  return first.dagger ? -std::conj(squeeze) : -squeeze;
}

namespace {

// Sum over perfect matchings of the unused tokens; bit i of `used` marks token i.
Complex pairings(const TwoModeGaussian& s, std::span<const LadderToken> t, unsigned used) {
  const unsigned all = (1u << t.size()) - 1u;
  if (used == all) return 1.0;
  unsigned first = 0;
  while (used & (1u << first)) ++first;
  Complex total = 0.0;
  for (unsigned j = first + 1; j < t.size(); ++j) {
    if (used & (1u << j)) continue;
    const Complex c = contraction(s, t[first], t[j]);
    if (c == Complex{}) continue;
    total += c * pairings(s, t, used | (1u << first) | (1u << j));
  }
  return total;
}

}  // namespace

Complex wick_moment(const TwoModeGaussian& s, const OperatorWord& word) {
  if (word.size() > 24) throw std::invalid_argument("operator word too long for the pairing engine");
  if (word.size() % 2 == 1) return 0.0;
  return pairings(s, word.tokens(), 0u);
}

Complex wick_moment(const GaussianMixture& mix, const OperatorWord& word) {
  Complex total = 0.0;
  for (const auto& c : mix.components()) total += c.weight * wick_moment(c.state, word);
  return total;
}

Complex wick_moment(const OneModeGaussian& s, const OperatorWord& word) {
  for (const auto& t : word.tokens())
    if (t.mode != Mode::A) throw std::invalid_argument("single-mode moment with a mode-b token");
  return wick_moment(TwoModeGaussian(s.n(), s.m(), 0.0, 0.0, 0.0), word);
}

}  // namespace hbt
