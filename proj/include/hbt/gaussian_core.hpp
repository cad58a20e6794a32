#pragma once

// Zero-mean Gaussian states of one and two bosonic modes, their physicality
// and classicality predicates, and the Wick moment engine.
//
// Conventions: <a^dag a> = n, <a a> = -m. For two modes with equal photon
// number n: <b b> = -m_b, <a b> = -m_c, <a^dag b> = m_x.

#include <array>
#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hbt {

using Complex = std::complex<double>;

/// Absolute tolerance on |m|^2 - n(n+1).
inline constexpr double kPhysTol = 1e-9;
/// Absolute tolerance on n - |m| when classifying P-representability.
inline constexpr double kClassTol = 1e-9;

class OneModeGaussian {
 public:
  /// Throws std::invalid_argument for negative or non-finite n, non-finite m.
  OneModeGaussian(double n, Complex m);

  double n() const noexcept { return n_; }
  Complex m() const noexcept { return m_; }

  friend bool operator==(const OneModeGaussian&, const OneModeGaussian&) = default;

 private:
  double n_;
  Complex m_;
};

OneModeGaussian vacuum();
OneModeGaussian thermal(double n);

class TwoModeGaussian {
 public:
  TwoModeGaussian(double n, Complex m_a, Complex m_b, Complex m_c, Complex m_x = {});

  /// Product of two single-mode states sharing the same photon number.
  static TwoModeGaussian uncorrelated(const OneModeGaussian& a, const OneModeGaussian& b);
  /// Mixed EPR family: no single-mode squeezing, cross-correlation m_c.
  static TwoModeGaussian epr(double n, Complex m_c);
  /// Correlated family with <aa> = -m e^{i l1}, <bb> = -m e^{i l2}, <ab> = -m_c.
  static TwoModeGaussian correlated(double n, double m, double m_c, double lambda1, double lambda2);

  double n() const noexcept { return n_; }
  Complex m_a() const noexcept { return m_a_; }
  Complex m_b() const noexcept { return m_b_; }
  Complex m_c() const noexcept { return m_c_; }
  Complex m_x() const noexcept { return m_x_; }

  bool is_epr_family() const noexcept { return m_a_ == Complex{} && m_b_ == Complex{} && m_x_ == Complex{}; }
  bool is_uncorrelated() const noexcept { return m_c_ == Complex{} && m_x_ == Complex{}; }

  OneModeGaussian marginal_a() const { return {n_, m_a_}; }
  OneModeGaussian marginal_b() const { return {n_, m_b_}; }

  friend bool operator==(const TwoModeGaussian&, const TwoModeGaussian&) = default;

 private:
  double n_;
  Complex m_a_, m_b_, m_c_, m_x_;
};

struct MixtureComponent {
  double weight;
  TwoModeGaussian state;
};

/// Finite convex combination of two-mode Gaussian states.
class GaussianMixture {
 public:
  /// Throws std::invalid_argument unless weights lie in (0, 1] and sum to 1.
  explicit GaussianMixture(std::vector<MixtureComponent> components);

  std::span<const MixtureComponent> components() const noexcept { return components_; }
  std::size_t size() const noexcept { return components_.size(); }

 private:
  std::vector<MixtureComponent> components_;
};

enum class Mode { A, B };

struct LadderToken {
  Mode mode;
  bool dagger;
  friend bool operator==(const LadderToken&, const LadderToken&) = default;
};

/// Normally ordered product of ladder operators, read left to right.
class OperatorWord {
 public:
  /// Throws std::invalid_argument if a daggered token follows an undaggered one.
  explicit OperatorWord(std::vector<LadderToken> tokens);

  /// Space separated tokens: "a+ a+ a a", "a+ b", "b+ b+ a a".
  static OperatorWord parse(std::string_view text);

  std::span<const LadderToken> tokens() const noexcept { return tokens_; }
  std::size_t size() const noexcept { return tokens_.size(); }
  bool empty() const noexcept { return tokens_.empty(); }

  /// Word of the Hermitian-conjugate operator, brought back to normal order.
  OperatorWord adjoint() const;
  std::string to_string() const;

 private:
  std::vector<LadderToken> tokens_;
};

/// Every normally ordered word up to the given length, one canonical
/// representative per operator (a before b inside each group).
std::vector<OperatorWord> all_words(std::size_t max_length);

bool is_physical_one_mode(const OneModeGaussian& s);

enum class PClass { Classical, Boundary, Quantum };
std::string_view to_string(PClass c);

/// Throws NonPhysicalState.
PClass is_p_representable(const OneModeGaussian& s);

/// Gaussian Glauber-Sudarshan P distribution
///   P(alpha) = exp(coeff_nn |alpha|^2 + Re(2 coeff_sq alpha*^2)) / (pi sqrt(d)).
struct PFunction {
  double d;
  double coeff_nn;
  Complex coeff_sq;

  double operator()(Complex alpha) const;
};

/// Throws NotPRepresentable unless the state is strictly classical.
PFunction p_function_params(const OneModeGaussian& s);

Complex weyl_characteristic(const OneModeGaussian& s, Complex alpha);

/// (Delta X1^2, Delta X2^2) for X1 = (a + a^dag)/sqrt2, X2 = (a - a^dag)/(sqrt2 i).
std::pair<double, double> quadrature_variances(const OneModeGaussian& s);

/// Throws DomainError for n = 0.
double g2(const OneModeGaussian& s);

double purity_one_mode(const OneModeGaussian& s);

/// 4x4 Weyl covariance in the (alpha*, alpha, beta*, beta) layout; row-major.
std::array<Complex, 16> weyl_covariance(const TwoModeGaussian& s);
double purity_two_mode(const TwoModeGaussian& s);

/// Smallest eigenvalue of the Gram matrix <x_i^dag x_j>, x = (a, b, a^dag, b^dag).
/// Negative exactly when some linear combination X has <X^dag X> < 0.
double moment_matrix_min_eigenvalue(const TwoModeGaussian& s);
/// moment_matrix_min_eigenvalue >= -kPhysTol.
bool satisfies_uncertainty(const TwoModeGaussian& s);

/// Second moment of a normally ordered pair (first token precedes second).
Complex contraction(const TwoModeGaussian& s, LadderToken first, LadderToken second);

Complex wick_moment(const TwoModeGaussian& s, const OperatorWord& word);
Complex wick_moment(const GaussianMixture& mix, const OperatorWord& word);
/// Single-mode words only (mode A).
Complex wick_moment(const OneModeGaussian& s, const OperatorWord& word);

}  // namespace hbt
