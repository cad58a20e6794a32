#pragma once

// Second-order (intensity-intensity) interference of two modes read out at
// detector phases phi1, phi2, with I(phi) = E^dag E, E = (a + b e^{i phi})/sqrt2.

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "hbt/gaussian_core.hpp"

namespace hbt {

struct VisibilityRecord {
  double v_minus = 0.0;
  double v_plus = 0.0;
  double v_m = 0.0;
  /// delta in cos(phi1 + phi2 + delta)
  double phase_offset_plus = 0.0;
};

struct FringeSample {
  double phi1;
  double phi2;
  double value;
};

/// <:I(phi1) I(phi2):> = (1/4) [S + 2Q cos(phi1 - phi2)
///     + 2 Re((e^{-i phi1} + e^{-i phi2}) X) + 2 Re(e^{-i(phi1 + phi2)} Y)]
/// S = <:(I_a + I_b)^2:>, Q = <a^dag b^dag a b>,
/// X = <a^dag b^dag a a> + <b^dag b^dag a b>, Y = <b^dag b^dag a a>.
struct FringeCoefficients {
  double S = 0.0;
  double Q = 0.0;
  Complex X;
  Complex Y;

  double operator()(double phi1, double phi2) const;
};

FringeCoefficients fringe_coefficients(const TwoModeGaussian& s);
FringeCoefficients fringe_coefficients(const GaussianMixture& mix);

/// Direct normally ordered expansion of the four-operator product.
/// Throws NonPhysicalState when the moment matrix is not positive.
double hbt_correlation(const TwoModeGaussian& s, double phi1, double phi2);
double hbt_correlation(const GaussianMixture& mix, double phi1, double phi2);

/// Normalized record. v_m is the projection of the single-phase coefficient
/// on kappa = e^{i l1} + e^{-i l2}; by default l1 = arg m_a, l2 = arg m_b.
/// Throws DomainError when S = 0 (vacuum).
VisibilityRecord visibility_record(const FringeCoefficients& f, double lambda1 = 0.0, double lambda2 = 0.0);
VisibilityRecord visibility_record(const TwoModeGaussian& s);

/// Uncorrelated pair (n, m) and (n, m e^{i lambda}).
VisibilityRecord visibilities_uncorrelated(double n, double m_abs, double lambda = 0.0);
VisibilityRecord visibility_epr(double n, double mc_abs);
VisibilityRecord visibility_werner(double n, double mc_abs, double p);
/// Output of the beam splitter fed with two copies of (n, m_abs).
VisibilityRecord visibilities_bs_output(double n, double m_abs, double lambda);
/// Correlated family with real m, m_c.
VisibilityRecord visibilities_general(double n, double m, double m_c, double lambda1, double lambda2);

enum class InequalityContext { UncorrelatedPair, BeamSplitterOutput };

struct InequalityReport {
  bool v_minus_lower = true;  ///< v- >= 1/4
  bool v_minus_upper = true;  ///< v- <= 1/3 (pair) or 1/2 (beam splitter)
  bool v_plus_lower = true;   ///< v+ >= 0
  bool v_plus_upper = true;   ///< v+ <= 1/4
  bool sum_upper = true;      ///< v- + v+ <= 1/2

  bool classical() const { return v_minus_lower && v_minus_upper && v_plus_lower && v_plus_upper && sum_upper; }
};

InequalityReport classical_inequality_report(const VisibilityRecord& v, InequalityContext context);

enum class FitModel { InPhaseOnly, InOut, General };

struct FitResult {
  VisibilityRecord record;
  double residual = 0.0;   ///< root-mean-square of the residuals
  std::vector<double> beta;
};

std::size_t parameter_count(FitModel model);

/// Linear least squares on {1, cos(p1-p2), sin(p1-p2), cos(p1+p2), sin(p1+p2),
/// cos p1, sin p1, cos p2, sin p2}, truncated to the model.
/// Throws IllConditioned with fewer than 2x parameters samples or a design
/// condition number above 1e6.
FitResult fit_visibilities(std::span<const FringeSample> samples, FitModel model, double lambda1 = 0.0,
                           double lambda2 = 0.0);

/// Uniform grid sampling phi in {2 pi k / points}.
std::vector<FringeSample> sample_fringes(const FringeCoefficients& f, int points);

}  // namespace hbt
