#pragma once

// State-producing maps: two-stage amplifier, phase shifts, the 50/50 beam
// splitter and its inverse, quadrature rotation, Werner mixing.

#include "hbt/gaussian_core.hpp"

namespace hbt {

struct AmplifierGains {
  double G;  ///< phase-sensitive gain, >= 1
  double H;  ///< phase-insensitive gain, >= 1
};

/// Output of the phase-sensitive stage followed by the phase-insensitive one,
/// both fed with vacuum. m is real and nonnegative.
OneModeGaussian amplifier_output(AmplifierGains g);

/// H >= (G + 1) / 2.
bool is_classical_threshold(AmplifierGains g);

/// b -> b e^{i lambda}: m -> m e^{2 i lambda}.
OneModeGaussian phase_shift(const OneModeGaussian& s, double lambda);

/// c = (a + b e^{i lambda})/sqrt2, d = (a - b e^{i lambda})/sqrt2, inputs
/// uncorrelated. The output photon number is (n_a + n_b)/2 in both modes.
TwoModeGaussian beam_splitter(const OneModeGaussian& sa, const OneModeGaussian& sb, double lambda);

struct ModePair {
  OneModeGaussian a;
  OneModeGaussian b;
};

/// Recovers the uncorrelated inputs of beam_splitter. Requires m_a == m_b and
/// real m_x (the image of beam_splitter); throws DomainError otherwise.
ModePair inverse_beam_splitter(const TwoModeGaussian& s, double lambda);

/// s = local phases (theta_a on a, theta_b on b) applied to
/// beam_splitter(a, b, 0), or the plain product a (x) b when `product`.
struct ProductDecomposition {
  OneModeGaussian a;
  OneModeGaussian b;
  double theta_a = 0.0;
  double theta_b = 0.0;
  bool product = false;
};

/// Works for uncorrelated states and for states with |m_a| = |m_b| whose m_x
/// is real after removing the local phases (covers every family used here).
/// Throws DomainError for anything else.
ProductDecomposition product_decomposition(const TwoModeGaussian& s);
bool has_product_decomposition(const TwoModeGaussian& s);

/// n + 1/2 - m cos(theta - 2 lambda). Throws UnsupportedPhase for complex m.
double rotated_quadrature_variance(const OneModeGaussian& s, double lambda, double theta);

/// p * epr + (1 - p) * thermal(n) (x) thermal(n). Components with zero weight
/// are dropped.
GaussianMixture werner_mix(const TwoModeGaussian& epr, double p);

}  // namespace hbt
