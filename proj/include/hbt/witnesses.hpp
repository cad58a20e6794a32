#pragma once

// Nonclassicality witness W2 = 3 - a^dag a^dag a a / <a^dag a>^2 and the HBT
// entanglement witness
//   WHBT = 1/2 - (2 a^dag b^dag a b + b^dag^2 a^2 + a^dag^2 b^2) / <:(I_a + I_b)^2:>.
// Denominators are evaluated on the same state as the numerator.

#include <string_view>

#include "hbt/gaussian_core.hpp"

namespace hbt {

/// Absolute band around zero reported as Boundary.
inline constexpr double kWitnessTol = 1e-9;

enum class Verdict { ClassicalOrSeparable, Boundary, QuantumOrEntangled };
enum class WitnessKind { W2, WHBT };

std::string_view to_string(Verdict v);
std::string_view to_string(WitnessKind k);

struct WitnessReport {
  double value;
  Verdict verdict;
  WitnessKind kind;
};

Verdict verdict_of(double value);

/// Generic Wick evaluation. Throws DomainError for n = 0.
WitnessReport w2_expectation(const OneModeGaussian& s);
/// (n^2 - |m|^2) / n^2.
double w2_closed_form(double n, double m_abs);

/// Generic Wick evaluation. Throws DomainError for a vanishing denominator and
/// NonPhysicalState for moments that admit no state.
WitnessReport whbt_expectation(const TwoModeGaussian& s);
WitnessReport whbt_expectation(const GaussianMixture& mix);

/// Witness with the normalization frozen at `denominator`: affine in the
/// mixture weights, unlike the state-indexed version.
double whbt_expectation_fixed(const GaussianMixture& mix, double denominator);
double whbt_numerator(const TwoModeGaussian& s);
double whbt_denominator(const TwoModeGaussian& s);

double whbt_closed_uncorrelated(double n, double m_abs);
double whbt_closed_epr(double n, double mc_abs);
double whbt_closed_werner(double n, double mc_abs, double p);

}  // namespace hbt
