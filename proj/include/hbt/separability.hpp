#pragma once

// Analytic separability criteria for the state families, the Werner threshold
// curves, and the oracle-backed two-mode physicality check.

#include "hbt/gaussian_core.hpp"

namespace hbt {

/// |m_c| > n. Throws NonPhysicalState for |m_c|^2 > n(n+1).
bool epr_is_entangled(double n, double mc_abs);

/// n(n+1) - |m|^2 - sqrt((1 - cos 2 lambda)/2) |m|; separable iff >= 0.
double bs_output_separability_margin(double n, double m_abs, double lambda);
bool bs_output_is_separable(double n, double m_abs, double lambda);

/// n(n+1) - m^2 - m_c^2 - |m_c| sqrt(1 + 2 (1 + cos(l1 + l2)) m^2); separable iff >= 0.
double general_separability_margin(double n, double m, double m_c, double lambda1, double lambda2);
bool general_is_separable(double n, double m, double m_c, double lambda1, double lambda2);

/// n / (n + 1): HBT witness detects entanglement for p above this.
double werner_hbt_threshold(double n);
/// Partial-transpose threshold of the Werner mixture.
double werner_ppt_threshold(double n);

/// Fock-oracle verdict on the cutoff schedule 15 -> 25 -> 40: true iff the
/// converged density has min eigenvalue >= -kEigTol. States whose
/// beam-splitter inputs are nonphysical are rejected before any density is
/// built. Throws InconclusiveError when no cutoff converges and DomainError
/// for states outside the oracle's construction class. Results are memoized.
bool is_physical_two_mode(const TwoModeGaussian& s);

/// Number of memoized physicality verdicts (for tests).
std::size_t physicality_cache_size();

}  // namespace hbt
