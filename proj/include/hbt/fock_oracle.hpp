#pragma once

// Brute-force reference: truncated Fock-basis density matrices built from
// unitaries acting on thermal states, and everything computed from them
// (moments, purity, witness values, partial-transpose spectra). Nothing in
// here uses a Gaussian closed form.

#include <Eigen/Dense>

#include <iosfwd>

#include "hbt/gaussian_core.hpp"
#include "hbt/witnesses.hpp"

namespace hbt {

/// Largest acceptable 1 - Tr(rho) for a converged density.
inline constexpr double kTraceTol = 1e-6;
/// Eigenvalues above -kEigTol count as nonnegative.
inline constexpr double kEigTol = 1e-8;
inline constexpr int kCutoffSchedule[] = {15, 25, 40};
inline constexpr int kMaxCutoff = 60;

/// Two-mode entries are indexed (i, j) -> i * cutoff + j, i on mode a.
struct FockDensity {
  int modes = 1;
  int cutoff = 0;
  Eigen::MatrixXcd rho;
  double trace_deficit = 0.0;

  Eigen::Index dim() const { return rho.rows(); }
  bool converged() const { return trace_deficit < kTraceTol; }
};

/// Squeezed thermal state S(xi) rho_th S(xi)^dag, built at a padded working
/// dimension and truncated. With require_converged, a deficit >= kTraceTol
/// throws ConvergenceError.
FockDensity one_mode_density(const OneModeGaussian& s, int cutoff, bool require_converged = true);

/// Uncorrelated states: product of marginals. EPR family: two-mode squeezed
/// thermal state. Otherwise: product inputs through the beam-splitter unitary
/// followed by local phase rotations. Throws DomainError for states with no
/// product decomposition, NonPhysicalState for nonphysical ones.
FockDensity two_mode_density(const TwoModeGaussian& s, int cutoff, bool require_converged = true);
FockDensity two_mode_density(const GaussianMixture& mix, int cutoff, bool require_converged = true);

/// Two-mode squeezed thermal state; used for the EPR family.
FockDensity epr_density(double n, Complex m_c, int cutoff, bool require_converged = true);
/// U (rho_a (x) rho_b) U^dag with the splitter of transforms::beam_splitter.
FockDensity beam_splitter_density(const OneModeGaussian& sa, const OneModeGaussian& sb, double lambda, int cutoff,
                                  bool require_converged = true);
FockDensity tensor(const FockDensity& a, const FockDensity& b);

/// Tr(rho W) / Tr(rho). Throws std::invalid_argument if the word is longer
/// than cutoff / 2 or addresses a mode the density does not have.
Complex moment(const FockDensity& rho, const OperatorWord& word);

double purity(const FockDensity& rho);

/// Smallest eigenvalue of the trace-normalized partial transpose on mode b.
double ppt_min_eigenvalue(const FockDensity& rho);
/// Smallest eigenvalue of the trace-normalized density.
double min_eigenvalue(const FockDensity& rho);

/// W2 on mode a, or WHBT on a two-mode density, normalized with the density's
/// own moments. Throws DomainError for a vanishing normalization.
double expectation_of_witness(const FockDensity& rho, WitnessKind kind);

/// exp((xi* a^2 - xi a^dag^2) / 2) evaluated at the truncated dimension.
Eigen::MatrixXcd squeeze_matrix(Complex xi, int dim);
/// Beam-splitter unitary on the truncated product space, built blockwise in
/// total photon number; the generator is restricted before exponentiation.
Eigen::MatrixXcd beam_splitter_matrix(double lambda, int cutoff);
/// Full (untruncated) photon-number block N of the beam-splitter unitary.
Eigen::MatrixXcd beam_splitter_block(double lambda, int N);

/// 16-byte header (u32 modes, u32 cutoff, two reserved u32) then row-major
/// (re, im) pairs, all little-endian.
void write_binary(const FockDensity& rho, std::ostream& out);
FockDensity read_binary(std::istream& in);

}  // namespace hbt
