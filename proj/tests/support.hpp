#pragma once

// Random physical states for the property tests. Every generator draws from a
// caller-owned engine so each test is reproducible from its seed.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "hbt/gaussian_core.hpp"
#include "hbt/transforms.hpp"

namespace hbt::test {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline double random_phase(Rng& rng) { return uniform(rng, -std::numbers::pi, std::numbers::pi); }

/// n ~ U[n_lo, n_hi], |m|^2 = u n(n+1) with u ~ U[0, 1].
inline OneModeGaussian random_one_mode(Rng& rng, double n_lo = 0.05, double n_hi = 1.5, bool real_m = false) {
  const double n = uniform(rng, n_lo, n_hi);
  const double m = std::sqrt(uniform(rng, 0.0, 1.0) * n * (n + 1.0));
  return {n, real_m ? Complex{m, 0.0} : std::polar(m, random_phase(rng))};
}

inline OneModeGaussian random_classical(Rng& rng, double n_lo = 0.05, double n_hi = 1.5) {
  const double n = uniform(rng, n_lo, n_hi);
  return {n, std::polar(n * uniform(rng, 0.0, 1.0), random_phase(rng))};
}

/// |m| strictly between n and sqrt(n(n+1)).
inline OneModeGaussian random_quantum(Rng& rng, double n_lo = 0.05, double n_hi = 1.5) {
  const double n = uniform(rng, n_lo, n_hi);
  const double hi = std::sqrt(n * (n + 1.0));
  return {n, std::polar(n + (hi - n) * uniform(rng, 1e-6, 1.0), random_phase(rng))};
}

enum class Family { Uncorrelated, Epr, BeamSplitter, Correlated };
inline constexpr Family kFamilies[] = {Family::Uncorrelated, Family::Epr, Family::BeamSplitter, Family::Correlated};

inline TwoModeGaussian random_two_mode(Rng& rng, Family family, double n_hi = 1.5) {
  switch (family) {
    case Family::Uncorrelated: {
      const auto a = random_one_mode(rng, 0.05, n_hi);
      const double mb = std::sqrt(uniform(rng, 0.0, 1.0) * a.n() * (a.n() + 1.0));
      return TwoModeGaussian::uncorrelated(a, {a.n(), std::polar(mb, random_phase(rng))});
    }
    case Family::Epr: {
      const auto a = random_one_mode(rng, 0.05, n_hi);
      return TwoModeGaussian::epr(a.n(), a.m());
    }
    case Family::BeamSplitter: {
      // unequal inputs with the same total photon number keep n_out <= n_hi
      const double n = uniform(rng, 0.05, n_hi);
      const double na = n * uniform(rng, 0.5, 1.5);
      const double nb = 2.0 * n - na;
      const double m = std::sqrt(uniform(rng, 0.0, 1.0) * std::min(na * (na + 1.0), nb * (nb + 1.0)));
      const double phase = random_phase(rng);
      return beam_splitter({na, std::polar(m, phase)}, {nb, std::polar(m, phase)}, random_phase(rng));
    }
    case Family::Correlated:
      for (;;) {
        const double n = uniform(rng, 0.05, n_hi);
        const double r = std::sqrt(n * (n + 1.0));
        const auto s = TwoModeGaussian::correlated(n, uniform(rng, 0.0, r), uniform(rng, -r, r), random_phase(rng),
                                                   random_phase(rng));
        if (satisfies_uncertainty(s) && has_product_decomposition(s)) return s;
      }
  }
  return TwoModeGaussian::epr(1.0, 0.0);
}

inline double rel_err(Complex got, Complex want) { return std::abs(got - want) / (1.0 + std::abs(want)); }

}  // namespace hbt::test
