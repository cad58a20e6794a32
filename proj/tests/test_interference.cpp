#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hbt/errors.hpp"
#include "hbt/interference.hpp"
#include "hbt/transforms.hpp"
#include "support.hpp"

using namespace hbt;
using hbt::test::Rng;

namespace {
constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);

void check_record(const VisibilityRecord& got, const VisibilityRecord& want, double tol) {
  CHECK(std::abs(got.v_minus - want.v_minus) <= tol);
  CHECK(std::abs(got.v_plus - want.v_plus) <= tol);
  CHECK(std::abs(got.v_m - want.v_m) <= tol);
}

// offsets only mean something when v_plus does
void check_offset(const VisibilityRecord& got, const VisibilityRecord& want, double tol) {
  if (want.v_plus < 1e-6) return;
  CHECK(std::abs(std::remainder(got.phase_offset_plus - want.phase_offset_plus, 2 * kPi)) <= tol);
}
}  // namespace

TEST_CASE("fringe landmarks") {
  const auto th = TwoModeGaussian::uncorrelated(thermal(1.0), thermal(1.0));
  CHECK(hbt_correlation(th, 0.4, 0.4) == doctest::Approx(2.0));
  const auto epr = TwoModeGaussian::epr(1.0, kSqrt2);
  CHECK(hbt_correlation(epr, 0.0, kPi) == doctest::Approx(1.0));
  CHECK(hbt_correlation(epr, 1.3, 1.3 + kPi) == doctest::Approx(1.0));
  CHECK(hbt_correlation(epr, 0.3, 0.3 + 2 * kPi) == doctest::Approx(hbt_correlation(epr, 0.3, 0.3)));
}

TEST_CASE("frozen fringe grid on a correlated state") {
  const auto s = TwoModeGaussian::correlated(1.0, 0.2, 1.1, 0.0, 0.0);
  const double want[4][4] = {{3.69, 2.345, 1.0, 2.345},
                             {2.345, 3.21, 1.905, 1.04},
                             {1.0, 1.905, 2.81, 1.905},
                             {2.345, 1.04, 1.905, 3.21}};
  const auto f = fringe_coefficients(s);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      CHECK(hbt_correlation(s, i * kPi / 2, j * kPi / 2) == doctest::Approx(want[i][j]).epsilon(1e-12));
      CHECK(f(i * kPi / 2, j * kPi / 2) == doctest::Approx(want[i][j]).epsilon(1e-12));
    }
}

TEST_CASE("frozen fringe value on a beam-splitter output with unequal inputs") {
  const auto s = beam_splitter({1.2, Complex{0.5, 0.2}}, {0.4, Complex{0.3, -0.1}}, 0.6);
  CHECK(hbt_correlation(s, 0.7, 1.9) == doctest::Approx(1.37919073170575).epsilon(1e-12));
}

TEST_CASE("coefficient form agrees with the direct expansion") {
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const auto s = test::random_two_mode(rng, test::kFamilies[i % 4], 3.0);
    const auto f = fringe_coefficients(s);
    for (int k = 0; k < 8; ++k) {
      const double p1 = test::random_phase(rng), p2 = test::random_phase(rng);
      CHECK(f(p1, p2) == doctest::Approx(hbt_correlation(s, p1, p2)).epsilon(1e-12));
    }
  }
}

TEST_CASE("fringes are nonnegative on a 64x64 grid") {
  Rng rng(32);
  for (int i = 0; i < 40; ++i) {
    const auto s = test::random_two_mode(rng, test::kFamilies[i % 4], 3.0);
    const auto f = fringe_coefficients(s);
    double lowest = INFINITY;
    for (int a = 0; a < 64; ++a)
      for (int b = 0; b < 64; ++b) lowest = std::min(lowest, f(2 * kPi * a / 64, 2 * kPi * b / 64));
    CHECK(lowest >= -1e-12);
  }
}

TEST_CASE("detector swap symmetry when m_a = m_b") {
  Rng rng(33);
  for (int i = 0; i < 100; ++i) {
    const auto in = test::random_one_mode(rng);
    const auto s = beam_splitter(in, in, test::random_phase(rng));
    const double p1 = test::random_phase(rng), p2 = test::random_phase(rng);
    CHECK(hbt_correlation(s, p1, p2) == doctest::Approx(hbt_correlation(s, p2, p1)).epsilon(1e-12));
  }
}

TEST_CASE("closed-form visibilities") {
  auto v = visibilities_uncorrelated(1.0, 0.0);
  CHECK(v.v_minus == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(v.v_plus == 0.0);
  v = visibilities_uncorrelated(1.0, 1.0);
  CHECK(v.v_minus == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(v.v_plus == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(visibility_epr(1.0, kSqrt2).v_minus == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(visibility_epr(1.0, 1.0).v_minus == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(visibility_werner(1.0, kSqrt2, 0.0).v_minus == doctest::Approx(1.0 / 3.0));
  CHECK(visibility_werner(1.0, kSqrt2, 1.0).v_minus == doctest::Approx(0.6));
  CHECK_THROWS_AS(visibility_epr(1.0, 1.5), NonPhysicalState);
  CHECK_THROWS_AS(visibilities_uncorrelated(0.0, 0.0), DomainError);

  v = visibilities_general(1.0, kSqrt2 - 1.0 / kSqrt2, 1.0 / kSqrt2, 0.0, kPi / 2);
  CHECK(v.v_minus == doctest::Approx(3.0 / 8.0).epsilon(1e-12));
  CHECK(v.v_plus == doctest::Approx(1.0 / 8.0).epsilon(1e-12));
  CHECK(v.v_m == doctest::Approx(1.0 / 8.0).epsilon(1e-12));
}

TEST_CASE("closed forms match the Wick record") {
  Rng rng(34);
  for (int i = 0; i < 300; ++i) {
    const auto in = test::random_one_mode(rng, 0.05, 3.0);
    const double n = in.n(), m = std::abs(in.m());
    const double lambda = test::random_phase(rng);
    const auto pair = TwoModeGaussian::uncorrelated({n, m}, {n, std::polar(m, lambda)});
    check_record(visibility_record(pair), visibilities_uncorrelated(n, m, lambda), 1e-12);
    check_offset(visibility_record(pair), visibilities_uncorrelated(n, m, lambda), 1e-9);

    check_record(visibility_record(TwoModeGaussian::epr(n, in.m())), visibility_epr(n, m), 1e-12);

    const OneModeGaussian real_in{n, m};
    const auto bs = beam_splitter(real_in, real_in, lambda);
    check_record(visibility_record(bs), visibilities_bs_output(n, m, lambda), 1e-12);
  }
  for (int i = 0; i < 300; ++i) {
    const auto s = test::random_two_mode(rng, test::Family::Correlated, 3.0);
    const double l1 = std::arg(s.m_a()), l2 = std::arg(s.m_b());
    const auto want = visibilities_general(s.n(), std::abs(s.m_a()), s.m_c().real(), l1, l2);
    check_record(visibility_record(s), want, 1e-12);
  }
}

TEST_CASE("visibility invariants") {
  Rng rng(35);
  for (int i = 0; i < 1000; ++i) {
    const double n = test::uniform(rng, 0.01, 4.0);
    const double mc = std::sqrt(test::uniform(rng, 0.0, 1.0) * n * (n + 1.0));
    if (std::abs(mc - n) > 1e-9) CHECK((visibility_epr(n, mc).v_minus > 0.5) == (mc > n));

    const auto v = visibilities_uncorrelated(n, mc);
    const auto rep = classical_inequality_report(v, InequalityContext::UncorrelatedPair);
    if (mc > n + 1e-9) {
      CHECK(v.v_minus <= v.v_plus);
      CHECK(v.v_minus < 0.25);
      CHECK(v.v_plus > 0.25);
      CHECK(v.v_minus + v.v_plus > 0.5);
      CHECK_FALSE(rep.classical());
    } else if (mc < n - 1e-9) {
      CHECK(rep.classical());
    }
    const double pure = std::sqrt(n * (n + 1.0));
    CHECK_FALSE(classical_inequality_report(visibilities_uncorrelated(n, pure), InequalityContext::UncorrelatedPair)
                    .classical());

    const auto bs = visibilities_bs_output(n, mc, kPi / 2), epr = visibility_epr(n, mc);
    CHECK(bs.v_minus == doctest::Approx(epr.v_minus).epsilon(1e-14));
    CHECK(bs.v_plus == doctest::Approx(epr.v_plus).epsilon(1e-14));
    CHECK(bs.v_m == doctest::Approx(epr.v_m).epsilon(1e-14));

    for (const auto& r : {v, epr, bs}) {
      CHECK(r.v_minus >= 0.0);
      CHECK(r.v_minus <= 1.0);
      CHECK(r.v_plus >= 0.0);
      CHECK(r.v_plus <= 1.0);
    }
  }
}

TEST_CASE("inequality report bounds") {
  auto rep = classical_inequality_report(visibilities_uncorrelated(1.0, 0.5), InequalityContext::UncorrelatedPair);
  CHECK(rep.classical());
  rep = classical_inequality_report(visibilities_uncorrelated(0.12, 0.29), InequalityContext::UncorrelatedPair);
  CHECK_FALSE(rep.v_minus_lower);
  CHECK_FALSE(rep.v_plus_upper);
  CHECK_FALSE(rep.sum_upper);
  // the beam-splitter context allows v- up to 1/2
  const VisibilityRecord v{0.45, 0.0, 0.0, 0.0};
  CHECK_FALSE(classical_inequality_report(v, InequalityContext::UncorrelatedPair).v_minus_upper);
  CHECK(classical_inequality_report(v, InequalityContext::BeamSplitterOutput).v_minus_upper);
}

TEST_CASE("fit examples") {
  const auto epr = fringe_coefficients(TwoModeGaussian::epr(1.0, kSqrt2));
  auto fit = fit_visibilities(sample_fringes(epr, 8), FitModel::InOut);
  CHECK(std::abs(fit.record.v_minus - 0.6) < 1e-10);
  CHECK(fit.residual < 1e-12);

  const auto th = fringe_coefficients(TwoModeGaussian::uncorrelated(thermal(1.0), thermal(1.0)));
  fit = fit_visibilities(sample_fringes(th, 8), FitModel::InPhaseOnly);
  CHECK(std::abs(fit.record.v_minus - 1.0 / 3.0) < 1e-10);

  const auto two = sample_fringes(th, 8);
  CHECK_THROWS_AS(fit_visibilities(std::span(two).first(2), FitModel::InPhaseOnly), IllConditioned);

  std::vector<FringeSample> diagonal;
  for (int k = 0; k < 16; ++k) diagonal.push_back({0.3 * k, 0.3 * k, th(0.3 * k, 0.3 * k)});
  CHECK_THROWS_AS(fit_visibilities(diagonal, FitModel::InPhaseOnly), IllConditioned);

  CHECK(parameter_count(FitModel::InPhaseOnly) == 3);
  CHECK(parameter_count(FitModel::InOut) == 5);
  CHECK(parameter_count(FitModel::General) == 9);
}

TEST_CASE("fit round trip across families") {
  Rng rng(36);
  for (int i = 0; i < 200; ++i) {
    const auto s = test::random_two_mode(rng, test::kFamilies[i % 4], 3.0);
    const auto f = fringe_coefficients(s);
    const double l1 = std::arg(s.m_a()), l2 = std::arg(s.m_b());
    const auto fit = fit_visibilities(sample_fringes(f, 8), FitModel::General, l1, l2);
    const auto want = visibility_record(f, l1, l2);
    check_record(fit.record, want, 1e-8);
    check_offset(fit.record, want, 1e-6);
  }
}

TEST_CASE("mixture fringes are weight averages") {
  const auto mix = werner_mix(TwoModeGaussian::epr(1.0, kSqrt2), 0.6);
  double want = 0.0;
  for (const auto& c : mix.components()) want += c.weight * hbt_correlation(c.state, 0.2, 2.1);
  CHECK(hbt_correlation(mix, 0.2, 2.1) == doctest::Approx(want).epsilon(1e-13));
  CHECK(fringe_coefficients(mix)(0.2, 2.1) == doctest::Approx(want).epsilon(1e-13));
}
