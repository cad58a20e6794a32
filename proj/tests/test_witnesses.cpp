#include <doctest.h>

#include <cmath>

#include "hbt/errors.hpp"
#include "hbt/transforms.hpp"
#include "hbt/witnesses.hpp"
#include "support.hpp"

using namespace hbt;
using hbt::test::Rng;

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

TEST_CASE("verdicts") {
  CHECK(verdict_of(0.3) == Verdict::ClassicalOrSeparable);
  CHECK(verdict_of(5e-10) == Verdict::Boundary);
  CHECK(verdict_of(-5e-10) == Verdict::Boundary);
  CHECK(verdict_of(-0.3) == Verdict::QuantumOrEntangled);
  CHECK(to_string(Verdict::Boundary) == "Boundary");
  CHECK(to_string(WitnessKind::WHBT) == "WHBT");
}

TEST_CASE("W2 examples") {
  auto r = w2_expectation(thermal(1.0));
  CHECK(r.value == doctest::Approx(1.0));
  CHECK(r.verdict == Verdict::ClassicalOrSeparable);
  CHECK(r.kind == WitnessKind::W2);
  r = w2_expectation({2.0, std::sqrt(6.0)});
  CHECK(r.value == doctest::Approx(-0.5));
  CHECK(r.verdict == Verdict::QuantumOrEntangled);
  CHECK(w2_expectation({0.12, 0.29}).value == doctest::Approx(1.0 - 0.0841 / 0.0144));
  CHECK(w2_expectation(amplifier_output({1.65, 1.05})).value == doctest::Approx(-4.6839).epsilon(1e-4));
  CHECK(w2_expectation({1.0, 1.0}).verdict == Verdict::Boundary);
  CHECK_THROWS_AS(w2_expectation(vacuum()), DomainError);
}

TEST_CASE("W2 sign follows the P class") {
  Rng rng(41);
  for (int i = 0; i < 2000; ++i) {
    const auto s = test::random_one_mode(rng, 0.01, 4.0);
    const auto r = w2_expectation(s);
    CHECK(r.value == doctest::Approx(w2_closed_form(s.n(), std::abs(s.m()))).epsilon(1e-12));
    if (std::abs(s.n() - std::abs(s.m())) < 1e-6) continue;
    CHECK((r.verdict == Verdict::QuantumOrEntangled) == (is_p_representable(s) == PClass::Quantum));
  }
}

TEST_CASE("WHBT examples") {
  const OneModeGaussian s{0.12, 0.29};
  auto r = whbt_expectation(TwoModeGaussian::uncorrelated(s, s));
  CHECK(r.value == doctest::Approx(-0.2738).epsilon(1e-3));
  CHECK(std::abs(r.value + 0.27) < 0.01);
  CHECK(r.verdict == Verdict::QuantumOrEntangled);
  CHECK(r.kind == WitnessKind::WHBT);

  r = whbt_expectation(TwoModeGaussian::epr(1.0, 1.0));
  CHECK(std::abs(r.value) < 1e-12);
  CHECK(r.verdict == Verdict::Boundary);

  r = whbt_expectation(werner_mix(TwoModeGaussian::epr(1.0, kSqrt2), 0.75));
  CHECK(r.value < 0.0);
  CHECK(r.value == doctest::Approx(whbt_closed_werner(1.0, kSqrt2, 0.75)).epsilon(1e-12));
  CHECK(whbt_closed_epr(1.0, 0.5) == doctest::Approx(0.75 / 6.5));

  CHECK_THROWS_AS(whbt_expectation(TwoModeGaussian::uncorrelated(vacuum(), vacuum())), DomainError);
  CHECK_THROWS_AS(whbt_expectation(TwoModeGaussian::epr(1.0, 1.5)), NonPhysicalState);
}

TEST_CASE("WHBT closed forms and signs") {
  Rng rng(42);
  for (int i = 0; i < 2000; ++i) {
    const double n = test::uniform(rng, 0.01, 4.0);
    const double m = std::sqrt(test::uniform(rng, 0.0, 1.0) * n * (n + 1.0));
    const double phase = test::random_phase(rng);

    const auto epr = whbt_expectation(TwoModeGaussian::epr(n, std::polar(m, phase)));
    CHECK(epr.value == doctest::Approx(whbt_closed_epr(n, m)).epsilon(1e-12));
    const auto pair = whbt_expectation(TwoModeGaussian::uncorrelated({n, std::polar(m, phase)}, {n, std::polar(m, phase)}));
    CHECK(pair.value == doctest::Approx(whbt_closed_uncorrelated(n, m)).epsilon(1e-12));
    if (std::abs(m - n) < 1e-6) continue;
    CHECK((epr.value < 0.0) == (m > n));
    CHECK((pair.value < 0.0) == (is_p_representable({n, m}) == PClass::Quantum));

    const double p = test::uniform(rng, 0.0, 1.0);
    const auto w = whbt_expectation(werner_mix(TwoModeGaussian::epr(n, m), p));
    CHECK(w.value == doctest::Approx(whbt_closed_werner(n, m, p)).epsilon(1e-12));
    if (std::abs(n * n - p * m * m) > 1e-6) CHECK((w.value < 0.0) == (n * n < p * m * m));
  }
}

TEST_CASE("fixed-normalization witness is affine in the weights") {
  const auto epr = TwoModeGaussian::epr(1.0, kSqrt2);
  const double d = whbt_denominator(epr);
  const double w0 = whbt_expectation_fixed(werner_mix(epr, 0.0), d);
  const double w1 = whbt_expectation_fixed(werner_mix(epr, 1.0), d);
  CHECK(w1 == doctest::Approx(whbt_expectation(epr).value));
  for (double p : {0.2, 0.5, 0.8})
    CHECK(whbt_expectation_fixed(werner_mix(epr, p), d) == doctest::Approx((1 - p) * w0 + p * w1).epsilon(1e-13));
  CHECK(whbt_numerator(epr) / d == doctest::Approx(0.5 - whbt_expectation(epr).value));
  CHECK_THROWS_AS(whbt_expectation_fixed(werner_mix(epr, 0.5), 0.0), DomainError);
}
