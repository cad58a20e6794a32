#include "hbt/witnesses.hpp"

#include <cmath>

#include "hbt/errors.hpp"

namespace hbt {

namespace {

const OperatorWord& w(int i) {
  static const OperatorWord words[] = {
      OperatorWord::parse("a+ a+ a a"), OperatorWord::parse("b+ b+ b b"), OperatorWord::parse("a+ b+ a b"),
      OperatorWord::parse("b+ b+ a a"), OperatorWord::parse("a+ a+ b b"), OperatorWord::parse("a+ a"),
  };
  return words[i];
}

template <class State>
double numerator_of(const State& s) {
  return (2.0 * wick_moment(s, w(2)) + wick_moment(s, w(3)) + wick_moment(s, w(4))).real();
}

template <class State>
double denominator_of(const State& s) {
  return (wick_moment(s, w(0)) + wick_moment(s, w(1)) + 2.0 * wick_moment(s, w(2))).real();
}

WitnessReport report(double value, WitnessKind kind) { return {value, verdict_of(value), kind}; }

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::ClassicalOrSeparable: return "ClassicalOrSeparable";
    case Verdict::Boundary: return "Boundary";
    case Verdict::QuantumOrEntangled: return "QuantumOrEntangled";
  }
  return "?";
}

std::string_view to_string(WitnessKind k) { return k == WitnessKind::W2 ? "W2" : "WHBT"; }

Verdict verdict_of(double value) {
  if (value < -kWitnessTol) return Verdict::QuantumOrEntangled;
  if (value > kWitnessTol) return Verdict::ClassicalOrSeparable;
  return Verdict::Boundary;
}

WitnessReport w2_expectation(const OneModeGaussian& s) {
  if (s.n() == 0.0) throw DomainError("W2 undefined for n = 0");
  if (!is_physical_one_mode(s)) throw NonPhysicalState("state violates |m|^2 <= n(n+1)");
  const double n = wick_moment(s, w(5)).real();
  return report(3.0 - wick_moment(s, w(0)).real() / (n * n), WitnessKind::W2);
}

double w2_closed_form(double n, double m_abs) {
  if (n == 0.0) throw DomainError("W2 undefined for n = 0");
  return (n * n - m_abs * m_abs) / (n * n);
}

double whbt_numerator(const TwoModeGaussian& s) { return numerator_of(s); }
double whbt_denominator(const TwoModeGaussian& s) { return denominator_of(s); }

WitnessReport whbt_expectation(const TwoModeGaussian& s) {
  if (!satisfies_uncertainty(s)) throw NonPhysicalState("two-mode moments admit no quantum state");
  const double d = denominator_of(s);
  if (!(d > 0.0)) throw DomainError("HBT witness normalization vanishes (vacuum)");
  return report(0.5 - numerator_of(s) / d, WitnessKind::WHBT);
}

WitnessReport whbt_expectation(const GaussianMixture& mix) {
  for (const auto& c : mix.components())
    if (!satisfies_uncertainty(c.state)) throw NonPhysicalState("mixture component admits no quantum state");
  const double d = denominator_of(mix);
  if (!(d > 0.0)) throw DomainError("HBT witness normalization vanishes (vacuum)");
  return report(0.5 - numerator_of(mix) / d, WitnessKind::WHBT);
}

double whbt_expectation_fixed(const GaussianMixture& mix, double denominator) {
  if (!(denominator > 0.0)) throw DomainError("fixed normalization must be positive");
  return 0.5 - numerator_of(mix) / denominator;
}

double whbt_closed_uncorrelated(double n, double m_abs) {
  const double m2 = m_abs * m_abs;
  if (n == 0.0 && m2 == 0.0) throw DomainError("HBT witness normalization vanishes (vacuum)");
  return (n * n - m2) / (2.0 * (3.0 * n * n + m2));
}

double whbt_closed_epr(double n, double mc_abs) { return whbt_closed_werner(n, mc_abs, 1.0); }

double whbt_closed_werner(double n, double mc_abs, double p) {
  const double c2 = p * mc_abs * mc_abs;
  if (n == 0.0) throw DomainError("HBT witness normalization vanishes (vacuum)");
  return (n * n - c2) / (2.0 * (3.0 * n * n + c2));
}

}  // namespace hbt
