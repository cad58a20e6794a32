#include "hbt/figures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "hbt/interference.hpp"
#include "hbt/kernels.hpp"
#include "hbt/separability.hpp"

namespace hbt {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);

FigureTable table(std::string id, std::string comment, std::vector<std::string> columns,
                  const std::vector<double>& xs, const kernels::RowFn& row) {
  return {std::move(id), std::move(comment), std::move(columns), kernels::omp::sweep(row, xs)};
}

double smallest_separable_n(double m, double lambda) {
  const double s = std::sqrt(0.5 * (1.0 - std::cos(2.0 * lambda)));
  return -0.5 + std::sqrt(0.25 + m * m + s * m);
}

}  // namespace

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids{"1", "3", "4", "5", "6", "8", "8.1", "10", "11"};
  return ids;
}

std::vector<double> grid_with_landmarks(double lo, double hi, int points, const std::vector<double>& landmarks) {
  if (points < 2) throw std::invalid_argument("a grid needs at least 2 points");
  std::vector<double> xs;
  for (int i = 0; i < points; ++i) xs.push_back(i + 1 == points ? hi : lo + (hi - lo) * i / (points - 1));
  for (double l : landmarks)
    if (l >= lo && l <= hi) xs.push_back(l);
  std::sort(xs.begin(), xs.end());
  std::vector<double> out;
  for (double x : xs) {
    if (!out.empty() && std::abs(x - out.back()) <= 1e-12 * (1.0 + std::abs(x))) {
      // prefer the landmark value, which is the exact one
      for (double l : landmarks)
        if (std::abs(l - x) <= 1e-12 * (1.0 + std::abs(x))) out.back() = l;
      continue;
    }
    out.push_back(x);
  }
  return out;
}

FigureTable make_figure(std::string_view id, const FigureOptions& opt) {
  const int N = opt.points;
  if (id == "1") {
    return table("1", "physical iff |m|^2 <= n(n+1); P-representable iff |m| <= n",
                 {"n", "m_pure", "m_classical"}, grid_with_landmarks(0.0, 2.0, N, {1.0}),
                 [](double n) { return std::vector<double>{n, std::sqrt(n * (n + 1.0)), n}; });
  }
  if (id == "3") {
    return table("3", "v_minus = n^2/(3n^2+|m|^2), v_plus = |m|^2/(3n^2+|m|^2), n = 1",
                 {"m", "v_minus", "v_plus"}, grid_with_landmarks(0.0, kSqrt2, N, {1.0, kSqrt2}), [](double m) {
                   const auto v = visibilities_uncorrelated(1.0, m);
                   return std::vector<double>{m, v.v_minus, v.v_plus};
                 });
  }
  if (id == "4") {
    return table("4", "v_minus + v_plus = (n^2+|m|^2)/(3n^2+|m|^2), n = 1", {"m", "v_sum"},
                 grid_with_landmarks(0.0, kSqrt2, N, {1.0, kSqrt2}), [](double m) {
                   const auto v = visibilities_uncorrelated(1.0, m);
                   return std::vector<double>{m, v.v_minus + v.v_plus};
                 });
  }
  if (id == "5") {
    return table("5", "v_minus = (n^2+|m_c|^2)/(3n^2+|m_c|^2), n = 1", {"m_c", "v_minus"},
                 grid_with_landmarks(0.0, kSqrt2, N, {1.0, kSqrt2}), [](double mc) {
                   return std::vector<double>{mc, visibility_epr(1.0, mc).v_minus};
                 });
  }
  if (id == "6") {
    return table("6",
                 "p_hbt = n/(n+1); p_ppt = 1/(1 + sqrt((1+n)/n) (1+2n^2)^2/(n(1+2n)(1+n^2))); "
                 "entanglement detected above each curve",
                 {"n", "p_hbt", "p_ppt"}, grid_with_landmarks(0.05, 5.0, N, {1.0}), [](double n) {
                   return std::vector<double>{n, werner_hbt_threshold(n), werner_ppt_threshold(n)};
                 });
  }
  if (id == "8") {
    return table("8",
                 "separable iff |m|^2 + sqrt((1-cos 2 lambda)/2)|m| <= n(n+1); columns give the smallest "
                 "separable n per lambda, n_classical = |m|",
                 {"m", "n_lambda_0", "n_lambda_pi_4", "n_lambda_pi_2", "n_classical"},
                 grid_with_landmarks(0.0, 3.0, N, {1.0, kSqrt2}), [](double m) {
                   return std::vector<double>{m, smallest_separable_n(m, 0.0), smallest_separable_n(m, kPi / 4),
                                              smallest_separable_n(m, kPi / 2), m};
                 });
  }
  if (id == "8.1") {
    return table("8.1",
                 "output v_minus = (n^2 + (1-cos 2 lambda)|m|^2/2)/(3n^2+|m|^2), n = 1; inputs |m| = sqrt2 "
                 "(quantum), 1 (boundary), 0.5 (classical)",
                 {"lambda_over_pi", "v_minus_quantum", "v_minus_boundary", "v_minus_classical"},
                 grid_with_landmarks(0.0, 1.0, N, {0.25, 0.5, 0.75}), [](double t) {
                   const double l = t * kPi;
                   return std::vector<double>{t, visibilities_bs_output(1.0, kSqrt2, l).v_minus,
                                              visibilities_bs_output(1.0, 1.0, l).v_minus,
                                              visibilities_bs_output(1.0, 0.5, l).v_minus};
                 });
  }
  if (id == "10") {
    const double m = opt.m_abs.value_or(kSqrt2);
    const bool physical = m * m <= 2.0 + 1e-9;
    std::string comment = "v_minus = (n^2 + (1-cos 2 lambda)|m|^2/2)/(3n^2+|m|^2), v_plus = (1+cos 2 lambda)|m|^2/"
                          "(2(3n^2+|m|^2)), n = 1, |m| = " +
                          format_number(m);
    if (!physical) comment += " (nonphysical: |m|^2 > n(n+1))";
    return table("10", comment, {"lambda_over_pi", "v_minus", "v_plus"},
                 grid_with_landmarks(0.0, 1.0, N, {0.25, 0.5, 0.75}), [m](double t) {
                   const auto v = visibilities_bs_output(1.0, m, t * kPi);
                   return std::vector<double>{t, v.v_minus, v.v_plus};
                 });
  }
  if (id == "11") {
    return table("11",
                 "v_minus = (n^2+m_c^2)/D, v_plus = m^2/D, v_m = m m_c/D, D = 3n^2+m_c^2+m^2; n = 1, m = sqrt2 - "
                 "m_c, lambda1 = 0, lambda2 = pi/2",
                 {"m_c", "m", "v_minus", "v_plus", "v_m", "separable"},
                 grid_with_landmarks(0.0, kSqrt2, N, {1.0 / kSqrt2, 1.0, kSqrt2}), [](double mc) {
                   const double m = std::max(0.0, kSqrt2 - mc);
                   const auto v = visibilities_general(1.0, m, mc, 0.0, kPi / 2);
                   return std::vector<double>{mc, m, v.v_minus, v.v_plus, v.v_m,
                                              general_is_separable(1.0, m, mc, 0.0, kPi / 2) ? 1.0 : 0.0};
                 });
  }
  throw std::invalid_argument("unknown figure id '" + std::string(id) + "'");
}

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void write_csv(const FigureTable& t, std::ostream& out) {
  out << "# figure " << t.id << ": " << t.comment << '\n';
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
    out << '\n';
  }
}

}  // namespace hbt
