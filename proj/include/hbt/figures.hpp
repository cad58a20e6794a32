#pragma once

// Tables behind the figure CSVs.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hbt {

struct FigureTable {
  std::string id;
  std::string comment;  ///< formula the columns evaluate, written as a '#' line
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct FigureOptions {
  int points = 101;
  /// Replaces the squeezing amplitude of figure 10 (default sqrt 2).
  std::optional<double> m_abs;
};

const std::vector<std::string>& figure_ids();

/// Throws std::invalid_argument for an unknown id or points < 2.
FigureTable make_figure(std::string_view id, const FigureOptions& options = {});

/// Uniform grid on [lo, hi] with the landmarks inserted, sorted, deduplicated.
std::vector<double> grid_with_landmarks(double lo, double hi, int points, const std::vector<double>& landmarks);

/// '#' comment, header, one row per line; %.12g, '\n' line endings.
void write_csv(const FigureTable& table, std::ostream& out);
std::string format_number(double x);

}  // namespace hbt
