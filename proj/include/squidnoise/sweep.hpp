#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "squidnoise/matching.hpp"

// Frequency sweeps over a configured chain and CSV emission. Rows are pure
// functions of the configuration: no timestamps, environment values, or other
// nondeterminism reach the output.

namespace squidnoise {

enum class SweepOutput {
  eta,             // dimensionless
  epsilon_uc,      // units of hbar
  t_min_on_res,    // K
  t_min_complex,   // K
  kappa_g_on_res,  // dimensionless
  kappa_g_scan,    // dimensionless
};

enum class GridSpacing { log, linear };

struct SweepConfig {
  ChainConfig chain;
  double f_start;  // Hz
  double f_stop;   // Hz
  int points = 121;
  GridSpacing grid = GridSpacing::log;
  double resonator_Q = 1e6;
  double resonator_T = 0.010;  // K
  std::vector<SweepOutput> outputs;

  // Checks ranges, point count, output list, and that the preamp bands cover
  // [f_start, f_stop]; throws std::invalid_argument otherwise.
  void validate() const;
};

// One row per frequency. values is parallel to the requested outputs; a cell
// is empty when that output failed at this frequency (e.g. the matched
// coupling would exceed kappa_g = 1), with the reason collected in error.
// Failing rows never abort a sweep.
struct SweepRow {
  double f_hz;
  std::vector<std::optional<double>> values;
  std::string error;
};

// Inclusive grid from f_start to f_stop; both endpoints exact.
std::vector<double> frequency_grid(double f_start, double f_stop, int points, GridSpacing grid);

std::vector<SweepRow> run_sweep(const SweepConfig& config);

// Column name with unit suffix, e.g. epsilon_uc -> "epsilon_uc_hbar".
std::string csv_column_name(SweepOutput output);

// Header plus one line per row, values at 9 significant digits, final line
// newline-terminated. An "error" column is appended exactly when the output
// list contains a matching output that can fail per-row. Throws
// std::invalid_argument on an empty row list (the path overload creates no
// file in that case) and std::runtime_error with path context on I/O failure.
void emit_csv(const std::vector<SweepRow>& rows, const std::vector<SweepOutput>& outputs,
              std::ostream& os);
void emit_csv(const std::vector<SweepRow>& rows, const std::vector<SweepOutput>& outputs,
              const std::string& path);

}  // namespace squidnoise
