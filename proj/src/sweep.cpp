#include "squidnoise/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace squidnoise {

namespace {

bool output_can_fail(SweepOutput o) {
  return o == SweepOutput::kappa_g_on_res || o == SweepOutput::kappa_g_scan;
}

bool any_can_fail(const std::vector<SweepOutput>& outputs) {
  for (auto o : outputs)
    if (output_can_fail(o)) return true;
  return false;
}

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

// Error text goes into a plain CSV cell; keep it free of separators.
std::string sanitize_cell(std::string s) {
  for (char& c : s)
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  return s;
}

}  // namespace

void SweepConfig::validate() const {
  detail::require_positive(f_start, "f_start");
  detail::require_positive(f_stop, "f_stop");
  if (!(f_start < f_stop)) throw std::invalid_argument("sweep requires f_start < f_stop");
  if (points < 2) throw std::invalid_argument("sweep requires at least 2 points");
  if (outputs.empty()) throw std::invalid_argument("sweep requires at least one output column");
  for (std::size_t i = 0; i < outputs.size(); ++i)
    for (std::size_t j = i + 1; j < outputs.size(); ++j)
      if (outputs[i] == outputs[j]) throw std::invalid_argument("duplicate output column requested");
  detail::require_positive(resonator_Q, "resonator Q");
  detail::require_non_negative(resonator_T, "resonator temperature");

  validate_preamp_bands(chain.preamp_bands);
  // the configured bands must cover the whole sweep range
  double cursor = f_start;
  for (const auto& band : chain.preamp_bands) {
    if (band.f_max <= cursor) continue;
    if (band.f_min > cursor) break;
    cursor = band.f_max;
  }
  if (cursor < f_stop)
    throw std::invalid_argument(
        "preamp bands do not cover the sweep range: coverage ends at " +
        std::to_string(cursor) + " Hz but f_stop is " + std::to_string(f_stop) + " Hz");
}

std::vector<double> frequency_grid(double f_start, double f_stop, int points, GridSpacing grid) {
  std::vector<double> out(points);
  if (grid == GridSpacing::log) {
    const double ratio = std::log(f_stop / f_start);
    for (int i = 0; i < points; ++i)
      out[i] = f_start * std::exp(ratio * i / (points - 1));
  } else {
    const double step = (f_stop - f_start) / (points - 1);
    for (int i = 0; i < points; ++i) out[i] = f_start + step * i;
  }
  out.front() = f_start;
  out.back() = f_stop;
  return out;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  config.validate();
  const double k2lin =
      config.chain.coupling.kappa * config.chain.coupling.kappa * config.chain.coupling.Lin;
  const auto grid = frequency_grid(config.f_start, config.f_stop, config.points, config.grid);

  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (double f : grid) {
    SweepRow row;
    row.f_hz = f;
    const auto omega = AngularFrequency::from_hz(f);
    const NoiseBudget budget = system_noise_budget(config.chain, omega);
    for (auto output : config.outputs) {
      try {
        double v = 0.0;
        switch (output) {
          case SweepOutput::eta: v = eta(budget); break;
          case SweepOutput::epsilon_uc: v = epsilon_uc(budget, k2lin) / constants::hbar; break;
          case SweepOutput::t_min_on_res: v = t_min_on_resonance(budget); break;
          case SweepOutput::t_min_complex: v = t_min_complex(budget); break;
          case SweepOutput::kappa_g_on_res:
            v = match_on_resonance(budget, k2lin, config.resonator_Q).kappa_g;
            break;
          case SweepOutput::kappa_g_scan:
            v = match_scan_sensitivity(budget, k2lin, config.resonator_Q,
                                       thermal_occupation(omega, config.resonator_T));
            break;
        }
        row.values.push_back(v);
      } catch (const std::domain_error& e) {
        row.values.push_back(std::nullopt);
        if (!row.error.empty()) row.error += "; ";
        row.error += csv_column_name(output) + ": " + e.what();
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string csv_column_name(SweepOutput output) {
  switch (output) {
    case SweepOutput::eta: return "eta";
    case SweepOutput::epsilon_uc: return "epsilon_uc_hbar";
    case SweepOutput::t_min_on_res: return "t_min_on_res_K";
    case SweepOutput::t_min_complex: return "t_min_complex_K";
    case SweepOutput::kappa_g_on_res: return "kappa_g_on_res";
    case SweepOutput::kappa_g_scan: return "kappa_g_scan";
  }
  throw std::logic_error("unhandled sweep output");
}

void emit_csv(const std::vector<SweepRow>& rows, const std::vector<SweepOutput>& outputs,
              std::ostream& os) {
  if (rows.empty()) throw std::invalid_argument("refusing to emit CSV with no rows");
  const bool with_error_column = any_can_fail(outputs);

  os << "f_Hz";
  for (auto o : outputs) os << ',' << csv_column_name(o);
  if (with_error_column) os << ",error";
  os << '\n';

  for (const auto& row : rows) {
    os << format_value(row.f_hz);
    for (std::size_t i = 0; i < outputs.size(); ++i) {
      os << ',';
      if (i < row.values.size() && row.values[i]) os << format_value(*row.values[i]);
    }
    if (with_error_column) os << ',' << sanitize_cell(row.error);
    os << '\n';
  }
}

void emit_csv(const std::vector<SweepRow>& rows, const std::vector<SweepOutput>& outputs,
              const std::string& path) {
  if (rows.empty()) throw std::invalid_argument("refusing to emit CSV with no rows");
  std::ostringstream buffer;
  emit_csv(rows, outputs, buffer);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  file << buffer.str();
  file.flush();
  if (!file) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace squidnoise
