#include <CLI11.hpp>
#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "squidnoise/checks.hpp"
#include "squidnoise/config.hpp"
#include "squidnoise/presets.hpp"
#include "squidnoise/units.hpp"

// Command-line front end. Exit codes: 0 success, 1 validation/regression
// failure, 2 configuration or usage error, 3 I/O error.

namespace {

using namespace squidnoise;

std::vector<std::string> split_presets(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& entry : raw) {
    std::size_t start = 0;
    while (start <= entry.size()) {
      const std::size_t comma = entry.find(',', start);
      const std::string name = entry.substr(start, comma == std::string::npos ? comma : comma - start);
      if (!name.empty()) out.push_back(name);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

// Preamp presets compose in the order given, each band starting where the
// previous one ends (clipped to the amplifier's own lower limit).
std::vector<PreampBand> compose_preamp_bands(const std::vector<std::string>& names) {
  std::vector<PreampBand> bands;
  double cursor = 0.0;
  for (const auto& name : names) {
    auto layout = preamp_bands_for(name);  // single band with its native edges
    PreampBand band = layout.front();
    band.f_min = std::max(band.f_min, cursor);
    if (!(band.f_min < band.f_max))
      throw ConfigError("preamp preset '" + name + "' adds no coverage above " +
                        std::to_string(cursor) + " Hz");
    cursor = band.f_max;
    bands.push_back(std::move(band));
  }
  return bands;
}

SweepConfig make_config(const std::string& config_path, const std::vector<std::string>& preset_args) {
  SweepConfig cfg = config_path.empty() ? default_sweep_config() : load_config(config_path);
  std::vector<std::string> preamp_names;
  for (const auto& name : split_presets(preset_args)) {
    if (is_first_stage_preset(name))
      cfg.chain.first_stage = preset_first_stage(name);
    else if (is_second_stage_preset(name))
      cfg.chain.second_stage = preset_second_stage(name);
    else if (is_preamp_preset(name))
      preamp_names.push_back(name);
    else
      throw ConfigError("unknown preset '" + name + "'");
  }
  if (!preamp_names.empty()) cfg.chain.preamp_bands = compose_preamp_bands(preamp_names);
  return cfg;
}

std::string format_plain(double value, const std::string& suffix = "") {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.4g", value);
  return suffix.empty() ? std::string(buf) : std::string(buf) + " " + suffix;
}

void print_line(const std::string& label, const std::string& value) {
  std::cout << "  " << label;
  for (std::size_t i = label.size(); i < 34; ++i) std::cout << ' ';
  std::cout << value << '\n';
}

int cmd_report(const SweepConfig& cfg, double f_hz) {
  const auto omega = AngularFrequency::from_hz(f_hz);
  const auto& chain = cfg.chain;
  const double k2lin = chain.coupling.kappa * chain.coupling.kappa * chain.coupling.Lin;

  std::cout << "first stage\n";
  print_line("I0", format_si(chain.first_stage.I0, "A"));
  print_line("Rj", format_si(chain.first_stage.Rj, "Ohm"));
  print_line("Lsq", format_si(chain.first_stage.Lsq, "H"));
  print_line("Tj", format_si(chain.first_stage.Tj, "K"));
  const auto fom = tc_figures_of_merit(chain.first_stage);
  print_line("beta_L", format_plain(fom.beta_L));
  if (fom.beta_C) print_line("beta_C", format_plain(*fom.beta_C));
  print_line("gamma", format_plain(fom.gamma));
  for (const auto& a : fom.advisories) print_line("advisory", a);
  const auto tf = transfer_functions(chain.first_stage);
  print_line("dV/dPhi", format_si(tf.dV_dPhi, "V/Wb"));
  print_line("R_dyn", format_si(tf.R_dyn, "Ohm"));
  print_line("dI/dPhi", format_si(tf.dI_dPhi, "A/Wb"));
  print_line("epsilon_uc (stage 1 alone)",
             format_si(epsilon_uc_first_stage(chain.first_stage) / constants::hbar, "hbar"));
  print_line("eta (stage 1 alone)",
             format_plain(eta(first_stage_budget(chain.first_stage, chain.coupling, omega))));
  print_line("on-resonance SQL ratio", format_plain(on_res_sql_ratio(chain.first_stage)));

  std::cout << "coupling\n";
  print_line("Lin", format_si(chain.coupling.Lin, "H"));
  print_line("kappa", format_plain(chain.coupling.kappa));
  print_line("M", format_si(mutual_inductance(chain.first_stage, chain.coupling), "H"));

  std::cout << "second stage\n";
  const auto& design = chain.second_stage;
  print_line("array", std::to_string(design.N_ser) + " x " + std::to_string(design.N_par) + " at " +
                          format_si(design.T2, "K"));
  const auto scaled = scale_array(design);
  print_line("P", format_si(scaled.P, "W"));
  print_line("dV/dI", format_si(scaled.dV_dI, "Ohm"));
  print_line("dPhi/dI", format_si(scaled.dPhi_dI, "H"));
  print_line("dV/dPhi", format_si(scaled.dV_dPhi, "V/Wb"));
  print_line("Phi_n (array alone)",
             format_plain(scaled.Phi_n_squid / constants::micro_phi0, "uPhi0/rtHz"));
  for (const auto& a : scaled.advisories) print_line("advisory", a);
  print_line("L2", format_si(input_inductance(design), "H"));
  print_line("tau", format_si(coupling_time_constant(design, tf.R_dyn), "s"));

  std::cout << "at f = " << format_si(f_hz, "Hz") << '\n';
  std::vector<std::string> advisories;
  const PreampModel& preamp = preamp_for(chain, omega);
  if (const auto* rf = std::get_if<CryoRfPreamp>(&preamp))
    cryo_rf_referred_flux_noise(design, *rf, &advisories);
  print_line("Phi_n2 (array + preamp)",
             format_plain(std::sqrt(total_second_stage_flux_noise(design, preamp)) /
                              constants::micro_phi0,
                          "uPhi0/rtHz"));
  for (const auto& a : advisories) print_line("advisory", a);

  const auto budget = system_noise_budget(chain, omega);
  const auto fs = input_referred_noise(chain.first_stage, chain.coupling, omega);
  print_line("sqrt(S_II) stage 1", format_si(std::sqrt(fs.S_II.value), "A/rtHz"));
  print_line("sqrt(S_II_ref) follow-on",
             format_si(std::sqrt(referred_imprecision(chain, omega)), "A/rtHz"));
  print_line("sqrt(S_II_sys)", format_si(std::sqrt(budget.S_II_sys.value), "A/rtHz"));
  print_line("sqrt(S_VV)", format_si(std::sqrt(budget.S_VV.value), "V/rtHz"));
  print_line("Im S_IV", format_plain(budget.imS_IV.value, "A V/Hz"));
  print_line("SQL temperature", format_si(sql_noise_energy(omega) / constants::k_boltzmann, "K"));
  print_line("R_opt (real source)", format_si(optimal_real_source(budget), "Ohm"));
  const auto z_opt = optimal_complex_source(budget);
  print_line("Z_opt", format_si(z_opt.re, "Ohm") + " + i " + format_si(z_opt.im, "Ohm"));
  print_line("T_min on resonance", format_si(t_min_on_resonance(budget), "K"));
  print_line("T_min complex source", format_si(t_min_complex(budget), "K"));
  print_line("eta", format_plain(eta(budget)));
  print_line("epsilon_uc", format_si(epsilon_uc(budget, k2lin) / constants::hbar, "hbar"));

  std::cout << "matching to Q = " << format_plain(cfg.resonator_Q) << ", T_res = "
            << format_si(cfg.resonator_T, "K") << '\n';
  try {
    const auto match = match_on_resonance(budget, k2lin, cfg.resonator_Q);
    print_line("kappa_g on resonance", format_plain(match.kappa_g));
    print_line("T_min at that match", format_si(match.T_min, "K"));
  } catch (const std::domain_error& e) {
    print_line("kappa_g on resonance", std::string("unreachable: ") + e.what());
  }
  try {
    const double kg = match_scan_sensitivity(budget, k2lin, cfg.resonator_Q,
                                             thermal_occupation(omega, cfg.resonator_T));
    print_line("kappa_g scan sensitivity", format_plain(kg));
  } catch (const std::domain_error& e) {
    print_line("kappa_g scan sensitivity", std::string("unreachable: ") + e.what());
  }
  return 0;
}

int cmd_sweep(const SweepConfig& cfg, const std::string& out_path) {
  const auto rows = run_sweep(cfg);
  if (out_path.empty())
    emit_csv(rows, cfg.outputs, std::cout);
  else
    emit_csv(rows, cfg.outputs, out_path);
  return 0;
}

int cmd_validate() {
  const auto results = run_builtin_checks();
  const int failed = print_check_report(std::cout, results);
  return failed > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noise budget and matching calculator for two-stage dc SQUID readout of high-Q "
               "resonators below 300 MHz"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::vector<std::string> preset_args;
  app.add_option("--config", config_path, "JSON configuration file")->type_name("PATH");
  app.add_option("--preset", preset_args,
                 "component preset: c1, 16x1, 32x2, 48x3, magnicon, rt300, cryorf "
                 "(repeatable or comma-separated)");

  auto* report = app.add_subcommand("report", "figures of merit at a single frequency");
  double report_f_mhz = 30.0;
  report->add_option("--f", report_f_mhz, "frequency in MHz")->capture_default_str();
  double report_q = 0.0, report_tres_mk = -1.0;
  report->add_option("--Q", report_q, "resonator quality factor");
  report->add_option("--T-res", report_tres_mk, "resonator temperature in mK");

  auto* sweep = app.add_subcommand("sweep", "frequency sweep, CSV output");
  auto* match = app.add_subcommand("match", "matched kappa_g vs frequency, CSV output");
  double f_start_mhz = 0.0, f_stop_mhz = 0.0, match_q = 0.0, match_tres_mk = -1.0;
  int points = 0;
  std::string out_path, grid_name;
  for (CLI::App* sub : {sweep, match}) {
    sub->add_option("--f-start", f_start_mhz, "sweep start in MHz");
    sub->add_option("--f-stop", f_stop_mhz, "sweep stop in MHz");
    sub->add_option("--points", points, "number of grid points");
    sub->add_option("--grid", grid_name, "grid spacing: log or linear");
    sub->add_option("--out", out_path, "output CSV path (stdout when omitted)")->type_name("PATH");
  }
  match->add_option("--Q", match_q, "resonator quality factor");
  match->add_option("--T-res", match_tres_mk, "resonator temperature in mK");

  auto* validate = app.add_subcommand("validate", "run the built-in verification checks");
  int only_check = 0;
  validate->add_option("--check", only_check, "run a single check by number");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) {
      if (only_check > 0) {
        const auto result = run_builtin_check(only_check);
        return print_check_report(std::cout, {result}) > 0 ? 1 : 0;
      }
      return cmd_validate();
    }

    SweepConfig cfg = make_config(config_path, preset_args);
    if (f_start_mhz > 0.0) cfg.f_start = f_start_mhz * 1e6;
    if (f_stop_mhz > 0.0) cfg.f_stop = f_stop_mhz * 1e6;
    if (points > 0) cfg.points = points;
    if (!grid_name.empty()) {
      if (grid_name == "log")
        cfg.grid = GridSpacing::log;
      else if (grid_name == "linear")
        cfg.grid = GridSpacing::linear;
      else
        throw ConfigError("--grid must be 'log' or 'linear'");
    }

    if (report->parsed()) {
      if (report_q > 0.0) cfg.resonator_Q = report_q;
      if (report_tres_mk >= 0.0) cfg.resonator_T = report_tres_mk * 1e-3;
      return cmd_report(cfg, report_f_mhz * 1e6);
    }
    if (match->parsed()) {
      if (match_q > 0.0) cfg.resonator_Q = match_q;
      if (match_tres_mk >= 0.0) cfg.resonator_T = match_tres_mk * 1e-3;
      cfg.outputs = {SweepOutput::kappa_g_on_res, SweepOutput::kappa_g_scan};
      return cmd_sweep(cfg, out_path);
    }
    return cmd_sweep(cfg, out_path);
  } catch (const squidnoise::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return 3;
  }
}
