#include "squidnoise/matching.hpp"

#include <cmath>
#include <limits>

namespace squidnoise {

namespace {

// Total source-referred noise PSD seen against a complex source, W/Hz.
// Written out locally so the grid minimizer stays an arithmetic route of its
// own rather than a wrapper around the closed-form helpers.
double source_noise_psd(const NoiseBudget& b, double re, double im) {
  const double mag2 = re * re + im * im;
  return b.S_VV.value + mag2 * b.S_II_sys.value - 2.0 * im * b.imS_IV.value +
         2.0 * re * b.reS_IV.value;
}

// Golden-section minimum of a unimodal function on [lo, hi], relative
// tolerance on the argument.
template <typename F>
double golden_min(double lo, double hi, double rel_tol, F f) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  const double scale = std::max(std::abs(lo), std::abs(hi)) + 1e-300;
  while ((b - a) > rel_tol * scale) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

double radicand(const NoiseBudget& b) {
  return b.S_VV.value * b.S_II_sys.value - b.imS_IV.value * b.imS_IV.value;
}

}  // namespace

NoiseBudget first_stage_budget(const FirstStageSquid& squid, const InputCoupling& coupling,
                               AngularFrequency omega) {
  const FirstStageNoise n = input_referred_noise(squid, coupling, omega);
  return NoiseBudget{omega, n.S_II, n.S_VV, n.imS_IV, Psd(0.0, PsdKind::cross_iv)};
}

NoiseBudget system_noise_budget(const ChainConfig& chain, AngularFrequency omega) {
  const FirstStageNoise n = input_referred_noise(chain.first_stage, chain.coupling, omega);
  const double s_ii_sys = n.S_II.value + referred_imprecision(chain, omega);
  return NoiseBudget{omega, Psd(s_ii_sys, PsdKind::current), n.S_VV, n.imS_IV,
                     Psd(0.0, PsdKind::cross_iv)};
}

double noise_temperature(const NoiseBudget& budget, ComplexImpedance source) {
  if (!(source.re > 0.0))
    throw std::domain_error("source impedance must have a positive real part");
  return source_noise_psd(budget, source.re, source.im) /
         (4.0 * constants::k_boltzmann * source.re);
}

double noise_temperature_real_source(const NoiseBudget& budget, double resistance) {
  if (!(resistance > 0.0)) throw std::domain_error("source resistance must be > 0");
  return noise_temperature(budget, ComplexImpedance{resistance, 0.0});
}

double optimal_real_source(const NoiseBudget& budget) {
  return std::sqrt(budget.S_VV.value / budget.S_II_sys.value);
}

double t_min_on_resonance(const NoiseBudget& budget) {
  return 0.5 * std::sqrt(budget.S_VV.value * budget.S_II_sys.value) / constants::k_boltzmann;
}

double t_min_complex(const NoiseBudget& budget) {
  const double rad = radicand(budget);
  if (rad < 0.0)
    throw std::domain_error(
        "inconsistent noise budget: (Im S_IV)^2 exceeds S_VV * S_II_sys");
  return (0.5 * std::sqrt(rad) + 0.5 * budget.reS_IV.value) / constants::k_boltzmann;
}

ComplexImpedance optimal_complex_source(const NoiseBudget& budget) {
  const double x_opt = budget.imS_IV.value / budget.S_II_sys.value;
  const double re2 = budget.S_VV.value / budget.S_II_sys.value - x_opt * x_opt;
  if (re2 < 0.0)
    throw std::domain_error(
        "inconsistent noise budget: (Im S_IV)^2 exceeds S_VV * S_II_sys");
  return ComplexImpedance{std::sqrt(re2), x_opt};
}

MinNoiseResult brute_force_min_noise(const NoiseBudget& budget, std::pair<double, double> R_range,
                                     std::pair<double, double> X_range, int grid_points) {
  if (grid_points < 100) throw std::invalid_argument("grid_points must be >= 100 per axis");
  if (!(R_range.first > 0.0) || !(R_range.second > R_range.first))
    throw std::invalid_argument("R_range must satisfy 0 < lo < hi");
  const bool x_fixed = X_range.first == X_range.second;
  if (!x_fixed && !(X_range.second > X_range.first))
    throw std::invalid_argument("X_range must be ordered");

  const auto objective = [&](double r, double x) {
    return source_noise_psd(budget, r, x) / (4.0 * constants::k_boltzmann * r);
  };

  const int n = grid_points;
  const double r_step = (R_range.second - R_range.first) / (n - 1);
  const double x_step = x_fixed ? 0.0 : (X_range.second - X_range.first) / (n - 1);

  int best_i = 0, best_j = 0;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double r = R_range.first + i * r_step;
    const int mj = x_fixed ? 1 : n;
    for (int j = 0; j < mj; ++j) {
      const double x = x_fixed ? X_range.first : X_range.first + j * x_step;
      const double t = objective(r, x);
      if (t < best) {
        best = t;
        best_i = i;
        best_j = j;
      }
    }
  }
  if (best_i == 0 || best_i == n - 1)
    throw std::domain_error("grid minimum on the R range boundary; widen R_range");
  if (!x_fixed && (best_j == 0 || best_j == n - 1))
    throw std::domain_error("grid minimum on the X range boundary; widen X_range");

  // Refine with alternating golden-section line searches over the full
  // ranges. The objective is unimodal along both axes (quadratic in X,
  // convex in R for R > 0), so each search is exact to the tolerance.
  constexpr double rel_tol = 1e-6;
  double r_best = R_range.first + best_i * r_step;
  double x_best = x_fixed ? X_range.first : X_range.first + best_j * x_step;
  for (int pass = 0; pass < 3; ++pass) {
    if (!x_fixed)
      x_best = golden_min(X_range.first, X_range.second, rel_tol,
                          [&](double x) { return objective(r_best, x); });
    r_best = golden_min(R_range.first, R_range.second, rel_tol,
                        [&](double r) { return objective(r, x_best); });
  }
  return MinNoiseResult{objective(r_best, x_best), ComplexImpedance{r_best, x_best}};
}

double eta(const NoiseBudget& budget) {
  return 2.0 * constants::k_boltzmann * t_min_complex(budget) /
         (constants::hbar * budget.omega.rad_per_s());
}

double on_res_sql_ratio(const FirstStageSquid& squid) {
  return 4.0 * std::sqrt(11.0) * constants::k_boltzmann * squid.Tj * squid.Lsq /
         (constants::hbar * squid.Rj);
}

double epsilon_uc(const NoiseBudget& budget, double kappa_sq_lin) {
  detail::require_positive(kappa_sq_lin, "kappa^2 * Lin");
  return 0.5 * kappa_sq_lin * budget.S_II_sys.value;
}

double epsilon_uc_system(const ChainConfig& chain, AngularFrequency omega) {
  const double k2lin = chain.coupling.kappa * chain.coupling.kappa * chain.coupling.Lin;
  return 0.5 * k2lin * full_system_imprecision(chain, omega);
}

OnResonanceMatch match_on_resonance(const NoiseBudget& budget_at_omega0, double kappa_sq_lin,
                                    double quality) {
  detail::require_positive(kappa_sq_lin, "kappa^2 * Lin");
  if (!(quality >= 1.0)) throw std::invalid_argument("resonator quality factor must be >= 1");
  // Coupling-invariant products: backaction per unit kappa^2 Lin and
  // imprecision times kappa^2 Lin. The match condition
  //   R = sqrt(S_VV / S_II_sys)  with  R/Ltot = omega0/Q
  // then gives kappa_g^2 directly, and T_min at the match depends only on the
  // invariant product a_bar * b_bar = S_VV * S_II_sys.
  const double a_bar = budget_at_omega0.S_VV.value / kappa_sq_lin;
  const double b_bar = budget_at_omega0.S_II_sys.value * kappa_sq_lin;
  const double kg2 = (budget_at_omega0.omega.rad_per_s() / quality) * std::sqrt(b_bar / a_bar);
  if (kg2 > 1.0)
    throw std::domain_error("on-resonance match needs kappa_g > 1; resonator too lossy to match");
  const double t_min = 0.5 * std::sqrt(a_bar * b_bar) / constants::k_boltzmann;
  return OnResonanceMatch{std::sqrt(kg2), t_min};
}

OnResonanceMatch match_on_resonance(const ChainConfig& chain, const Resonator& res) {
  const ResonanceParams rp = resonance(res);
  const auto omega0 = AngularFrequency::from_rad_per_s(rp.omega0);
  const double k2lin = chain.coupling.kappa * chain.coupling.kappa * chain.coupling.Lin;
  return match_on_resonance(system_noise_budget(chain, omega0), k2lin, rp.Q);
}

double scan_optimal_imprecision(AngularFrequency omega, double resistance, double eta_value,
                                double occupation) {
  detail::require_positive(resistance, "source resistance");
  detail::require_positive(eta_value, "eta");
  detail::require_non_negative(occupation, "thermal occupation");
  const double m = 2.0 * occupation + 1.0;
  return (constants::hbar * omega.rad_per_s() / resistance) * 2.0 * eta_value * eta_value /
         (m + std::sqrt(m * m + 8.0 * eta_value * eta_value));
}

double match_scan_sensitivity(const NoiseBudget& budget, double kappa_sq_lin, double quality,
                              double occupation) {
  if (!(quality >= 1.0)) throw std::invalid_argument("resonator quality factor must be >= 1");
  detail::require_non_negative(occupation, "thermal occupation");
  const double eta_value = eta(budget);
  const double eps = epsilon_uc(budget, kappa_sq_lin);
  const double m = 2.0 * occupation + 1.0;
  const double kg2 = (1.0 / quality) * (eps / constants::hbar) *
                     (m + std::sqrt(m * m + 8.0 * eta_value * eta_value)) /
                     (eta_value * eta_value);
  if (kg2 > 1.0)
    throw std::domain_error("scan-sensitivity match needs kappa_g > 1; coupling unreachable");
  return std::sqrt(kg2);
}

double match_scan_sensitivity(const ChainConfig& chain, const Resonator& res,
                              AngularFrequency omega) {
  const double k2lin = chain.coupling.kappa * chain.coupling.kappa * chain.coupling.Lin;
  return match_scan_sensitivity(system_noise_budget(chain, omega), k2lin, resonance(res).Q,
                                thermal_occupation(omega, res.Tres));
}

Resonator detuned_resonator_for_optimum(const NoiseBudget& budget, double ltot, double tres) {
  detail::require_positive(ltot, "total inductance Ltot");
  const ComplexImpedance z_opt = optimal_complex_source(budget);
  const double w = budget.omega.rad_per_s();
  const double cap_reactance = w * ltot - z_opt.im;  // 1/(omega Cres) needed
  if (!(cap_reactance > 0.0))
    throw std::domain_error(
        "no positive capacitance realizes the optimal reactance at this total inductance");
  return Resonator(ltot, 1.0 / (w * cap_reactance), z_opt.re, tres);
}

Resonator detuned_resonator_for_optimum(const ChainConfig& chain, AngularFrequency omega,
                                        double ltot, double tres) {
  return detuned_resonator_for_optimum(system_noise_budget(chain, omega), ltot, tres);
}

}  // namespace squidnoise
