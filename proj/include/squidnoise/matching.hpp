#pragma once

#include <utility>

#include "squidnoise/resonator.hpp"
#include "squidnoise/second_stage.hpp"

// Noise temperatures, the SQL-relative figures of merit eta(omega) and
// epsilon_uc(omega), and the three matching optimizations: on-resonance
// (real source), optimal complex source, and scan sensitivity. A brute-force
// grid minimizer provides an independent numerical route to the closed forms.

namespace squidnoise {

// Input-referred noise of the full amplifier at one frequency. reS_IV is
// identically zero for the chains built here (the first stage's real output
// correlation turns purely imaginary on the input, and follow-on noise is
// uncorrelated); the field is carried so the general noise-temperature
// expression stays testable.
struct NoiseBudget {
  AngularFrequency omega;
  Psd S_II_sys;  // total imprecision current, A^2/Hz
  Psd S_VV;      // backaction voltage, V^2/Hz
  Psd imS_IV;    // Im of the cross spectrum, A V/Hz
  Psd reS_IV;    // Re of the cross spectrum, A V/Hz
};

// Budget of the first stage alone (no follow-on noise).
NoiseBudget first_stage_budget(const FirstStageSquid& squid, const InputCoupling& coupling,
                               AngularFrequency omega);

// Budget of the full chain: S_II_sys = S_II + S_II_ref(omega); backaction and
// correlation keep their first-stage values.
NoiseBudget system_noise_budget(const ChainConfig& chain, AngularFrequency omega);

// Noise temperature for an arbitrary source impedance with Re(Z) > 0:
//   4 kB T_n Re(Z) = S_VV + |Z|^2 S_II_sys - 2 Im(Z) imS_IV + 2 Re(Z) reS_IV
double noise_temperature(const NoiseBudget& budget, ComplexImpedance source);

// Real-source specialization (the on-resonance case).
double noise_temperature_real_source(const NoiseBudget& budget, double resistance);

// R_opt = sqrt(S_VV / S_II_sys), the real source resistance minimizing T_n.
double optimal_real_source(const NoiseBudget& budget);

// Minimum noise temperature over real sources, sqrt(S_VV * S_II_sys)/(2 kB).
double t_min_on_resonance(const NoiseBudget& budget);

// Minimum noise temperature over complex sources:
//   kB T_min = 1/2 sqrt(S_VV S_II_sys - imS_IV^2) + 1/2 reS_IV
double t_min_complex(const NoiseBudget& budget);

// The source impedance achieving t_min_complex:
//   Im(Z) = imS_IV / S_II_sys,  Re(Z) = sqrt(S_VV/S_II_sys - Im(Z)^2)
ComplexImpedance optimal_complex_source(const NoiseBudget& budget);

struct MinNoiseResult {
  double T_min;  // K
  ComplexImpedance Z_at_min;
};

// Independent numerical route to the two minima above: exhaustive grid over
// [R_range] x [X_range] followed by golden-section refinement (relative 1e-6
// per axis). A degenerate X_range (equal endpoints) restricts the search to
// that fixed reactance, e.g. {0, 0} for real sources. Throws when the grid
// minimum lands on a range boundary (the ranges must bracket the optimum) or
// when grid_points < 100.
MinNoiseResult brute_force_min_noise(const NoiseBudget& budget,
                                     std::pair<double, double> R_range,
                                     std::pair<double, double> X_range, int grid_points);

// eta = T_min(complex) / SQL = 2 kB T_min / (hbar omega).
double eta(const NoiseBudget& budget);

// On-resonance (real-source) minimum relative to the SQL for a bare first
// stage: 4 sqrt(11) kB Tj Lsq / (hbar Rj). Exceeds eta of the same device by
// sqrt(11/2) because a real source cannot exploit the correlations.
double on_res_sql_ratio(const FirstStageSquid& squid);

// Uncoupled energy sensitivity of a budget, kappa^2 Lin S_II_sys / 2 in J/Hz.
// kappa_sq_lin must be the kappa^2 * Lin the budget was evaluated at; the
// product is invariant under coupling changes at fixed chain hardware.
double epsilon_uc(const NoiseBudget& budget, double kappa_sq_lin);

// Full-chain epsilon_uc at one frequency, J/Hz (divide by hbar to quote in
// units of hbar).
double epsilon_uc_system(const ChainConfig& chain, AngularFrequency omega);

struct OnResonanceMatch {
  double kappa_g;  // global coupling efficiency achieving the noise match
  double T_min;    // K, noise temperature at that match
};

// Solves R(omega0) = sqrt(S_VV / S_II_sys) for the global coupling
// kappa_g^2 = kappa^2 Lin / Ltot in closed form, exploiting the exact
// kappa^2-scaling of both sides (S_VV grows, S_II_sys shrinks). The budget
// must be evaluated at the resonance frequency. Throws std::domain_error when
// the required kappa_g exceeds 1 (resonator too lossy to match).
OnResonanceMatch match_on_resonance(const NoiseBudget& budget_at_omega0, double kappa_sq_lin,
                                    double quality);
OnResonanceMatch match_on_resonance(const ChainConfig& chain, const Resonator& res);

// Imprecision level that optimizes frequency-integrated scan sensitivity for
// a Lorentzian resonator read out by this amplifier:
//   S_II_sys = (hbar omega / R) * 2 eta^2 / (2n+1 + sqrt((2n+1)^2 + 8 eta^2))
double scan_optimal_imprecision(AngularFrequency omega, double resistance, double eta_value,
                                double occupation);

// Coupling that realizes the scan-optimal imprecision:
//   kappa_g^2 = (1/Q) (epsilon_uc/hbar) (2n+1 + sqrt((2n+1)^2 + 8 eta^2)) / eta^2
// Both epsilon_uc and eta are coupling-invariant, so no iteration is needed.
// The resonator is treated as tuned to the evaluation frequency (each step of
// a scan re-tunes it); its quality factor and temperature set the match.
// Throws std::domain_error when the required kappa_g exceeds 1.
double match_scan_sensitivity(const NoiseBudget& budget, double kappa_sq_lin, double quality,
                              double occupation);
double match_scan_sensitivity(const ChainConfig& chain, const Resonator& res,
                              AngularFrequency omega);

// Series resonator whose impedance at omega equals the optimal complex source
// for this budget: R = Re(Z_opt), Cres = 1/(omega (omega Ltot - Im(Z_opt))).
// Throws std::domain_error when omega*Ltot <= Im(Z_opt), i.e. no positive
// capacitance realizes the required detuning at this total inductance.
Resonator detuned_resonator_for_optimum(const NoiseBudget& budget, double ltot, double tres);
Resonator detuned_resonator_for_optimum(const ChainConfig& chain, AngularFrequency omega,
                                        double ltot, double tres);

}  // namespace squidnoise
