#include "squidnoise/first_stage.hpp"

#include <cmath>

namespace squidnoise {

namespace {
// The sign of the input-referred imaginary cross spectrum is a convention:
// only its square is fixed by the underlying theory. The matching layer
// defines the optimal source reactance as imS_IV / S_II under the total-noise
// form S_VV + |Z|^2 S_II - 2 Im(Z) imS_IV + 2 Re(Z) reS_IV, so flipping this
// constant flips the sign of the optimal detuning and nothing else.
constexpr double k_im_cross_sign = +1.0;
}  // namespace

FirstStageSquid::FirstStageSquid(double i0, double rj, double lsq, double tj,
                                 std::optional<double> cj)
    : I0(i0), Rj(rj), Lsq(lsq), Tj(tj), Cj(cj) {
  detail::require_positive(i0, "critical current I0");
  detail::require_positive(rj, "shunt resistance Rj");
  detail::require_positive(lsq, "loop inductance Lsq");
  detail::require_positive(tj, "shunt temperature Tj");
  if (cj) detail::require_positive(*cj, "junction capacitance Cj");
}

InputCoupling::InputCoupling(double lin, double kappa_) : Lin(lin), kappa(kappa_) {
  detail::require_positive(lin, "input inductance Lin");
  detail::require_positive(kappa_, "coupling constant kappa");
  if (kappa_ > 1.0) throw std::invalid_argument("coupling constant kappa must be <= 1");
}

double mutual_inductance(const FirstStageSquid& squid, const InputCoupling& coupling) {
  return coupling.kappa * std::sqrt(squid.Lsq * coupling.Lin);
}

TcFiguresOfMerit tc_figures_of_merit(const FirstStageSquid& squid) {
  TcFiguresOfMerit fom;
  fom.beta_L = squid.Lsq * squid.I0 / constants::flux_quantum;
  fom.gamma =
      2.0 * constants::pi * constants::k_boltzmann * squid.Tj / (squid.I0 * constants::flux_quantum);
  if (squid.Cj)
    fom.beta_C = constants::pi * squid.I0 * squid.Rj * squid.Rj * *squid.Cj / constants::flux_quantum;

  if (fom.beta_L < 0.5 || fom.beta_L > 2.0)
    fom.advisories.push_back("beta_L outside [0.5, 2]: device is far from the optimized design point");
  if (fom.beta_C && (*fom.beta_C < 0.5 || *fom.beta_C > 2.0))
    fom.advisories.push_back("beta_C outside [0.5, 2]: junctions under- or over-damped");
  // The unit-prefactor transfer functions below assume the colder operating
  // regime; gamma above 0.025 means dV_dPhi is in reality somewhat shallower.
  if (fom.gamma > 0.025)
    fom.advisories.push_back("gamma above 0.025: flux-to-voltage transfer overestimated");
  return fom;
}

TransferFunctions transfer_functions(const FirstStageSquid& squid) {
  return TransferFunctions{squid.Rj / squid.Lsq, squid.Rj, -1.0 / squid.Lsq};
}

BareOutputNoise bare_output_noise(const FirstStageSquid& squid) {
  const double kt = constants::k_boltzmann * squid.Tj;
  return BareOutputNoise{16.0 * kt * squid.Rj, 11.0 * kt / squid.Rj, 12.0 * kt};
}

FirstStageNoise input_referred_noise(const FirstStageSquid& squid, const InputCoupling& coupling,
                                     AngularFrequency omega) {
  const double w = omega.rad_per_s();
  const double kt = constants::k_boltzmann * squid.Tj;
  const double k2lin = coupling.kappa * coupling.kappa * coupling.Lin;
  const double s_ii = 16.0 * kt * squid.Lsq / (squid.Rj * k2lin);
  const double s_vv = 11.0 * kt * k2lin * squid.Lsq * w * w / squid.Rj;
  const double im_s_iv = k_im_cross_sign * 12.0 * kt * squid.Lsq * w / squid.Rj;
  return FirstStageNoise{Psd(s_ii, PsdKind::current), Psd(s_vv, PsdKind::voltage),
                         Psd(im_s_iv, PsdKind::cross_iv), omega};
}

double epsilon_uc_first_stage(const FirstStageSquid& squid) {
  return 8.0 * constants::k_boltzmann * squid.Tj * squid.Lsq / squid.Rj;
}

}  // namespace squidnoise
