#include "squidnoise/second_stage.hpp"

#include <cmath>

namespace squidnoise {

PrototypeRecord PrototypeRecord::positive_slope() {
  PrototypeRecord r;
  r.Ic_min = 3.055e-6;
  r.Ic_max = 9.485e-6;
  r.M_FB2 = 44e-12;
  r.M_IN2 = 105e-12;
  r.P = 0.834e-9;
  r.dPhi_dI = 95.5e-12;
  r.dV_dI = 64.9;
  r.dV_dPhi = 6.80e11;
  r.Phi_n_squid = 0.297 * constants::micro_phi0;
  r.slope = Slope::positive;
  return r;
}

PrototypeRecord PrototypeRecord::negative_slope() {
  PrototypeRecord r = positive_slope();
  r.dPhi_dI = 231e-12;
  r.dV_dI = 154.0;
  r.dV_dPhi = 6.66e11;
  r.Phi_n_squid = 0.247 * constants::micro_phi0;
  r.slope = Slope::negative;
  return r;
}

void PrototypeRecord::validate() const {
  detail::require_positive(Ic_min, "prototype Ic_min");
  detail::require_positive(Ic_max, "prototype Ic_max");
  detail::require_positive(M_FB2, "prototype M_FB2");
  detail::require_positive(M_IN2, "prototype M_IN2");
  detail::require_positive(P, "prototype power");
  detail::require_positive(dPhi_dI, "prototype dPhi_dI");
  detail::require_positive(dV_dI, "prototype dV_dI");
  detail::require_positive(dV_dPhi, "prototype dV_dPhi");
  detail::require_positive(Phi_n_squid, "prototype flux noise");
}

SecondStageDesign::SecondStageDesign(int n_ser, int n_par, double t2, double l_sq2, double l_int,
                                     PrototypeRecord proto_)
    : N_ser(n_ser), N_par(n_par), T2(t2), L_SQ2(l_sq2), L_int(l_int), proto(proto_) {
  if (n_ser < 1 || n_par < 1)
    throw std::invalid_argument("array dimensions N_ser, N_par must be >= 1");
  detail::require_positive(t2, "second-stage temperature T2");
  detail::require_positive(l_sq2, "per-SQUID input inductance L_SQ2");
  detail::require_positive(l_int, "interconnect inductance L_int");
  proto.validate();
}

ScaledArray scale_array(const SecondStageDesign& design) {
  const auto& p = design.proto;
  const double count_ratio = static_cast<double>(design.N_ser) * design.N_par /
                             (PrototypeRecord::ref_n_ser * PrototypeRecord::ref_n_par);
  ScaledArray out;
  out.P = p.P * count_ratio;
  out.dPhi_dI = p.dPhi_dI * PrototypeRecord::ref_n_par / design.N_par;
  out.dV_dI = p.dV_dI * (static_cast<double>(design.N_ser) / design.N_par) /
              (PrototypeRecord::ref_n_ser / PrototypeRecord::ref_n_par);
  out.dV_dPhi = p.dV_dPhi * design.N_ser / PrototypeRecord::ref_n_ser;
  out.Phi_n_squid =
      p.Phi_n_squid * std::sqrt((design.T2 / PrototypeRecord::ref_temperature) / count_ratio);
  if (design.T2 < 1.0)
    out.advisories.push_back(
        "T2 below 1 K: shunt self-heating can keep the electrons from cooling further");
  return out;
}

double input_inductance(const SecondStageDesign& design) {
  const double coil_count = static_cast<double>(design.N_ser) * design.N_par + 2.0 * design.N_par;
  return coil_count * design.L_SQ2 + design.L_int;
}

double coupling_time_constant(const SecondStageDesign& design, double rdyn1) {
  detail::require_positive(rdyn1, "first-stage dynamic resistance");
  return input_inductance(design) / rdyn1;
}

void OpAmpPreamp::validate() const {
  detail::require_non_negative(Vn, "preamp voltage noise Vn");
  detail::require_non_negative(In, "preamp current noise In");
  detail::require_non_negative(Rlead, "lead resistance Rlead");
  detail::require_non_negative(Tlead, "lead temperature Tlead");
  detail::require_positive(f_max, "preamp bandwidth f_max");
}

void CryoRfPreamp::validate() const {
  detail::require_non_negative(Tn, "RF amplifier noise temperature Tn");
  detail::require_non_negative(f_min, "RF amplifier f_min");
  detail::require_positive(f_max, "RF amplifier f_max");
  if (!(f_min < f_max)) throw std::invalid_argument("RF amplifier band requires f_min < f_max");
}

double opamp_referred_flux_noise(const SecondStageDesign& design, const OpAmpPreamp& preamp) {
  preamp.validate();
  const auto& p = design.proto;
  const double v2 =
      preamp.Vn * preamp.Vn + 4.0 * constants::k_boltzmann * preamp.Tlead * preamp.Rlead;
  const double ser_ratio = PrototypeRecord::ref_n_ser / design.N_ser;
  const double vpal2 = v2 / (p.dV_dPhi * p.dV_dPhi) * ser_ratio * ser_ratio;
  const double ipa = preamp.In * p.dPhi_dI * PrototypeRecord::ref_n_par / design.N_par;
  return vpal2 + ipa * ipa;
}

double cryo_rf_referred_flux_noise(const SecondStageDesign& design, const CryoRfPreamp& preamp,
                                   std::vector<std::string>* advisories) {
  preamp.validate();
  const auto& p = design.proto;
  if (advisories) {
    const double rdyn2 = scale_array(design).dV_dI;
    if (std::abs(rdyn2 - 50.0) > 0.2 * 50.0)
      advisories->push_back("scaled output dynamic resistance departs from the matched 50 Ohm by "
                            "more than 20%; the RF-amplifier referral assumes a matched output");
  }
  const double count = static_cast<double>(design.N_ser) * design.N_par;
  return 4.0 * constants::k_boltzmann * preamp.Tn *
         (PrototypeRecord::ref_n_ser * PrototypeRecord::ref_n_par / count) * p.dPhi_dI / p.dV_dPhi;
}

double total_second_stage_flux_noise(const SecondStageDesign& design, const PreampModel& preamp) {
  const double phi_n = scale_array(design).Phi_n_squid;
  const double amp2 = std::visit(
      [&](const auto& pa) -> double {
        using T = std::decay_t<decltype(pa)>;
        if constexpr (std::is_same_v<T, OpAmpPreamp>)
          return opamp_referred_flux_noise(design, pa);
        else
          return cryo_rf_referred_flux_noise(design, pa);
      },
      preamp);
  return phi_n * phi_n + amp2;
}

void validate_preamp_bands(const std::vector<PreampBand>& bands) {
  if (bands.empty()) throw std::invalid_argument("at least one preamp band is required");
  double prev_max = 0.0;
  for (std::size_t i = 0; i < bands.size(); ++i) {
    const auto& b = bands[i];
    detail::require_non_negative(b.f_min, "preamp band f_min");
    detail::require_positive(b.f_max, "preamp band f_max");
    if (!(b.f_min < b.f_max)) throw std::invalid_argument("preamp band requires f_min < f_max");
    if (i > 0 && b.f_min < prev_max)
      throw std::invalid_argument("preamp bands must be ascending and disjoint");
    prev_max = b.f_max;
    std::visit([](const auto& pa) { pa.validate(); }, b.preamp);
    // the band must lie inside the capability of its preamp
    if (const auto* op = std::get_if<OpAmpPreamp>(&b.preamp)) {
      if (b.f_max > op->f_max)
        throw std::invalid_argument("preamp band extends beyond the op-amp preamp bandwidth");
    } else if (const auto* rf = std::get_if<CryoRfPreamp>(&b.preamp)) {
      if (b.f_min < rf->f_min || b.f_max > rf->f_max)
        throw std::invalid_argument("preamp band extends beyond the RF amplifier band");
    }
  }
}

const PreampModel& preamp_for(const ChainConfig& chain, AngularFrequency omega) {
  const double f = omega.hz();
  // Edge comparisons tolerate the ulp-level noise of the omega -> Hz round
  // trip, so a sweep point placed exactly on a band edge lands in the band
  // the edge opens (the top band keeps its upper edge).
  constexpr double rtol = 1e-9;
  const auto at_least = [](double a, double b) { return a >= b - rtol * std::abs(b); };
  const auto strictly_below = [](double a, double b) { return a < b - rtol * std::abs(b); };
  const auto& bands = chain.preamp_bands;
  for (std::size_t i = 0; i < bands.size(); ++i) {
    const bool top = (i + 1 == bands.size());
    if (at_least(f, bands[i].f_min) &&
        (strictly_below(f, bands[i].f_max) || (top && at_least(bands[i].f_max, f))))
      return bands[i].preamp;
  }
  throw std::domain_error("frequency " + std::to_string(f) + " Hz outside all preamp bands");
}

double referred_imprecision(const ChainConfig& chain, AngularFrequency omega) {
  const PreampModel& preamp = preamp_for(chain, omega);
  const double phi2 = total_second_stage_flux_noise(chain.second_stage, preamp);
  const double tau =
      coupling_time_constant(chain.second_stage, transfer_functions(chain.first_stage).R_dyn);
  const double wt = omega.rad_per_s() * tau;
  const double k2lin = chain.coupling.kappa * chain.coupling.kappa * chain.coupling.Lin;
  const double m_in2 = chain.second_stage.proto.M_IN2;
  return phi2 / (m_in2 * m_in2) * (chain.first_stage.Lsq / k2lin) * (1.0 + wt * wt);
}

double full_system_imprecision(const ChainConfig& chain, AngularFrequency omega) {
  return input_referred_noise(chain.first_stage, chain.coupling, omega).S_II.value +
         referred_imprecision(chain, omega);
}

}  // namespace squidnoise
