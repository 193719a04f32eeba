#include "squidnoise/resonator.hpp"

#include <cmath>

namespace squidnoise {

Resonator::Resonator(double ltot, double cres, double r, double tres)
    : Ltot(ltot), Cres(cres), R(r), Tres(tres) {
  detail::require_positive(ltot, "total inductance Ltot");
  detail::require_positive(cres, "capacitance Cres");
  detail::require_positive(r, "loss resistance R");
  detail::require_positive(tres, "resonator temperature Tres");
}

ComplexImpedance impedance(const Resonator& res, AngularFrequency omega) {
  const double w = omega.rad_per_s();
  return ComplexImpedance{res.R, w * res.Ltot - 1.0 / (w * res.Cres)};
}

ResonanceParams resonance(const Resonator& res) {
  const double omega0 = 1.0 / std::sqrt(res.Ltot * res.Cres);
  return ResonanceParams{omega0, omega0 * res.Ltot / res.R};
}

Resonator resonator_from_target(double f0_hz, double quality, double ltot, double tres) {
  detail::require_positive(f0_hz, "target resonant frequency");
  detail::require_positive(quality, "target quality factor");
  detail::require_positive(ltot, "total inductance Ltot");
  const double omega0 = 2.0 * constants::pi * f0_hz;
  return Resonator(ltot, 1.0 / (omega0 * omega0 * ltot), omega0 * ltot / quality, tres);
}

double thermal_occupation(AngularFrequency omega, double temperature) {
  detail::require_non_negative(temperature, "temperature");
  if (temperature == 0.0) return 0.0;
  const double x = constants::hbar * omega.rad_per_s() / (constants::k_boltzmann * temperature);
  return 1.0 / std::expm1(x);
}

}  // namespace squidnoise
