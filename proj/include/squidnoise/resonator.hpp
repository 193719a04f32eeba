#pragma once

#include "squidnoise/quantities.hpp"

// Series RLC resonator seen from the amplifier input. Ltot is the sum of the
// resonator inductance and the amplifier input-coil inductance; other
// topologies (parallel tank, transmission line) are out of scope.

namespace squidnoise {

struct Resonator {
  Resonator(double ltot, double cres, double r, double tres);

  double Ltot;  // total inductance, H
  double Cres;  // capacitance, F
  double R;     // series loss resistance, Ohm
  double Tres;  // physical temperature, K
};

// R + i(omega Ltot - 1/(omega Cres))
ComplexImpedance impedance(const Resonator& res, AngularFrequency omega);

struct ResonanceParams {
  double omega0;  // rad/s
  double Q;       // omega0 * Ltot / R
};

ResonanceParams resonance(const Resonator& res);

// Inverse parametrization: builds the resonator realizing a target resonant
// frequency and quality factor at a given total inductance.
Resonator resonator_from_target(double f0_hz, double quality, double ltot, double tres);

// Mean photon number 1/(exp(hbar*omega/kB*T) - 1) of the mode; 0 at T = 0.
// Uses expm1 so that mK temperatures at MHz frequencies (exponents ~1e-3)
// do not lose precision.
double thermal_occupation(AngularFrequency omega, double temperature);

}  // namespace squidnoise
