#pragma once

#include <optional>
#include <string>
#include <vector>

#include "squidnoise/quantities.hpp"

// First-stage dc SQUID model: a single, symmetric, resistively shunted,
// weakly coupled SQUID operated at its optimal flux and current bias and
// voltage-biased at signal frequencies. Transfer functions and noise levels
// are the white-noise values of the optimized device; no Josephson dynamics,
// bias search, 1/f noise, or quantum corrections are modeled.

namespace squidnoise {

struct FirstStageSquid {
  FirstStageSquid(double i0, double rj, double lsq, double tj,
                  std::optional<double> cj = std::nullopt);

  double I0;                 // junction critical current, A
  double Rj;                 // shunt resistance per junction, Ohm
  double Lsq;                // SQUID loop inductance, H
  double Tj;                 // shunt electron temperature, K
  std::optional<double> Cj;  // junction capacitance, F (often unpublished)
};

// Dimensionless operating-point figures of merit. The advisory strings flag
// parameter combinations outside the regime where the optimized-device
// transfer functions and noise coefficients hold; they are never errors.
struct TcFiguresOfMerit {
  double beta_L = 0.0;                  // Lsq*I0/Phi0
  std::optional<double> beta_C;         // pi*I0*Rj^2*Cj/Phi0, present iff Cj given
  double gamma = 0.0;                   // 2*pi*kB*Tj/(I0*Phi0)
  std::vector<std::string> advisories;
};

struct InputCoupling {
  InputCoupling(double lin, double kappa_);

  double Lin;    // input-coil inductance, H
  double kappa;  // coupling constant, 0 < kappa <= 1
};

// M = kappa * sqrt(Lsq * Lin); derived, never stored.
double mutual_inductance(const FirstStageSquid& squid, const InputCoupling& coupling);

struct TransferFunctions {
  double dV_dPhi;  // flux-to-voltage at fixed bias current, V/Wb
  double R_dyn;    // dynamic resistance at fixed flux, Ohm
  double dI_dPhi;  // flux-to-current at fixed output voltage, A/Wb (negative)
};

struct BareOutputNoise {
  double S_VVout;   // output voltage PSD with open input, V^2/Hz
  double S_IIcirc;  // circulating-current PSD in the loop, A^2/Hz
  double S_IVcirc;  // cross spectrum of the two, A V/Hz (real)
};

// First-stage noise referred to the input circuit at one frequency.
struct FirstStageNoise {
  Psd S_II;    // imprecision current PSD, A^2/Hz
  Psd S_VV;    // backaction voltage PSD, V^2/Hz
  Psd imS_IV;  // imaginary part of the cross spectrum, A V/Hz (signed)
  AngularFrequency omega;
};

TcFiguresOfMerit tc_figures_of_merit(const FirstStageSquid& squid);

// dV_dPhi = Rj/Lsq, R_dyn = Rj, dI_dPhi = -1/Lsq. The three satisfy the
// triple-product (Euler chain) identity dI_dPhi * (1/dV_dPhi) * R_dyn = -1.
TransferFunctions transfer_functions(const FirstStageSquid& squid);

// White-noise levels of the optimized device with an open input:
// S_VVout = 16 kB Tj Rj, S_IIcirc = 11 kB Tj / Rj, S_IVcirc = 12 kB Tj.
BareOutputNoise bare_output_noise(const FirstStageSquid& squid);

// Refers the open-input noise to the input circuit through the mutual
// inductance:
//   S_II    = 16 kB Tj Lsq / (kappa^2 Rj Lin)
//   S_VV    = 11 kB Tj kappa^2 Lin Lsq omega^2 / Rj
//   imS_IV  = 12 kB Tj Lsq omega / Rj
// The real output cross spectrum turns purely imaginary on the input because
// the backaction voltage is the time derivative of the coupled flux. Only
// the square of imS_IV is physically pinned; the positive sign used here is
// a convention (see first_stage.cpp) that the matching layer relies on.
FirstStageNoise input_referred_noise(const FirstStageSquid& squid, const InputCoupling& coupling,
                                     AngularFrequency omega);

// Uncoupled energy sensitivity 8 kB Tj Lsq / Rj in J/Hz. Equals
// kappa^2 Lin S_II / 2 for every coupling.
double epsilon_uc_first_stage(const FirstStageSquid& squid);

}  // namespace squidnoise
