#pragma once

#include <string>
#include <variant>
#include <vector>

#include "squidnoise/first_stage.hpp"
#include "squidnoise/quantities.hpp"

// Second stage of the amplifier chain: an N_ser x N_par array of dc SQUIDs
// scaled from a measured 20x1 prototype, read out by either a room-temperature
// op-amp-mode preamplifier or a cryogenic 50-Ohm RF amplifier. Everything the
// follow-on chain adds is referred to an imprecision current at the
// first-stage input.

namespace squidnoise {

// Measured parameters of the 20x1 series-array prototype (NIST-style SQUID
// unit cells, characterized in a 4 K helium bath). The array provides internal
// self-feedback; the two factory functions below hold the two measured bias
// slopes. All chain designs in this library scale from the steep positive
// slope, which optimizes responsivity and output dynamic resistance; the
// shallow negative-slope record is kept for reference and is never selected
// automatically.
struct PrototypeRecord {
  // reference conditions of the measurement
  static constexpr double ref_n_ser = 20.0;
  static constexpr double ref_n_par = 1.0;
  static constexpr double ref_temperature = 4.0;  // K

  enum class Slope { negative, positive };

  double Ic_min;       // A, minimum critical current of the junction pair
  double Ic_max;       // A, maximum critical current of the junction pair
  double M_FB2;        // H, feedback-coil mutual inductance per SQUID
  double M_IN2;        // H, input-coil mutual inductance per SQUID
  double P;            // W, power dissipated in the full array
  double dPhi_dI;      // H, input flux per output current, fixed output voltage
  double dV_dI;        // Ohm, output dynamic resistance at fixed flux
  double dV_dPhi;      // V/Wb, output voltage per input flux at fixed current
  double Phi_n_squid;  // Wb/rtHz, array-only flux noise ASD at 4 K (preamp subtracted)
  Slope slope;

  static PrototypeRecord positive_slope();
  static PrototypeRecord negative_slope();

  void validate() const;
};

struct SecondStageDesign {
  SecondStageDesign(int n_ser, int n_par, double t2, double l_sq2 = 120e-12,
                    double l_int = 2e-9, PrototypeRecord proto_ = PrototypeRecord::positive_slope());

  int N_ser;             // SQUIDs per series bank
  int N_par;             // parallel banks
  double T2;             // operating temperature, K
  double L_SQ2;          // per-SQUID input-coil inductance, H
  double L_int;          // wirebond/interconnect inductance to the first stage, H
  PrototypeRecord proto;
};

// Prototype parameters scaled to an N_ser x N_par array at T2:
//   P           ~ N_ser*N_par
//   dPhi_dI     ~ 1/N_par
//   dV_dI       ~ N_ser/N_par
//   dV_dPhi     ~ N_ser
//   Phi_n^2     ~ T2 / (N_ser*N_par)
struct ScaledArray {
  double P;            // W
  double dPhi_dI;      // H
  double dV_dI;        // Ohm
  double dV_dPhi;      // V/Wb
  double Phi_n_squid;  // Wb/rtHz at T2
  std::vector<std::string> advisories;
};

ScaledArray scale_array(const SecondStageDesign& design);

// Total input self-inductance L2 = (N_ser*N_par + 2*N_par)*L_SQ2 + L_int.
// The 2*N_par term is the open-junction dummy SQUID at each end of every
// parallel bank, present for symmetry but contributing no power or noise.
double input_inductance(const SecondStageDesign& design);

// Single-pole rolloff time constant tau = L2 / Rdyn1 of the (unmatched)
// first-to-second-stage coupling, with Rdyn1 the first stage's dynamic
// resistance.
double coupling_time_constant(const SecondStageDesign& design, double rdyn1);

// Room-temperature op-amp-mode preamplifier reading the array output
// directly, plus the leads connecting to it.
struct OpAmpPreamp {
  double Vn;           // V/rtHz input voltage noise
  double In;           // A/rtHz input current noise
  double Rlead = 0.0;  // Ohm, effective lead resistance (frequency independent)
  double Tlead = 0.0;  // K, lead temperature
  double f_max;        // Hz, open-loop bandwidth

  void validate() const;
};

// Cryogenic 50-Ohm scattering-mode amplifier, connected through
// superconducting coax (no lead Johnson noise).
struct CryoRfPreamp {
  double Tn;     // K, noise temperature
  double f_min;  // Hz
  double f_max;  // Hz

  void validate() const;
};

using PreampModel = std::variant<OpAmpPreamp, CryoRfPreamp>;

// Preamp voltage/current/lead noise referred to a flux PSD in the
// second-stage SQUID:
//   (Vn^2 + 4 kB Tlead Rlead) / dV_dPhi|proto^2 * (20/N_ser)^2
//     + In^2 * (dPhi_dI|proto / N_par)^2
// with the two contributions uncorrelated.
double opamp_referred_flux_noise(const SecondStageDesign& design, const OpAmpPreamp& preamp);

// Noise temperature of the matched RF amplifier referred to a flux PSD in the
// second-stage SQUID:
//   4 kB Tn * (20/(N_ser*N_par)) * dPhi_dI|proto / dV_dPhi|proto
// taken as a positive magnitude. Valid under the matched-output assumption
// (scaled dV_dI near 50 Ohm); an advisory is reported when the design misses
// that by more than 20%.
double cryo_rf_referred_flux_noise(const SecondStageDesign& design, const CryoRfPreamp& preamp,
                                   std::vector<std::string>* advisories = nullptr);

// Total flux PSD in the second-stage SQUID: scaled array noise at T2 plus the
// preamp contribution, added in quadrature.
double total_second_stage_flux_noise(const SecondStageDesign& design, const PreampModel& preamp);

// Frequency interval served by one preamp. Bands are half-open [f_min, f_max)
// except that the top band includes its upper edge.
struct PreampBand {
  double f_min;  // Hz
  double f_max;  // Hz
  PreampModel preamp;
};

struct ChainConfig {
  FirstStageSquid first_stage;
  InputCoupling coupling;
  SecondStageDesign second_stage;
  std::vector<PreampBand> preamp_bands;  // ascending, disjoint
};

// Validates ordering/disjointness of the bands and that each preamp covers
// its assigned band; throws std::invalid_argument otherwise.
void validate_preamp_bands(const std::vector<PreampBand>& bands);

// Preamp serving the given frequency; throws std::domain_error when the
// frequency lies outside every configured band.
const PreampModel& preamp_for(const ChainConfig& chain, AngularFrequency omega);

// Follow-on chain imprecision referred to the first-stage input:
//   S_II_ref = Phi_n2^2 / M_IN2^2 * Lsq/(kappa^2 Lin) * (1 + omega^2 tau^2)
// The rolloff factor multiplies the full second-stage flux noise (array plus
// preamp), and tau uses the configured first stage's dynamic resistance.
double referred_imprecision(const ChainConfig& chain, AngularFrequency omega);

// S_II_sys = S_II + S_II_ref, A^2/Hz.
double full_system_imprecision(const ChainConfig& chain, AngularFrequency omega);

}  // namespace squidnoise
