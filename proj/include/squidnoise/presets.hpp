#pragma once

#include <string>
#include <vector>

#include "squidnoise/second_stage.hpp"

// Built-in component presets. Each value is a realized device parameter:
// first-stage presets are published SQUID characterizations, second-stage
// presets scale the measured prototype array, and the preamp presets are
// commercial/realized amplifier specifications.

namespace squidnoise {

// "c1": the Wellstood et al. C1-class device, a weakly coupled dc SQUID whose
// measured white noise matches the optimized-device theory. I0 = 6.3 uA,
// Rj = 6 Ohm, Lsq = 200 pH; the shunts self-heat to about 150 mK in a
// dilution refrigerator. Its junction capacitance is unpublished, so none is
// set here.
FirstStageSquid preset_first_stage(const std::string& name);

// "16x1" (high bandwidth), "32x2" (medium), "48x3" (low): array designs
// scaled from the measured 20x1 prototype, all with ~50 Ohm output dynamic
// resistance. Each defaults to T2 = 1 K operation, L_SQ2 = 120 pH and
// L_int = 2 nH.
SecondStageDesign preset_second_stage(const std::string& name);

// "magnicon": Magnicon XXF-1 op-amp-mode electronics (0.33 nV/rtHz,
//             2.6 pA/rtHz, 50 MHz open-loop bandwidth).
// "rt300":    discrete-transistor high-speed op-amp-mode electronics
//             (0.3 nV/rtHz, 6 pA/rtHz, 300 MHz).
// Both op-amp presets include the assumed room-temperature lead run:
// Rlead = 1 Ohm of copper coax at Tlead = 200 K (superconducting coax below
// the 4 K plate contributes nothing).
// "cryorf":   4 K 50-Ohm RF amplifier, Tn = 2 K over 5-500 MHz, reached
//             through superconducting coax (no lead resistance).
PreampModel preset_preamp(const std::string& name);

// Default band layout: Magnicon below 50 MHz, the high-speed room-temperature
// preamp from 50 to 300 MHz.
std::vector<PreampBand> default_preamp_bands();

// Single-preamp band layouts ("magnicon" -> up to 50 MHz, "rt300" -> up to
// 300 MHz, "cryorf" -> 5 to 500 MHz).
std::vector<PreampBand> preamp_bands_for(const std::string& name);

// Default coupling used when a config does not specify one: kappa = 0.1 into
// Lin = 100 nH (kappa^2 Lin = 1 nH). All SQL-relative outputs are invariant
// under this choice.
InputCoupling default_coupling();

// c1 + default coupling + 48x3 + default bands.
ChainConfig default_chain();

bool is_first_stage_preset(const std::string& name);
bool is_second_stage_preset(const std::string& name);
bool is_preamp_preset(const std::string& name);

}  // namespace squidnoise
