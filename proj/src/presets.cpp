#include "squidnoise/presets.hpp"

#include <stdexcept>

namespace squidnoise {

namespace {
[[noreturn]] void unknown_preset(const std::string& kind, const std::string& name) {
  throw std::invalid_argument("unknown " + kind + " preset '" + name + "'");
}
}  // namespace

FirstStageSquid preset_first_stage(const std::string& name) {
  if (name == "c1") return FirstStageSquid(6.3e-6, 6.0, 200e-12, 0.150);
  unknown_preset("first-stage", name);
}

SecondStageDesign preset_second_stage(const std::string& name) {
  if (name == "16x1") return SecondStageDesign(16, 1, 1.0);
  if (name == "32x2") return SecondStageDesign(32, 2, 1.0);
  if (name == "48x3") return SecondStageDesign(48, 3, 1.0);
  unknown_preset("second-stage", name);
}

PreampModel preset_preamp(const std::string& name) {
  if (name == "magnicon") return OpAmpPreamp{0.33e-9, 2.6e-12, 1.0, 200.0, 50e6};
  if (name == "rt300") return OpAmpPreamp{0.3e-9, 6e-12, 1.0, 200.0, 300e6};
  if (name == "cryorf") return CryoRfPreamp{2.0, 5e6, 500e6};
  unknown_preset("preamp", name);
}

std::vector<PreampBand> default_preamp_bands() {
  return {PreampBand{0.0, 50e6, preset_preamp("magnicon")},
          PreampBand{50e6, 300e6, preset_preamp("rt300")}};
}

std::vector<PreampBand> preamp_bands_for(const std::string& name) {
  if (name == "magnicon") return {PreampBand{0.0, 50e6, preset_preamp("magnicon")}};
  if (name == "rt300") return {PreampBand{0.0, 300e6, preset_preamp("rt300")}};
  if (name == "cryorf") return {PreampBand{5e6, 500e6, preset_preamp("cryorf")}};
  unknown_preset("preamp", name);
}

InputCoupling default_coupling() { return InputCoupling(100e-9, 0.1); }

ChainConfig default_chain() {
  return ChainConfig{preset_first_stage("c1"), default_coupling(), preset_second_stage("48x3"),
                     default_preamp_bands()};
}

bool is_first_stage_preset(const std::string& name) { return name == "c1"; }

bool is_second_stage_preset(const std::string& name) {
  return name == "16x1" || name == "32x2" || name == "48x3";
}

bool is_preamp_preset(const std::string& name) {
  return name == "magnicon" || name == "rt300" || name == "cryorf";
}

}  // namespace squidnoise
