#include "squidnoise/config.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "squidnoise/presets.hpp"
#include "squidnoise/units.hpp"

namespace squidnoise {

namespace {

using nlohmann::json;

// line/column (1-based) of a 1-based byte offset, for parse errors.
std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  const std::size_t limit = byte == 0 ? 0 : byte - 1;
  for (std::size_t i = 0; i < limit && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void fail(const std::string& msg) { throw ConfigError(msg); }

void require_only_keys(const json& obj, const std::string& where,
                       std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : allowed)
      if (item.key() == k) {
        known = true;
        break;
      }
    if (!known) fail("unknown key '" + item.key() + "' in " + where);
  }
}

const json& require_key(const json& obj, const std::string& where, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail("missing key '" + std::string(key) + "' in " + where);
  return *it;
}

// Dimensioned values must be unit-suffixed strings; a bare number is the
// classic silent-unit bug and is rejected outright.
double quantity_field(const json& obj, const std::string& where, const char* key, Unit unit) {
  const json& v = require_key(obj, where, key);
  if (v.is_number())
    fail("key '" + std::string(key) + "' in " + where + " is dimensioned and requires a " +
         "unit-suffixed string such as \"1 " + unit_symbol(unit) + "\"");
  if (!v.is_string()) fail("key '" + std::string(key) + "' in " + where + " must be a string");
  try {
    return parse_quantity(v.get<std::string>(), unit);
  } catch (const std::invalid_argument& e) {
    fail("key '" + std::string(key) + "' in " + where + ": " + e.what());
  }
}

double number_field(const json& obj, const std::string& where, const char* key) {
  const json& v = require_key(obj, where, key);
  if (!v.is_number()) fail("key '" + std::string(key) + "' in " + where + " must be a number");
  return v.get<double>();
}

int int_field(const json& obj, const std::string& where, const char* key) {
  const json& v = require_key(obj, where, key);
  if (!v.is_number_integer())
    fail("key '" + std::string(key) + "' in " + where + " must be an integer");
  return v.get<int>();
}

FirstStageSquid parse_first_stage(const json& v) {
  if (v.is_string()) {
    const auto name = v.get<std::string>();
    if (!is_first_stage_preset(name)) fail("unknown first-stage preset '" + name + "'");
    return preset_first_stage(name);
  }
  if (!v.is_object()) fail("'first_stage' must be a preset name or an object");
  require_only_keys(v, "first_stage", {"I0", "Rj", "Lsq", "Tj", "Cj"});
  std::optional<double> cj;
  if (v.contains("Cj")) cj = quantity_field(v, "first_stage", "Cj", Unit::capacitance);
  try {
    return FirstStageSquid(quantity_field(v, "first_stage", "I0", Unit::current),
                           quantity_field(v, "first_stage", "Rj", Unit::resistance),
                           quantity_field(v, "first_stage", "Lsq", Unit::inductance),
                           quantity_field(v, "first_stage", "Tj", Unit::temperature), cj);
  } catch (const std::invalid_argument& e) {
    fail(std::string("first_stage: ") + e.what());
  }
}

InputCoupling parse_coupling(const json& v) {
  if (!v.is_object()) fail("'coupling' must be an object");
  require_only_keys(v, "coupling", {"Lin", "kappa"});
  try {
    return InputCoupling(quantity_field(v, "coupling", "Lin", Unit::inductance),
                         number_field(v, "coupling", "kappa"));
  } catch (const std::invalid_argument& e) {
    fail(std::string("coupling: ") + e.what());
  }
}

SecondStageDesign parse_second_stage(const json& v) {
  if (v.is_string()) {
    const auto name = v.get<std::string>();
    if (!is_second_stage_preset(name)) fail("unknown second-stage preset '" + name + "'");
    return preset_second_stage(name);
  }
  if (!v.is_object()) fail("'second_stage' must be a preset name or an object");
  require_only_keys(v, "second_stage", {"N_ser", "N_par", "T2", "L_SQ2", "L_int"});
  double l_sq2 = 120e-12, l_int = 2e-9;
  if (v.contains("L_SQ2")) l_sq2 = quantity_field(v, "second_stage", "L_SQ2", Unit::inductance);
  if (v.contains("L_int")) l_int = quantity_field(v, "second_stage", "L_int", Unit::inductance);
  try {
    return SecondStageDesign(int_field(v, "second_stage", "N_ser"),
                             int_field(v, "second_stage", "N_par"),
                             quantity_field(v, "second_stage", "T2", Unit::temperature), l_sq2,
                             l_int);
  } catch (const std::invalid_argument& e) {
    fail(std::string("second_stage: ") + e.what());
  }
}

PreampModel parse_preamp(const json& v, const std::string& where) {
  if (v.is_string()) {
    const auto name = v.get<std::string>();
    if (!is_preamp_preset(name)) fail("unknown preamp preset '" + name + "' in " + where);
    return preset_preamp(name);
  }
  if (!v.is_object()) fail("preamp in " + where + " must be a preset name or an object");
  const std::string type = require_key(v, where, "type").get<std::string>();
  try {
    if (type == "opamp") {
      require_only_keys(v, where, {"type", "Vn", "In", "Rlead", "Tlead", "f_max"});
      OpAmpPreamp p{};
      p.Vn = quantity_field(v, where, "Vn", Unit::voltage_noise_density);
      p.In = quantity_field(v, where, "In", Unit::current_noise_density);
      p.Rlead = v.contains("Rlead") ? quantity_field(v, where, "Rlead", Unit::resistance) : 0.0;
      p.Tlead = v.contains("Tlead") ? quantity_field(v, where, "Tlead", Unit::temperature) : 0.0;
      p.f_max = quantity_field(v, where, "f_max", Unit::frequency);
      p.validate();
      return p;
    }
    if (type == "cryo_rf") {
      require_only_keys(v, where, {"type", "Tn", "f_min", "f_max"});
      CryoRfPreamp p{};
      p.Tn = quantity_field(v, where, "Tn", Unit::temperature);
      p.f_min = quantity_field(v, where, "f_min", Unit::frequency);
      p.f_max = quantity_field(v, where, "f_max", Unit::frequency);
      p.validate();
      return p;
    }
  } catch (const std::invalid_argument& e) {
    fail(where + ": " + e.what());
  }
  fail("preamp type in " + where + " must be 'opamp' or 'cryo_rf'");
}

std::vector<PreampBand> parse_bands(const json& v) {
  if (!v.is_array() || v.empty()) fail("'preamp_bands' must be a non-empty array");
  std::vector<PreampBand> bands;
  int index = 0;
  for (const auto& entry : v) {
    const std::string where = "preamp_bands[" + std::to_string(index++) + "]";
    if (!entry.is_object()) fail(where + " must be an object");
    require_only_keys(entry, where, {"f_min", "f_max", "preamp"});
    PreampBand band{quantity_field(entry, where, "f_min", Unit::frequency),
                    quantity_field(entry, where, "f_max", Unit::frequency),
                    parse_preamp(require_key(entry, where, "preamp"), where)};
    bands.push_back(std::move(band));
  }
  try {
    validate_preamp_bands(bands);
  } catch (const std::invalid_argument& e) {
    fail(std::string("preamp_bands: ") + e.what());
  }
  return bands;
}

SweepOutput parse_output(const std::string& name) {
  if (name == "eta") return SweepOutput::eta;
  if (name == "epsilon_uc") return SweepOutput::epsilon_uc;
  if (name == "t_min_on_res") return SweepOutput::t_min_on_res;
  if (name == "t_min_complex") return SweepOutput::t_min_complex;
  if (name == "kappa_g_on_res") return SweepOutput::kappa_g_on_res;
  if (name == "kappa_g_scan") return SweepOutput::kappa_g_scan;
  fail("unknown output column '" + name + "'");
}

SweepConfig build_config(const json& root, const std::string& source_name) {
  require_only_keys(root, "top level",
                    {"first_stage", "coupling", "second_stage", "preamp_bands", "sweep",
                     "resonator", "outputs"});

  SweepConfig cfg = default_sweep_config();
  if (root.contains("first_stage")) cfg.chain.first_stage = parse_first_stage(root["first_stage"]);
  if (root.contains("coupling")) cfg.chain.coupling = parse_coupling(root["coupling"]);
  if (root.contains("second_stage"))
    cfg.chain.second_stage = parse_second_stage(root["second_stage"]);
  if (root.contains("preamp_bands")) cfg.chain.preamp_bands = parse_bands(root["preamp_bands"]);

  if (root.contains("sweep")) {
    const json& s = root["sweep"];
    if (!s.is_object()) fail("'sweep' must be an object");
    require_only_keys(s, "sweep", {"f_start", "f_stop", "points", "grid"});
    if (s.contains("f_start")) cfg.f_start = quantity_field(s, "sweep", "f_start", Unit::frequency);
    if (s.contains("f_stop")) cfg.f_stop = quantity_field(s, "sweep", "f_stop", Unit::frequency);
    if (s.contains("points")) cfg.points = int_field(s, "sweep", "points");
    if (s.contains("grid")) {
      const std::string g = require_key(s, "sweep", "grid").get<std::string>();
      if (g == "log")
        cfg.grid = GridSpacing::log;
      else if (g == "linear")
        cfg.grid = GridSpacing::linear;
      else
        fail("key 'grid' in sweep must be \"log\" or \"linear\"");
    }
  }

  if (root.contains("resonator")) {
    const json& r = root["resonator"];
    if (!r.is_object()) fail("'resonator' must be an object");
    require_only_keys(r, "resonator", {"Q", "T"});
    if (r.contains("Q")) cfg.resonator_Q = number_field(r, "resonator", "Q");
    if (r.contains("T")) cfg.resonator_T = quantity_field(r, "resonator", "T", Unit::temperature);
  }

  if (root.contains("outputs")) {
    const json& o = root["outputs"];
    if (!o.is_array() || o.empty()) fail("'outputs' must be a non-empty array of column names");
    cfg.outputs.clear();
    for (const auto& entry : o) {
      if (!entry.is_string()) fail("'outputs' entries must be strings");
      cfg.outputs.push_back(parse_output(entry.get<std::string>()));
    }
  }

  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    fail(source_name + ": " + e.what());
  }
  return cfg;
}

}  // namespace

SweepConfig default_sweep_config() {
  SweepConfig cfg{default_chain(), 5e6, 300e6, 121, GridSpacing::log, 1e6, 0.010,
                  {SweepOutput::eta, SweepOutput::epsilon_uc}};
  return cfg;
}

SweepConfig parse_config(const std::string& text, const std::string& source_name) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    std::ostringstream msg;
    msg << source_name << ":" << line << ":" << column << ": " << e.what();
    fail(msg.str());
  }
  if (!root.is_object()) fail(source_name + ": top level must be a JSON object");
  try {
    return build_config(root, source_name);
  } catch (const json::exception& e) {
    // wrong JSON type for a key, etc.
    fail(source_name + ": " + e.what());
  }
}

SweepConfig load_config(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) fail("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  if (!file && !file.eof()) fail("error reading config file '" + path + "'");
  return parse_config(buffer.str(), path);
}

}  // namespace squidnoise
