#include "squidnoise/units.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace squidnoise {

namespace {

struct Prefix {
  const char* text;
  double factor;
};

// "\xc2\xb5" is the UTF-8 micro sign.
constexpr std::array<Prefix, 9> k_prefixes{{{"f", 1e-15},
                                            {"p", 1e-12},
                                            {"n", 1e-9},
                                            {"u", 1e-6},
                                            {"\xc2\xb5", 1e-6},
                                            {"m", 1e-3},
                                            {"k", 1e3},
                                            {"M", 1e6},
                                            {"G", 1e9}}};

std::vector<std::string> base_symbols(Unit unit) {
  switch (unit) {
    case Unit::inductance: return {"H"};
    case Unit::capacitance: return {"F"};
    case Unit::resistance: return {"Ohm", "ohm", "\xce\xa9"};
    case Unit::temperature: return {"K"};
    case Unit::current: return {"A"};
    case Unit::voltage: return {"V"};
    case Unit::power: return {"W"};
    case Unit::frequency: return {"Hz"};
    case Unit::time: return {"s"};
    case Unit::voltage_noise_density: return {"V/rtHz", "V/sqrtHz"};
    case Unit::current_noise_density: return {"A/rtHz", "A/sqrtHz"};
  }
  throw std::logic_error("unhandled unit");
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

std::string unit_symbol(Unit unit) { return base_symbols(unit).front(); }

double parse_quantity(const std::string& text, Unit expected) {
  const char* begin = text.c_str();
  char* num_end = nullptr;
  const double magnitude = std::strtod(begin, &num_end);
  if (num_end == begin)
    throw std::invalid_argument("quantity '" + text + "' does not start with a number");
  if (!std::isfinite(magnitude))
    throw std::invalid_argument("quantity '" + text + "' is not finite");

  std::string unit_token(num_end);
  std::size_t i = 0;
  while (i < unit_token.size() && std::isspace(static_cast<unsigned char>(unit_token[i]))) ++i;
  unit_token.erase(0, i);
  while (!unit_token.empty() && std::isspace(static_cast<unsigned char>(unit_token.back())))
    unit_token.pop_back();

  const std::string expected_symbol = unit_symbol(expected);
  if (unit_token.empty())
    throw std::invalid_argument("quantity '" + text + "' is missing a unit; expected a " +
                                expected_symbol + " value like \"1 " + expected_symbol + "\"");

  for (const auto& base : base_symbols(expected)) {
    if (!ends_with(unit_token, base)) continue;
    const std::string prefix = unit_token.substr(0, unit_token.size() - base.size());
    if (prefix.empty()) return magnitude;
    for (const auto& p : k_prefixes)
      if (prefix == p.text) return magnitude * p.factor;
    throw std::invalid_argument("unknown SI prefix '" + prefix + "' in quantity '" + text + "'");
  }
  throw std::invalid_argument("quantity '" + text + "' does not carry a " + expected_symbol +
                              " unit");
}

std::string format_si(double value, const std::string& symbol, int significant_digits) {
  if (value == 0.0 || !std::isfinite(value)) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g %s", significant_digits, value, symbol.c_str());
    return buf;
  }
  struct Scale {
    double factor;
    const char* prefix;
  };
  static constexpr std::array<Scale, 9> scales{{{1e9, "G"},
                                                {1e6, "M"},
                                                {1e3, "k"},
                                                {1.0, ""},
                                                {1e-3, "m"},
                                                {1e-6, "u"},
                                                {1e-9, "n"},
                                                {1e-12, "p"},
                                                {1e-15, "f"}}};
  const double mag = std::abs(value);
  const Scale* chosen = &scales.back();
  for (const auto& s : scales) {
    if (mag >= s.factor) {
      chosen = &s;
      break;
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g %s%s", significant_digits, value / chosen->factor,
                chosen->prefix, symbol.c_str());
  return buf;
}

}  // namespace squidnoise
