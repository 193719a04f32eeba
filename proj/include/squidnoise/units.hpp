#pragma once

#include <string>

// Unit-suffixed quantity parsing for the config layer, plus engineering
// formatting for the report output. Dimensioned config values must be strings
// like "200 pH" or "0.33 nV/rtHz"; bare numbers are rejected so a stray
// unit-less value can never slip into a chained formula.

namespace squidnoise {

enum class Unit {
  inductance,             // H
  capacitance,            // F
  resistance,             // Ohm
  temperature,            // K
  current,                // A
  voltage,                // V
  power,                  // W
  frequency,              // Hz
  time,                   // s
  voltage_noise_density,  // V/rtHz
  current_noise_density,  // A/rtHz
};

// SI value of a quantity string, e.g. ("200 pH", inductance) -> 2e-10.
// Accepted prefixes: f p n u (or the micro sign) m k M G, and none.
// Throws std::invalid_argument naming the problem on malformed text, an
// unknown prefix, or a unit of the wrong dimension.
double parse_quantity(const std::string& text, Unit expected);

// Base unit symbol for a dimension ("H", "Ohm", ...).
std::string unit_symbol(Unit unit);

// Engineering notation with an SI prefix, e.g. (2e-10, "H") -> "200 pH".
std::string format_si(double value, const std::string& symbol, int significant_digits = 4);

}  // namespace squidnoise
