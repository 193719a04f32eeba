#pragma once

#include <stdexcept>
#include <string>

#include "squidnoise/sweep.hpp"

// JSON configuration loading. The schema is documented in the README;
// dimensioned values are unit-suffixed strings ("200 pH"), unknown keys are
// hard errors, and component entries may be preset names or full objects.

namespace squidnoise {

// Malformed or invalid configuration. Parse errors carry line/column of the
// offending byte; semantic errors name the offending key.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses configuration text; source_name appears in error messages.
SweepConfig parse_config(const std::string& text, const std::string& source_name);

// Reads and parses a config file. Missing/unreadable files raise ConfigError.
SweepConfig load_config(const std::string& path);

// Baseline configuration used when no file is given: the default chain, a
// 5-300 MHz log sweep of 121 points, resonator Q = 1e6 at 10 mK, and the
// eta and epsilon_uc columns.
SweepConfig default_sweep_config();

}  // namespace squidnoise
