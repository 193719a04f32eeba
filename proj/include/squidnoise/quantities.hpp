#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

// Core physical constants and value types shared by the whole library.
//
// Conventions, used consistently everywhere:
//   * all internal computation is in SI base units (H, Ohm, F, K, Wb, A, V,
//     W, J, rad/s); engineering units (nH, MHz, uPhi0/rtHz, ...) appear only
//     at the CLI and config boundaries,
//   * all spectral densities are two-sided power spectral densities; amplitude
//     spectral densities (sqrt of a PSD) exist only at I/O boundaries.

namespace squidnoise {

namespace constants {
// CODATA values, fixed at build time.
inline constexpr double k_boltzmann = 1.380649e-23;      // J/K
inline constexpr double hbar = 1.054571817e-34;          // J s
inline constexpr double flux_quantum = 2.067833848e-15;  // Wb
inline constexpr double pi = 3.14159265358979323846;

inline constexpr double micro_phi0 = 1e-6 * flux_quantum;  // Wb, common ASD scale
}  // namespace constants

namespace detail {
inline void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be finite");
}
inline void require_positive(double v, const char* what) {
  require_finite(v, what);
  if (!(v > 0.0)) throw std::invalid_argument(std::string(what) + " must be > 0");
}
inline void require_non_negative(double v, const char* what) {
  require_finite(v, what);
  if (v < 0.0) throw std::invalid_argument(std::string(what) + " must be >= 0");
}
}  // namespace detail

// Strictly positive angular frequency. Most formulas below are explicit in
// omega, so the wrapper mainly guards against the classic f-vs-omega mixup.
class AngularFrequency {
 public:
  static AngularFrequency from_hz(double f_hz) {
    return AngularFrequency(2.0 * constants::pi * f_hz);
  }
  static AngularFrequency from_rad_per_s(double omega) { return AngularFrequency(omega); }

  double rad_per_s() const { return omega_; }
  double hz() const { return omega_ / (2.0 * constants::pi); }

 private:
  explicit AngularFrequency(double omega) : omega_(omega) {
    detail::require_positive(omega, "angular frequency");
  }
  double omega_;  // rad/s
};

struct ComplexImpedance {
  double re = 0.0;  // Ohm
  double im = 0.0;  // Ohm

  double magnitude_squared() const { return re * re + im * im; }
};

enum class PsdKind {
  current,   // A^2/Hz
  voltage,   // V^2/Hz
  flux,      // Wb^2/Hz
  cross_iv,  // A V/Hz, signed
};

// Two-sided power spectral density tagged with the kind of quantity it
// describes. Auto-spectra must be non-negative; the cross spectrum carries a
// sign.
struct Psd {
  Psd(double value_, PsdKind kind_) : value(value_), kind(kind_) {
    detail::require_finite(value_, "PSD value");
    if (kind_ != PsdKind::cross_iv && value_ < 0.0)
      throw std::invalid_argument("auto-spectral PSD must be >= 0");
  }

  double value;  // squared unit per Hz (A V/Hz for cross_iv)
  PsdKind kind;
};

// Added-noise energy of an ideal phase-insensitive amplifier, hbar*omega/2 in
// joules (divide by k_B for a temperature).
inline double sql_noise_energy(AngularFrequency omega) {
  return 0.5 * constants::hbar * omega.rad_per_s();
}

}  // namespace squidnoise
