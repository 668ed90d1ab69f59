#pragma once

#include <numbers>
#include <string_view>

namespace zeno::units {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kElectronVolt = 1.602176634e-19;  // J
inline constexpr double kPlanck = 6.62607015e-34;         // J s
inline constexpr double kSpeedOfLight = 299792458.0;      // m/s

// Internally every rate (Omega0, Gamma, P, R) is stored in rad/s (1/s).
// Quoted "kHz" values are cycles per second and pick up the 2*pi here and
// nowhere else.
constexpr double hz_to_angular(double hz) { return kTwoPi * hz; }
constexpr double angular_to_hz(double rad_per_s) { return rad_per_s / kTwoPi; }

constexpr double photon_energy_from_wavelength(double wavelength_m) {
  return kPlanck * kSpeedOfLight / wavelength_m;
}

enum class Dimension {
  kAngularRate,     // rad/s; Hz-family suffixes multiply by 2*pi
  kFrequency,       // plain Hz (chopper frequency), no 2*pi
  kMagneticField,   // T
  kGyromagnetic,    // rad/s per T
  kPower,           // W
  kArea,            // m^2
  kLength,          // m
  kIntensity,       // W/m^2
  kEnergy,          // J
  kNumberDensity,   // 1/m^3
  kTime,            // s
  kRateSlope,       // (1/s) per (W/m^2) = m^2/J
  kAreaDensity,     // J/m^2, the eps*dz scale of the absorption model
  kDimensionless,
};

/// Parses "<number><suffix>" (optional whitespace between) into the
/// canonical SI value for `dim`. A bare number is taken to be already in
/// canonical units. Unknown suffixes throw ConfigError.
double parse_quantity(std::string_view text, Dimension dim);

std::string_view canonical_unit(Dimension dim);

}  // namespace zeno::units
