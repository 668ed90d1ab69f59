#pragma once

#include <optional>
#include <span>
#include <vector>

#include "zeno/core_model.hpp"

namespace zeno {

/// Optical properties of the vapor cell and the pump beam. SI units.
struct OpticalParams {
  double eta = 0.5;              ///< pumping efficiency, (0, 1]
  double sigma = 1e-17;          ///< absorption cross section, m^2
  double photon_energy = 2.5e-19;///< hbar * omega, J
  double density = 1e16;         ///< atomic density N, 1/m^3
  double cell_length = 0.022;    ///< dz, m
  int passes = 1;                ///< 1, or 2 with the retro-reflecting mirror

  void validate() const;

  /// eps = N hbar omega / (2 eta), J/m^3.
  double epsilon() const;
  /// passes * dz, m.
  double path_length() const { return passes * cell_length; }
  /// dP/dI = passes * eta * sigma / (hbar omega), m^2/J.
  double pump_rate_slope() const;
};

/// ΔI together with the thin-cell diagnostic. `optically_thick` is set
/// when alpha * passes * dz exceeds kThinLimit; the value is still the
/// first-order expression.
struct AbsorptionPoint {
  double delta_i = 0.0;         ///< W/m^2
  double alpha = 0.0;           ///< 1/m
  bool optically_thick = false;
};

inline constexpr double kThinLimit = 0.1;

enum class SweepMode { kZeno, kNoZeno };

struct AbsorptionCurve {
  std::vector<double> pump_rates;  ///< 1/s, strictly increasing
  std::vector<double> delta_i;     ///< W/m^2
  /// delta_i / (eps Gamma dz); filled when `normalized` is set.
  std::vector<double> normalized_delta_i;
  bool normalized = false;
  bool any_optically_thick = false;
  SweepMode mode = SweepMode::kZeno;
  double gamma = 0.0;
  double omega0 = 0.0;
  double epsilon = 0.0;
  double cell_length = 0.0;
};

struct MaxPoint {
  double pump = 0.0;       ///< P*, 1/s
  double delta_i = 0.0;    ///< ΔI(P*) per unit eps dz, 1/s
};

/// P = passes * eta * sigma * I / (hbar omega).
double pump_rate(double intensity, const OpticalParams& opt);

/// alpha = N sigma (1 - mz) / 2.
double absorption_coefficient(double mz, const OpticalParams& opt);

/// alpha at the transverse-field steady state:
/// (N sigma / 2) [Gamma (Gamma + P) + Omega0^2] / [(Gamma + P)^2 + Omega0^2].
double steady_alpha(double pump, double gamma, double omega0, const OpticalParams& opt);

/// The dimensionless factor 1 - mz = [Gamma (Gamma + P) + Omega0^2] / [(Gamma + P)^2 + Omega0^2].
double unpolarized_fraction(double pump, double gamma, double omega0);

/// ΔI = eps P dz [Gamma (Gamma + P) + Omega0^2] / [(Gamma + P)^2 + Omega0^2].
/// Single- and double-pass cells share this form.
AbsorptionPoint delta_intensity(double pump, double gamma, double omega0,
                                const OpticalParams& opt);

/// Steady state of dm/dt = m x W - Gamma m + P (1 - mz) e_z, i.e. the pump
/// term with its transverse (decoherence) part deleted. Exact 3x3 solve.
BlochVector steady_state_no_zeno(const SpinParams& p);

/// ΔI computed from steady_state_no_zeno with Omega0 along e_y.
AbsorptionPoint delta_intensity_no_zeno(double pump, double gamma, double omega0,
                                        const OpticalParams& opt);

/// Turning point of ΔI(P): P* = (Omega0^2 + Gamma^2) / (Omega0 - Gamma) when
/// Gamma < Omega0, otherwise nullopt (ΔI increases monotonically).
std::optional<MaxPoint> max_point(double gamma, double omega0);

/// eps Gamma dz, the strong-pumping limit of ΔI.
double asymptotic_delta_intensity(double gamma, const OpticalParams& opt);

AbsorptionCurve sweep(std::span<const double> pump_grid, double gamma, double omega0,
                      const OpticalParams& opt, SweepMode mode, bool normalize);

/// Throws ConfigError unless the grid is non-empty, finite, >= 0 and
/// strictly increasing.
void validate_grid(std::span<const double> grid);

}  // namespace zeno
