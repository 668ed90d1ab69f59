#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "zeno/absorption.hpp"
#include "zeno/core_model.hpp"

namespace zeno {

/// Bloch vector carried by atoms the repump returns from F=2 to F=3.
enum class ReturnPolarization {
  kUnpolarized,  ///< returning atoms contribute m = 0
  kPreserved,    ///< returning atoms join with the current F=3 Bloch vector
};

/// Chopped-repump differential absorption run. The F=3 ensemble (fraction
/// f3) follows the Bloch equation; excited atoms leak to F=2 with branching
/// ratio b and the repump returns them at rate R while the chopper is open.
struct ExperimentConfig {
  SpinParams spin{};
  OpticalParams opt{};
  double branching = 0.5;      ///< b in [0, 1]
  double repump_rate = 0.0;    ///< R, 1/s, while the repump is on
  double chop_freq = 91.0;     ///< Hz
  double duty = 0.5;           ///< open fraction of each chop period
  std::size_t n_periods = 6;
  double dt = 1e-6;            ///< s, upper bound; the step divides the period exactly
  std::size_t record_stride = 1;
  /// F=3 Bloch vector at t = 0; unset means the closed-cycle steady state.
  std::optional<BlochVector> initial_state;
  ReturnPolarization return_polarization = ReturnPolarization::kUnpolarized;

  /// Throws ConfigError on bad chopper settings or if
  /// dt > 0.1 / max(Gamma + P, |Omega0|, R, b P).
  void validate() const;

  /// Slowest nonzero internal rate: Gamma + P, |Omega0|, R and the
  /// steady-state hyperfine leak rate b P (1 - mz) / 2.
  double slowest_rate() const;
};

struct ChopTrace {
  std::vector<double> times;          ///< s
  std::vector<double> absorbed;       ///< W/m^2
  std::vector<double> f3_population;
  std::vector<BlochVector> bloch;     ///< F=3 Bloch vector m = M / f3
  std::vector<double> period_amplitudes;  ///< on-mean minus off-mean, per period
  double extracted_amplitude = 0.0;   ///< last period, W/m^2
  double step = 0.0;                  ///< s, actual RK4 step
  double intensity = 0.0;             ///< pump intensity, W/m^2
  bool quasi_static_warning = false;  ///< chop_freq > slowest_rate / 10
};

/// Repump rate from intensity, same form as the pump rate.
double repump_rate(double intensity, double eta, double sigma, double photon_energy);

ChopTrace simulate_chop(const ExperimentConfig& cfg);

/// Runs simulate_chop for each pump intensity (W/m^2) and collects the
/// extracted amplitudes. Points are evaluated concurrently; output order
/// follows the grid.
AbsorptionCurve amplitude_vs_power(const ExperimentConfig& templ,
                                   std::span<const double> intensity_grid);

}  // namespace zeno
