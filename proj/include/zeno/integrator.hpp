#pragma once

#include <cstddef>
#include <vector>

#include "zeno/core_model.hpp"

namespace zeno {

struct IntegrationConfig {
  double dt = 1e-3;               ///< step, s
  double t_end = 1.0;             ///< s
  std::size_t record_stride = 1;  ///< keep every n-th step
  double convergence_tol = 1e-10; ///< |rhs| / fastest rate threshold

  /// Throws ConfigError if dt, t_end or stride are invalid, or if
  /// dt > 0.1 / max(Gamma + P, |Omega0|). Never clamps.
  void validate(const SpinParams& p) const;

  /// Number of RK4 steps needed to cover t_end.
  std::size_t step_count() const;
};

/// Time-domain solution of the Bloch equation.
struct Trajectory {
  std::vector<double> times;        ///< s, times[0] = 0, spacing dt * stride
  std::vector<BlochVector> states;
  SpinParams params;
  double dt = 0.0;
  double final_time = 0.0;          ///< time of the last step, recorded or not
  BlochVector final_state{};
};

struct RelaxResult {
  BlochVector state;
  double elapsed = 0.0;  ///< s
};

Trajectory integrate(const BlochVector& m0, const SpinParams& p,
                     const IntegrationConfig& cfg);

/// Integrates until |rhs| < tol * max(Gamma + P, |Omega0|). Throws
/// ConvergenceError (carrying the last state) if t_end is reached first.
RelaxResult relax_to_steady(const BlochVector& m0, const SpinParams& p,
                            const IntegrationConfig& cfg);

}  // namespace zeno
