#include "zeno/integrator.hpp"

#include <cmath>
#include <string>

#include "zeno/errors.hpp"
#include "zeno/rk4.hpp"

namespace zeno {

void IntegrationConfig::validate(const SpinParams& p) const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("dt must be > 0");
  if (!(t_end >= dt) || !std::isfinite(t_end)) throw ConfigError("t_end must be >= dt");
  if (record_stride == 0) throw ConfigError("record_stride must be positive");
  if (!(convergence_tol > 0.0)) throw ConfigError("convergence_tol must be > 0");
  const double rate = p.fastest_rate();
  if (rate > 0.0 && dt > 0.1 / rate) {
    throw ConfigError("dt = " + std::to_string(dt) + " s exceeds the step guard 0.1/" +
                      std::to_string(rate) + " s");
  }
}

std::size_t IntegrationConfig::step_count() const {
  // The small bias keeps t_end = n * dt from losing its last step to rounding.
  return static_cast<std::size_t>(std::floor(t_end / dt + 1e-9));
}

Trajectory integrate(const BlochVector& m0, const SpinParams& p,
                     const IntegrationConfig& cfg) {
  p.validate();
  cfg.validate(p);
  if (!isfinite(m0)) throw DomainError("initial state must be finite");

  const std::size_t n = cfg.step_count();
  const auto rhs = [&p](const Vec3& m) { return bloch_rhs_weighted(m, 1.0, p); };

  Trajectory traj;
  traj.params = p;
  traj.dt = cfg.dt;
  traj.times.reserve(n / cfg.record_stride + 1);
  traj.states.reserve(n / cfg.record_stride + 1);
  traj.times.push_back(0.0);
  traj.states.push_back(m0);

  Vec3 m = m0;
  for (std::size_t k = 1; k <= n; ++k) {
    m = rk4_step(m, cfg.dt, rhs);
    if (k % cfg.record_stride == 0) {
      traj.times.push_back(static_cast<double>(k) * cfg.dt);
      traj.states.push_back(m);
    }
  }
  traj.final_time = static_cast<double>(n) * cfg.dt;
  traj.final_state = m;
  return traj;
}

RelaxResult relax_to_steady(const BlochVector& m0, const SpinParams& p,
                            const IntegrationConfig& cfg) {
  p.validate();
  if (!(p.gamma + p.pump > 0.0)) {
    throw DomainError("relax_to_steady requires Gamma + P > 0 (no attractor)");
  }
  cfg.validate(p);
  if (!isfinite(m0)) throw DomainError("initial state must be finite");

  const double threshold = cfg.convergence_tol * p.fastest_rate();
  const auto rhs = [&p](const Vec3& m) { return bloch_rhs_weighted(m, 1.0, p); };
  const std::size_t n = cfg.step_count();

  Vec3 m = m0;
  for (std::size_t k = 0;; ++k) {
    if (norm(rhs(m)) < threshold) return {m, static_cast<double>(k) * cfg.dt};
    if (k == n) break;
    m = rk4_step(m, cfg.dt, rhs);
  }
  throw ConvergenceError("steady state not reached by t_end = " + std::to_string(cfg.t_end) + " s",
                         m, static_cast<double>(n) * cfg.dt);
}

}  // namespace zeno
