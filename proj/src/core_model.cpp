#include "zeno/core_model.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "zeno/errors.hpp"
#include "zeno/linear3.hpp"

namespace zeno {

void SpinParams::validate() const {
  if (!isfinite(omega) || !isfinite(pump_axis) || !std::isfinite(gamma) ||
      !std::isfinite(pump)) {
    throw DomainError("spin parameters must be finite");
  }
  if (gamma < 0.0) throw DomainError("relaxation rate must be >= 0");
  if (pump < 0.0) throw DomainError("pump rate must be >= 0");
  if (std::abs(norm(pump_axis) - 1.0) > 1e-12) {
    throw DomainError("pump axis must be a unit vector");
  }
}

double SpinParams::fastest_rate() const {
  return std::max(gamma + pump, norm(omega));
}

SpinParams SpinParams::transverse(double pump, double gamma, double omega0) {
  SpinParams p;
  p.omega = {0.0, omega0, 0.0};
  p.gamma = gamma;
  p.pump = pump;
  return p;
}

Vec3 bloch_rhs_weighted(const Vec3& moment, double weight, const SpinParams& p) {
  return cross(moment, p.omega) - p.gamma * moment -
         p.pump * (moment - weight * p.pump_axis);
}

Vec3 bloch_rhs(const BlochVector& m, const SpinParams& p) {
  if (!isfinite(m)) throw DomainError("Bloch vector must be finite");
  return bloch_rhs_weighted(m, 1.0, p);
}

BlochVector steady_state_closed(double pump, double gamma, double omega0) {
  if (!std::isfinite(pump) || !std::isfinite(gamma) || !std::isfinite(omega0)) {
    throw DomainError("steady state parameters must be finite");
  }
  const double s = pump + gamma;
  const double d = s * s + omega0 * omega0;
  if (d == 0.0) {
    throw DomainError("degenerate equilibrium: P = Gamma = Omega0 = 0 has no unique steady state");
  }
  return {-pump * omega0 / d, 0.0, pump * s / d};
}

BlochVector steady_state_general(const SpinParams& p) {
  p.validate();
  const double s = p.gamma + p.pump;
  if (!(s > 0.0)) {
    throw DomainError("singular steady-state system: Gamma + P must be > 0");
  }
  // Row form of  m x W - s m = -P a :
  //   [ -s   Wz  -Wy ] [mx]   [-P ax]
  //   [ -Wz  -s   Wx ] [my] = [-P ay]
  //   [  Wy -Wx   -s ] [mz]   [-P az]
  const Vec3& w = p.omega;
  const Matrix3 a{{
      {-s, w.z, -w.y},
      {-w.z, -s, w.x},
      {w.y, -w.x, -s},
  }};
  const std::array<double, 3> b{-p.pump * p.pump_axis.x, -p.pump * p.pump_axis.y,
                                -p.pump * p.pump_axis.z};

  // det = -s (s^2 + |W|^2), nonzero for s > 0.
  const double det = det3(a);
  const auto x = cramer_solve(a, b, det);
  return {x[0], x[1], x[2]};
}

PumpDecomposition decompose_pump(const BlochVector& m, double pump) {
  if (!isfinite(m) || !std::isfinite(pump)) {
    throw DomainError("decompose_pump inputs must be finite");
  }
  return {pump * (1.0 - m.z), -pump * m.x, -pump * m.y};
}

PumpDecomposition decompose_pump(const BlochVector& m, const SpinParams& p) {
  if (!(p.pump_axis == kEz)) {
    throw DomainError("pump decomposition is defined only for pump axis e_z");
  }
  return decompose_pump(m, p.pump);
}

}  // namespace zeno
