#pragma once

namespace zeno {

/// One classical fourth-order Runge-Kutta step for an autonomous system.
/// State must support `State + State` and `double * State`.
template <typename State, typename Rhs>
State rk4_step(const State& y, double h, Rhs&& f) {
  const State k1 = f(y);
  const State k2 = f(y + (0.5 * h) * k1);
  const State k3 = f(y + (0.5 * h) * k2);
  const State k4 = f(y + h * k3);
  return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace zeno
