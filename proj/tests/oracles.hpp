#pragma once

// Test-only reference computations. Nothing here calls into the library's
// steady-state or absorption code.

#include <cmath>
#include <cstdint>
#include <random>

namespace oracle {

/// ΔI / (eps dz) for the transverse-field model, evaluated in quad precision
/// so a golden-section search can resolve the maximizer to ~1e-15.
inline __float128 zeno_curve_q(__float128 pump, __float128 gamma, __float128 omega0) {
  const __float128 s = gamma + pump;
  return pump * (gamma * s + omega0 * omega0) / (s * s + omega0 * omega0);
}

/// Normalized ΔI curve at Omega0/Gamma = 3, p = P/Gamma.
inline double normalized_curve_w3(double p) { return p * (p + 10.0) / ((p + 1.0) * (p + 1.0) + 9.0); }

/// Closed-form no-Zeno normalized curve from a symbolic solve of
/// m x W e_y - G m + P (1 - mz) e_z = 0:  p (1 + w^2) / (1 + p + w^2), w = W/G.
inline double no_zeno_normalized(double p, double w) { return p * (1.0 + w * w) / (1.0 + p + w * w); }

struct V3 {
  double x, y, z;
};

/// Reference RK4, written out on components and independent of the library, for
/// dm/dt = m x (0, W, 0) - G m + pump_term(m).
template <typename PumpTerm>
V3 integrate_transverse(V3 m, double w, double g, PumpTerm pump_term, double dt, long steps) {
  auto f = [&](const V3& a) {
    const V3 p = pump_term(a);
    return V3{-a.z * w - g * a.x + p.x, -g * a.y + p.y, a.x * w - g * a.z + p.z};
  };
  for (long i = 0; i < steps; ++i) {
    const V3 k1 = f(m);
    const V3 k2 = f({m.x + 0.5 * dt * k1.x, m.y + 0.5 * dt * k1.y, m.z + 0.5 * dt * k1.z});
    const V3 k3 = f({m.x + 0.5 * dt * k2.x, m.y + 0.5 * dt * k2.y, m.z + 0.5 * dt * k2.z});
    const V3 k4 = f({m.x + dt * k3.x, m.y + dt * k3.y, m.z + dt * k3.z});
    m.x += dt / 6.0 * (k1.x + 2 * k2.x + 2 * k3.x + k4.x);
    m.y += dt / 6.0 * (k1.y + 2 * k2.y + 2 * k3.y + k4.y);
    m.z += dt / 6.0 * (k1.z + 2 * k2.z + 2 * k3.z + k4.z);
  }
  return m;
}

/// Log-uniform sample on [lo, hi].
inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

/// Uniform point in the unit ball (rejection).
inline V3 in_ball(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  while (true) {
    V3 v{u(rng), u(rng), u(rng)};
    if (v.x * v.x + v.y * v.y + v.z * v.z <= 1.0) return v;
  }
}

/// Uniform point on the unit sphere.
inline V3 on_sphere(std::mt19937_64& rng) {
  while (true) {
    V3 v = in_ball(rng);
    const double n = std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
    if (n > 1e-3) return {v.x / n, v.y / n, v.z / n};
  }
}

}  // namespace oracle
