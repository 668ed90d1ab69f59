#pragma once

#include "zeno/vec3.hpp"

namespace zeno {

/// Normalized magnetic moment m = (mx, my, mz). Physical states have
/// |m| <= 1; mx and my carry the Zeeman coherence.
using BlochVector = Vec3;

/// Slack allowed on |m| <= 1 for states produced by arithmetic.
inline constexpr double kNormSlack = 1e-9;

/// Spin dynamics parameters. All rates in rad/s (1/s).
struct SpinParams {
  Vec3 omega{};           ///< precession vector Omega0 = gamma_g * B0
  double gamma = 0.0;     ///< relaxation rate, >= 0
  double pump = 0.0;      ///< optical pump rate P, >= 0
  Vec3 pump_axis = kEz;   ///< unit vector the pump drives towards

  /// Throws DomainError if any invariant is broken.
  void validate() const;

  /// Fastest rate in the dynamics, max(Gamma + P, |Omega0|).
  double fastest_rate() const;

  /// Field along +y, pump along +z.
  static SpinParams transverse(double pump, double gamma, double omega0);
};

/// Split of the pump term into population transfer (z) and
/// decoherence (x, y) parts.
struct PumpDecomposition {
  double transfer_rate = 0.0;  ///< dmz/dt|pump = P (1 - mz)
  double decoherence_x = 0.0;  ///< dmx/dt|pump = -P mx
  double decoherence_y = 0.0;  ///< dmy/dt|pump = -P my

  /// transfer e_z + (decoherence, 0)
  Vec3 pump_term() const { return {decoherence_x, decoherence_y, transfer_rate}; }
};

/// dm/dt = m x Omega0 - Gamma m - P (m - axis).
Vec3 bloch_rhs(const BlochVector& m, const SpinParams& p);

/// Same right-hand side for a population-weighted moment M = f m of a
/// sub-ensemble holding fraction `weight` of the atoms: the pump drives M
/// towards weight * axis. With weight == 1 this is exactly bloch_rhs.
Vec3 bloch_rhs_weighted(const Vec3& moment, double weight, const SpinParams& p);

/// Closed-form steady state for field Omega0 e_y and pump along e_z:
/// m = (-P Omega0, 0, P (P + Gamma)) / ((P + Gamma)^2 + Omega0^2).
BlochVector steady_state_closed(double pump, double gamma, double omega0);

/// Steady state for arbitrary field orientation and pump axis by exact
/// 3x3 solve. Requires Gamma + P > 0.
BlochVector steady_state_general(const SpinParams& p);

/// Pump-term decomposition for pump axis e_z.
PumpDecomposition decompose_pump(const BlochVector& m, double pump);

/// As above; throws DomainError unless p.pump_axis is e_z.
PumpDecomposition decompose_pump(const BlochVector& m, const SpinParams& p);

}  // namespace zeno
