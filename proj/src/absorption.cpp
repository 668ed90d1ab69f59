#include "zeno/absorption.hpp"

#include <array>
#include <cmath>

#include "zeno/errors.hpp"
#include "zeno/linear3.hpp"

namespace zeno {

void OpticalParams::validate() const {
  const bool positive = eta > 0.0 && sigma > 0.0 && photon_energy > 0.0 && density > 0.0 &&
                        cell_length > 0.0;
  if (!positive || !std::isfinite(sigma) || !std::isfinite(photon_energy) ||
      !std::isfinite(density) || !std::isfinite(cell_length)) {
    throw DomainError("optical parameters must be finite and strictly positive");
  }
  if (eta > 1.0) throw DomainError("pumping efficiency must be in (0, 1]");
  if (passes != 1 && passes != 2) throw DomainError("passes must be 1 or 2");
}

double OpticalParams::epsilon() const { return density * photon_energy / (2.0 * eta); }

double OpticalParams::pump_rate_slope() const {
  return passes * eta * sigma / photon_energy;
}

double pump_rate(double intensity, const OpticalParams& opt) {
  opt.validate();
  if (!(intensity >= 0.0) || !std::isfinite(intensity)) {
    throw DomainError("intensity must be finite and >= 0");
  }
  return opt.pump_rate_slope() * intensity;
}

double absorption_coefficient(double mz, const OpticalParams& opt) {
  opt.validate();
  if (!(mz >= -1.0 && mz <= 1.0)) throw DomainError("mz must lie in [-1, 1]");
  return opt.density * opt.sigma * 0.5 * (1.0 - mz);
}

double unpolarized_fraction(double pump, double gamma, double omega0) {
  if (!std::isfinite(pump) || !std::isfinite(gamma) || !std::isfinite(omega0)) {
    throw DomainError("rates must be finite");
  }
  const double s = gamma + pump;
  const double den = s * s + omega0 * omega0;
  if (den == 0.0) throw DomainError("degenerate denominator: P = Gamma = Omega0 = 0");
  return (gamma * s + omega0 * omega0) / den;
}

double steady_alpha(double pump, double gamma, double omega0, const OpticalParams& opt) {
  opt.validate();
  return 0.5 * opt.density * opt.sigma * unpolarized_fraction(pump, gamma, omega0);
}

namespace {

AbsorptionPoint make_point(double pump, double one_minus_mz, const OpticalParams& opt) {
  AbsorptionPoint pt;
  pt.alpha = 0.5 * opt.density * opt.sigma * one_minus_mz;
  pt.delta_i = opt.epsilon() * pump * opt.cell_length * one_minus_mz;
  pt.optically_thick = pt.alpha * opt.path_length() > kThinLimit;
  return pt;
}

void check_rates(double pump, double gamma) {
  if (!(pump >= 0.0)) throw DomainError("pump rate must be >= 0");
  if (!(gamma >= 0.0)) throw DomainError("relaxation rate must be >= 0");
}

}  // namespace

AbsorptionPoint delta_intensity(double pump, double gamma, double omega0,
                                const OpticalParams& opt) {
  opt.validate();
  check_rates(pump, gamma);
  return make_point(pump, unpolarized_fraction(pump, gamma, omega0), opt);
}

BlochVector steady_state_no_zeno(const SpinParams& p) {
  p.validate();
  if (!(p.pump_axis == kEz)) {
    throw DomainError("the no-Zeno model is defined only for pump axis e_z");
  }
  // m x W - Gamma m - P mz e_z = -P e_z; the -P damping sits in the z row only.
  const Vec3& w = p.omega;
  const double g = p.gamma;
  const Matrix3 a{{
      {-g, w.z, -w.y},
      {-w.z, -g, w.x},
      {w.y, -w.x, -g - p.pump},
  }};
  const std::array<double, 3> b{0.0, 0.0, -p.pump};

  const double det = det3(a);
  const double scale = g + p.pump + norm(w);
  if (std::abs(det) <= 1e-14 * scale * scale * scale) {
    throw DomainError("singular no-Zeno steady-state system (Gamma = 0?)");
  }
  const auto x = cramer_solve(a, b, det);
  return {x[0], x[1], x[2]};
}

AbsorptionPoint delta_intensity_no_zeno(double pump, double gamma, double omega0,
                                        const OpticalParams& opt) {
  opt.validate();
  check_rates(pump, gamma);
  if (pump == 0.0) return delta_intensity(pump, gamma, omega0, opt);
  const BlochVector m = steady_state_no_zeno(SpinParams::transverse(pump, gamma, omega0));
  return make_point(pump, 1.0 - m.z, opt);
}

std::optional<MaxPoint> max_point(double gamma, double omega0) {
  if (!(gamma >= 0.0) || !(omega0 >= 0.0)) {
    throw DomainError("max_point requires Gamma >= 0 and Omega0 >= 0");
  }
  if (!(gamma < omega0)) return std::nullopt;
  const double p_star = (omega0 * omega0 + gamma * gamma) / (omega0 - gamma);
  return MaxPoint{p_star, p_star * unpolarized_fraction(p_star, gamma, omega0)};
}

double asymptotic_delta_intensity(double gamma, const OpticalParams& opt) {
  opt.validate();
  return opt.epsilon() * gamma * opt.cell_length;
}

void validate_grid(std::span<const double> grid) {
  if (grid.empty()) throw ConfigError("pump grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i]) || grid[i] < 0.0) {
      throw ConfigError("pump grid values must be finite and >= 0");
    }
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw ConfigError("pump grid must be strictly increasing");
    }
  }
}

AbsorptionCurve sweep(std::span<const double> pump_grid, double gamma, double omega0,
                      const OpticalParams& opt, SweepMode mode, bool normalize) {
  opt.validate();
  validate_grid(pump_grid);
  AbsorptionCurve curve;
  curve.mode = mode;
  curve.gamma = gamma;
  curve.omega0 = omega0;
  curve.epsilon = opt.epsilon();
  curve.cell_length = opt.cell_length;
  curve.pump_rates.assign(pump_grid.begin(), pump_grid.end());
  curve.delta_i.reserve(pump_grid.size());

  for (double p : pump_grid) {
    const AbsorptionPoint pt = mode == SweepMode::kZeno
                                   ? delta_intensity(p, gamma, omega0, opt)
                                   : delta_intensity_no_zeno(p, gamma, omega0, opt);
    curve.delta_i.push_back(pt.delta_i);
    curve.any_optically_thick = curve.any_optically_thick || pt.optically_thick;
  }

  if (normalize) {
    const double unit = asymptotic_delta_intensity(gamma, opt);
    if (!(unit > 0.0)) {
      throw DomainError("normalization by eps Gamma dz requires Gamma > 0");
    }
    curve.normalized = true;
    curve.normalized_delta_i.reserve(curve.delta_i.size());
    for (double v : curve.delta_i) curve.normalized_delta_i.push_back(v / unit);
  }
  return curve;
}

}  // namespace zeno
