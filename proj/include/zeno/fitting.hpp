#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace zeno {

struct DataPoint {
  double pump_power = 0.0;      ///< W through the beam area
  double absorbed_power = 0.0;  ///< W
};

/// Pump-power scan. The pump rate for each point is
/// P = rate_slope * pump_power / beam_area.
struct DataSet {
  std::vector<DataPoint> points;
  double beam_area = 1.2e-5;  ///< m^2
  double omega0 = 0.0;        ///< rad/s, fixed from the applied field
  double rate_slope = 0.0;    ///< m^2/J, passes * eta * sigma / (hbar omega)

  void validate() const;
};

/// Parameters of the absorbed-power model
///   A_p * scale * P * [Gamma (Gamma + P) + Omega0^2] / [(Gamma + P)^2 + Omega0^2],
/// where scale = eps dz.
struct ModelParams {
  double gamma = 0.0;   ///< 1/s
  double scale = 0.0;   ///< J/m^2
  double omega0 = 0.0;  ///< rad/s
};

struct FitInit {
  double gamma = 0.0;
  double scale = 0.0;
};

struct FitOptions {
  bool fit_omega = false;             ///< also fit Omega0 (3-parameter mode)
  std::size_t max_iterations = 500;   ///< total simplex iterations
  double x_tol = 1e-8;                ///< simplex diameter in log space
  double initial_log_step = 0.2;
};

struct FitResult {
  double gamma_hat = 0.0;
  double scale_hat = 0.0;
  double omega0_hat = 0.0;       ///< equals the fixed value unless fit_omega
  double residual_rms = 0.0;     ///< W
  std::size_t iterations = 0;
  bool converged = false;
  std::vector<double> objective_history;  ///< best normalized SSE per iteration
};

double model_absorbed_power(double pump_power, const DataSet& data, const ModelParams& m);

/// model - observed, in data order. W.
std::vector<double> residuals(const DataSet& data, double gamma, double scale);
std::vector<double> residuals(const DataSet& data, const ModelParams& m);

/// Starting point from the data: scale from the low-power slope, Gamma from
/// the mean of the top-quartile absorption (the eps Gamma dz plateau).
FitInit default_init(const DataSet& data);

/// Least-squares fit by Nelder-Mead over log parameters.
FitResult fit(const DataSet& data, const FitInit& init, const FitOptions& options = {});
FitResult fit(const DataSet& data, const FitOptions& options = {});

struct SyntheticParams {
  double gamma = 0.0;
  double omega0 = 0.0;
  double scale = 0.0;
  double beam_area = 1.2e-5;
  double rate_slope = 0.0;
};

/// Multiplicative Gaussian noise: y -> y (1 + rel_sigma z), z ~ N(0, 1) from
/// NormalSource(seed).
struct GaussianNoise {
  double rel_sigma = 0.0;
  std::uint64_t seed = 0;
};

DataSet generate_synthetic(const SyntheticParams& params, std::span<const double> power_grid,
                           const std::optional<GaussianNoise>& noise = std::nullopt);

}  // namespace zeno
