#include "zeno/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "zeno/absorption.hpp"
#include "zeno/errors.hpp"
#include "zeno/nelder_mead.hpp"
#include "zeno/random.hpp"

namespace zeno {

void DataSet::validate() const {
  if (points.size() < 4) throw DomainError("a data set needs at least 4 points");
  if (!(beam_area > 0.0)) throw DomainError("beam area must be > 0");
  if (!(rate_slope > 0.0)) throw DomainError("pump-rate slope must be > 0");
  if (!(omega0 >= 0.0) || !std::isfinite(omega0)) throw DomainError("Omega0 must be >= 0");
  for (const auto& p : points) {
    if (!std::isfinite(p.pump_power) || !std::isfinite(p.absorbed_power)) {
      throw DomainError("data values must be finite");
    }
    if (p.pump_power < 0.0) throw DomainError("pump powers must be >= 0");
  }
}

double model_absorbed_power(double pump_power, const DataSet& data, const ModelParams& m) {
  const double pump = data.rate_slope * pump_power / data.beam_area;
  if (pump == 0.0) return 0.0;
  return data.beam_area * m.scale * pump * unpolarized_fraction(pump, m.gamma, m.omega0);
}

std::vector<double> residuals(const DataSet& data, const ModelParams& m) {
  std::vector<double> r;
  r.reserve(data.points.size());
  for (const auto& p : data.points) {
    r.push_back(model_absorbed_power(p.pump_power, data, m) - p.absorbed_power);
  }
  return r;
}

std::vector<double> residuals(const DataSet& data, double gamma, double scale) {
  return residuals(data, ModelParams{gamma, scale, data.omega0});
}

FitInit default_init(const DataSet& data) {
  data.validate();
  std::vector<DataPoint> sorted = data.points;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const DataPoint& a, const DataPoint& b) { return a.pump_power < b.pump_power; });

  // Low-power slope through the origin from the three smallest nonzero powers:
  // absorbed ~ scale * rate_slope * power there.
  double sxy = 0.0, sxx = 0.0;
  int used = 0;
  for (const auto& p : sorted) {
    if (p.pump_power <= 0.0) continue;
    sxy += p.pump_power * p.absorbed_power;
    sxx += p.pump_power * p.pump_power;
    if (++used == 3) break;
  }
  FitInit init;
  init.scale = sxx > 0.0 && sxy > 0.0 ? sxy / sxx / data.rate_slope : 1.0;

  const std::size_t quarter = std::max<std::size_t>(1, sorted.size() / 4);
  double top = 0.0;
  for (std::size_t i = sorted.size() - quarter; i < sorted.size(); ++i) {
    top += sorted[i].absorbed_power;
  }
  top /= static_cast<double>(quarter);
  init.gamma = top > 0.0 ? top / (data.beam_area * init.scale)
                         : std::max(data.omega0, 1.0);
  return init;
}

FitResult fit(const DataSet& data, const FitInit& init, const FitOptions& options) {
  data.validate();
  if (!(init.gamma > 0.0) || !(init.scale > 0.0)) {
    throw DomainError("fit initial values must be positive");
  }
  const auto [pmin, pmax] = std::minmax_element(
      data.points.begin(), data.points.end(),
      [](const DataPoint& a, const DataPoint& b) { return a.pump_power < b.pump_power; });
  if (pmin->pump_power == pmax->pump_power) {
    throw DomainError("degenerate data: all pump powers are equal");
  }
  if (options.fit_omega && !(data.omega0 > 0.0)) {
    throw DomainError("fitting Omega0 needs a positive starting value");
  }

  double norm2 = 0.0;
  for (const auto& p : data.points) norm2 += p.absorbed_power * p.absorbed_power;
  if (norm2 == 0.0) norm2 = 1.0;

  auto params_of = [&](const std::vector<double>& x) {
    return ModelParams{std::exp(x[0]), std::exp(x[1]),
                       options.fit_omega ? std::exp(x[2]) : data.omega0};
  };
  // Normalized SSE: same minimizer as the raw sum of squares, but O(1) for
  // any absorbed-power scale.
  auto objective = [&](const std::vector<double>& x) {
    double sse = 0.0;
    for (double r : residuals(data, params_of(x))) sse += r * r;
    return sse / norm2;
  };

  std::vector<double> x0{std::log(init.gamma), std::log(init.scale)};
  if (options.fit_omega) x0.push_back(std::log(data.omega0));

  NelderMeadOptions nm;
  nm.initial_step = options.initial_log_step;
  nm.x_tol = options.x_tol;
  nm.max_iterations = options.max_iterations;

  // One restart from the first optimum guards against a collapsed simplex.
  FitResult result;
  NelderMeadResult run = nelder_mead(objective, x0, nm);
  result.objective_history = run.best_history;
  std::size_t iterations = run.iterations;
  if (run.converged && iterations < options.max_iterations) {
    nm.max_iterations = options.max_iterations - iterations;
    NelderMeadResult again = nelder_mead(objective, run.x, nm);
    iterations += again.iterations;
    for (double v : again.best_history) {
      result.objective_history.push_back(std::min(v, run.fx));
    }
    if (again.fx <= run.fx) run = std::move(again);
    run.converged = run.converged && iterations < options.max_iterations;
  }

  const ModelParams best = params_of(run.x);
  result.gamma_hat = best.gamma;
  result.scale_hat = best.scale;
  result.omega0_hat = best.omega0;
  result.iterations = iterations;
  result.converged = run.converged;
  double sse = 0.0;
  for (double r : residuals(data, best)) sse += r * r;
  result.residual_rms = std::sqrt(sse / static_cast<double>(data.points.size()));
  return result;
}

FitResult fit(const DataSet& data, const FitOptions& options) {
  return fit(data, default_init(data), options);
}

DataSet generate_synthetic(const SyntheticParams& params, std::span<const double> power_grid,
                           const std::optional<GaussianNoise>& noise) {
  validate_grid(power_grid);
  if (!(params.gamma > 0.0) || !(params.scale > 0.0) || !(params.beam_area > 0.0) ||
      !(params.rate_slope > 0.0) || !(params.omega0 >= 0.0)) {
    throw DomainError("synthetic model parameters must be positive");
  }
  if (noise && !(noise->rel_sigma >= 0.0)) throw DomainError("noise level must be >= 0");

  DataSet data;
  data.beam_area = params.beam_area;
  data.omega0 = params.omega0;
  data.rate_slope = params.rate_slope;
  const ModelParams model{params.gamma, params.scale, params.omega0};

  std::optional<NormalSource> rng;
  if (noise) rng.emplace(noise->seed);
  for (double power : power_grid) {
    double y = model_absorbed_power(power, data, model);
    if (rng) y *= 1.0 + noise->rel_sigma * rng->next();
    data.points.push_back({power, y});
  }
  return data;
}

}  // namespace zeno
