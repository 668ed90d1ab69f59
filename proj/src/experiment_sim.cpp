#include "zeno/experiment_sim.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <string>
#include <thread>

#include "zeno/errors.hpp"
#include "zeno/rk4.hpp"

namespace zeno {
namespace {

// F=3 population and its population-weighted moment M = f3 m.
struct ChopState {
  double f3 = 1.0;
  Vec3 moment{};
};

ChopState operator+(const ChopState& a, const ChopState& b) {
  return {a.f3 + b.f3, a.moment + b.moment};
}
ChopState operator*(double s, const ChopState& a) { return {s * a.f3, s * a.moment}; }

Vec3 bloch_of(const ChopState& s) {
  return s.f3 > 0.0 ? (1.0 / s.f3) * s.moment : Vec3{};
}

}  // namespace

void ExperimentConfig::validate() const {
  spin.validate();
  opt.validate();
  if (!(spin.pump_axis == kEz)) throw ConfigError("chop experiment needs pump axis e_z");
  if (!(branching >= 0.0 && branching <= 1.0)) throw ConfigError("branching must be in [0, 1]");
  if (!(repump_rate >= 0.0) || !std::isfinite(repump_rate)) {
    throw ConfigError("repump rate must be >= 0");
  }
  if (!(chop_freq > 0.0) || !std::isfinite(chop_freq)) throw ConfigError("chop_freq must be > 0");
  if (!(duty > 0.0 && duty < 1.0)) throw ConfigError("duty must be in (0, 1)");
  if (n_periods == 0) throw ConfigError("n_periods must be >= 1");
  if (record_stride == 0) throw ConfigError("record_stride must be >= 1");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("dt must be > 0");
  if (initial_state && (!isfinite(*initial_state) || norm(*initial_state) > 1.0 + kNormSlack)) {
    throw ConfigError("initial Bloch vector must satisfy |m| <= 1");
  }

  const double fastest = std::max({spin.gamma + spin.pump, norm(spin.omega), repump_rate,
                                   branching * spin.pump});
  if (fastest > 0.0 && dt > 0.1 / fastest) {
    throw ConfigError("dt = " + std::to_string(dt) + " s exceeds the step guard 0.1/" +
                      std::to_string(fastest) + " s");
  }
  // At least ten steps in the shorter chopper phase.
  const double shortest_phase = std::min(duty, 1.0 - duty) / chop_freq;
  if (dt > 0.1 * shortest_phase) {
    throw ConfigError("dt does not resolve the chopper phases");
  }
}

double ExperimentConfig::slowest_rate() const {
  double slowest = std::numeric_limits<double>::infinity();
  auto consider = [&slowest](double r) {
    if (r > 0.0) slowest = std::min(slowest, r);
  };
  consider(spin.gamma + spin.pump);
  consider(norm(spin.omega));
  if (branching > 0.0) {
    consider(repump_rate);
    if (spin.gamma + spin.pump > 0.0) {
      const double mz = steady_state_general(spin).z;
      consider(branching * spin.pump * 0.5 * (1.0 - mz));
    }
  }
  return slowest;
}

double repump_rate(double intensity, double eta, double sigma, double photon_energy) {
  if (!(intensity >= 0.0) || !(eta > 0.0) || !(sigma > 0.0) || !(photon_energy > 0.0)) {
    throw DomainError("repump rate inputs must be positive");
  }
  return eta * sigma * intensity / photon_energy;
}

ChopTrace simulate_chop(const ExperimentConfig& cfg) {
  cfg.validate();

  const SpinParams& spin = cfg.spin;
  const double b = cfg.branching;
  const double big_r = cfg.repump_rate;
  const bool preserve = cfg.return_polarization == ReturnPolarization::kPreserved;

  auto rhs = [&](const ChopState& s, bool repump_on) {
    ChopState d{0.0, bloch_rhs_weighted(s.moment, s.f3, spin)};
    if (b != 0.0 && s.f3 > 0.0) {
      // Only spin-down atoms are excited; (f3 - Mz) / 2 is their population.
      const double leak = std::max(0.0, b * spin.pump * 0.5 * (s.f3 - s.moment.z));
      d.f3 -= leak;
      d.moment -= (leak / s.f3) * s.moment;
    }
    if (repump_on && big_r != 0.0) {
      const double back = big_r * (1.0 - s.f3);
      if (back != 0.0) {
        d.f3 += back;
        if (preserve && s.f3 > 0.0) d.moment += (back / s.f3) * s.moment;
      }
    }
    return d;
  };

  ChopTrace trace;
  trace.intensity = spin.pump / cfg.opt.pump_rate_slope();
  trace.quasi_static_warning = cfg.chop_freq > cfg.slowest_rate() / 10.0;

  const double period = 1.0 / cfg.chop_freq;
  const auto per_period = static_cast<std::size_t>(std::ceil(period / cfg.dt - 1e-9));
  const double h = period / static_cast<double>(per_period);
  const auto n_on = static_cast<std::size_t>(std::llround(cfg.duty * static_cast<double>(per_period)));
  trace.step = h;

  // Absorbed power f3 I alpha(mz) L = I (N sigma / 2) (f3 - Mz) L.
  const double absorb_unit = trace.intensity * 0.5 * cfg.opt.density * cfg.opt.sigma *
                             cfg.opt.path_length();
  auto absorbed_of = [&](const ChopState& s) {
    return absorb_unit * (s.f3 - s.moment.z);
  };
  auto record = [&](std::size_t k, const ChopState& s) {
    trace.times.push_back(static_cast<double>(k) * h);
    trace.absorbed.push_back(absorbed_of(s));
    trace.f3_population.push_back(s.f3);
    trace.bloch.push_back(bloch_of(s));
  };

  const BlochVector m0 = cfg.initial_state ? *cfg.initial_state
                                           : spin.gamma + spin.pump > 0.0 ? steady_state_general(spin)
                                                                          : BlochVector{};
  ChopState state{1.0, m0};
  std::size_t global = 0;
  for (std::size_t p = 0; p < cfg.n_periods; ++p) {
    double sum_on = 0.0, sum_off = 0.0;
    for (std::size_t k = 0; k < per_period; ++k, ++global) {
      const bool on = k < n_on;
      if (global % cfg.record_stride == 0) record(global, state);
      (on ? sum_on : sum_off) += absorbed_of(state);
      state = rk4_step(state, h, [&](const ChopState& s) { return rhs(s, on); });
    }
    trace.period_amplitudes.push_back(sum_on / static_cast<double>(n_on) -
                                      sum_off / static_cast<double>(per_period - n_on));
  }
  if (global % cfg.record_stride == 0) record(global, state);
  trace.extracted_amplitude = trace.period_amplitudes.back();
  return trace;
}

AbsorptionCurve amplitude_vs_power(const ExperimentConfig& templ,
                                   std::span<const double> intensity_grid) {
  validate_grid(intensity_grid);
  templ.opt.validate();

  AbsorptionCurve curve;
  curve.gamma = templ.spin.gamma;
  curve.omega0 = norm(templ.spin.omega);
  curve.epsilon = templ.opt.epsilon();
  curve.cell_length = templ.opt.cell_length;

  std::vector<ExperimentConfig> runs;
  runs.reserve(intensity_grid.size());
  for (double intensity : intensity_grid) {
    ExperimentConfig cfg = templ;
    cfg.spin.pump = pump_rate(intensity, templ.opt);
    cfg.record_stride = std::numeric_limits<std::size_t>::max();
    curve.pump_rates.push_back(cfg.spin.pump);
    runs.push_back(cfg);
  }

  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  curve.delta_i.resize(runs.size());
  for (std::size_t start = 0; start < runs.size(); start += workers) {
    const std::size_t stop = std::min(runs.size(), start + workers);
    std::vector<std::future<double>> jobs;
    for (std::size_t i = start; i < stop; ++i) {
      jobs.push_back(std::async(std::launch::async,
                                [&cfg = runs[i]] { return simulate_chop(cfg).extracted_amplitude; }));
    }
    for (std::size_t i = start; i < stop; ++i) curve.delta_i[i] = jobs[i - start].get();
  }
  return curve;
}

}  // namespace zeno
