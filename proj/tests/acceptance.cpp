// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "zeno/absorption.hpp"
#include "zeno/core_model.hpp"
#include "zeno/experiment_sim.hpp"
#include "zeno/fitting.hpp"
#include "zeno/golden_section.hpp"
#include "zeno/integrator.hpp"
#include "zeno/units.hpp"

using namespace zeno;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a = 0, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g;
  for (int i = 0; i < n; ++i) g.push_back(lo * std::pow(hi / lo, double(i) / (n - 1)));
  return g;
}

OpticalParams optics() {
  OpticalParams opt;
  opt.sigma = 2e-17;
  opt.density = 3e16;
  return opt;
}

Outcome curve_maximum() {
  const OpticalParams opt = optics();
  const auto mp = max_point(1.0, 3.0);
  if (!mp) return {false, "no turning point"};
  const __float128 arg = golden_section_maximize<__float128>(
      [](__float128 p) { return oracle::zeno_curve_q(p, 1, 3); }, __float128(0), __float128(100),
      __float128(1e-18), 2000);
  const double p_golden = static_cast<double>(arg);
  const double p_err = std::abs(p_golden - mp->pump) / mp->pump;

  // The library's normalized sweep against the closed form, and its maximum on a fine grid.
  std::vector<double> grid;
  for (int i = 0; i <= 20000; ++i) grid.push_back(i / 1000.0);
  const AbsorptionCurve c = sweep(grid, 1.0, 3.0, opt, SweepMode::kZeno, true);
  double curve_err = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double ref = oracle::normalized_curve_w3(grid[i]);
    if (ref > 0) curve_err = std::max(curve_err, std::abs(c.normalized_delta_i[i] - ref) / ref);
  }
  const auto best = std::max_element(c.normalized_delta_i.begin(), c.normalized_delta_i.end()) -
                    c.normalized_delta_i.begin();
  const bool pass = mp->pump == 5.0 && std::abs(mp->delta_i - 5.0 / 3.0) < 1e-15 && p_err < 1e-9 &&
                    grid[best] == 5.0 && std::abs(c.normalized_delta_i[best] - 5.0 / 3.0) < 1e-12 &&
                    curve_err < 1e-12;
  return {pass, fmt("P*=%.15g, golden-section rel err %.2e, sweep max %.15g", mp->pump, p_err,
                    c.normalized_delta_i[best])};
}

Outcome asymptote() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<double> grid{1e4};
  const AbsorptionCurve c = sweep(grid, 1.0, 3.0, optics(), SweepMode::kZeno, true);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const double v = c.normalized_delta_i[0];
  return {std::abs(v - 1.0) < 2e-3 && secs < 1.0, fmt("normalized %.6f at p=1e4, %.3g s", v, secs)};
}

Outcome regime_dichotomy() {
  const OpticalParams opt = optics();
  std::mt19937_64 rng(1001);
  int bad_up = 0, bad_peak = 0;
  double worst_steps = 0;
  for (int i = 0; i < 50; ++i) {
    const double w = oracle::log_uniform(rng, 1e-2, 1e2);
    const double g = w * oracle::log_uniform(rng, 1.01, 100.0);
    const auto grid = log_grid(1e-2 * g, 1e3 * g, 200);
    const AbsorptionCurve c = sweep(grid, g, w, opt, SweepMode::kZeno, false);
    for (std::size_t k = 1; k < grid.size(); ++k) {
      if (!(c.delta_i[k] > c.delta_i[k - 1])) {
        ++bad_up;
        break;
      }
    }
  }
  for (int i = 0; i < 50; ++i) {
    const double w = oracle::log_uniform(rng, 1e-2, 1e2);
    const double g = w * oracle::log_uniform(rng, 0.01, 0.9);
    const double p_star = max_point(g, w)->pump;
    const auto grid = log_grid(1e-2 * w, 1e3 * w, 200);
    const AbsorptionCurve c = sweep(grid, g, w, opt, SweepMode::kZeno, false);
    const auto peak = static_cast<std::size_t>(
        std::max_element(c.delta_i.begin(), c.delta_i.end()) - c.delta_i.begin());
    bool unimodal = peak > 0 && peak + 1 < grid.size();
    for (std::size_t k = 1; k < grid.size() && unimodal; ++k) {
      unimodal = k <= peak ? c.delta_i[k] > c.delta_i[k - 1] : c.delta_i[k] < c.delta_i[k - 1];
    }
    const double step = std::max(grid[peak] - grid[peak - 1], grid[peak + 1] - grid[peak]);
    const double off = std::abs(grid[peak] - p_star) / step;
    worst_steps = std::max(worst_steps, off);
    if (!unimodal || off > 1.0) ++bad_peak;
  }
  return {bad_up == 0 && bad_peak == 0,
          fmt("%g non-monotone, %g misplaced peaks, worst peak offset %.3f grid steps", bad_up,
              bad_peak, worst_steps)};
}

double precession_error(double dt) {
  const double w = 1.0, t_end = 10.0;
  IntegrationConfig cfg;
  cfg.dt = dt;
  cfg.t_end = t_end;
  cfg.record_stride = 1u << 30;
  const Trajectory tr = integrate(kEz, SpinParams::transverse(0, 0, w), cfg);
  const double t = tr.final_time;
  return norm(tr.final_state - Vec3{-std::sin(w * t), 0, std::cos(w * t)});
}

Outcome steady_equivalence() {
  std::mt19937_64 rng(1002);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    double g = oracle::log_uniform(rng, 0.1, 10);
    double p = oracle::log_uniform(rng, 0.1, 10);
    const double w = oracle::log_uniform(rng, 0.1, 10);
    if (i % 10 == 3) g = 0;
    if (i % 10 == 7) p = 0;
    const SpinParams sp = SpinParams::transverse(p, g, w);
    IntegrationConfig cfg;
    cfg.dt = 0.01 / sp.fastest_rate();
    cfg.t_end = 40.0 / (g + p);
    cfg.record_stride = 1u << 30;
    const oracle::V3 m0 = oracle::in_ball(rng);
    const Trajectory tr = integrate({m0.x, m0.y, m0.z}, sp, cfg);
    worst = std::max(worst, norm(tr.final_state - steady_state_closed(p, g, w)));
  }
  const double ratio = precession_error(0.05) / precession_error(0.025);
  return {worst < 1e-8 && ratio >= 12 && ratio <= 20,
          fmt("worst |ODE - closed| %.2e over 100 sets, RK4 halving ratio %.3f", worst, ratio)};
}

Outcome strong_pumping() {
  std::mt19937_64 rng(1003);
  double min_mz = 1, worst_ratio = 1;
  bool pass = true;
  for (int i = 0; i < 100; ++i) {
    const double g = i == 0 ? 1.0 : oracle::log_uniform(rng, 1e-2, 1e2);
    const double w = i == 0 ? 3.0 : oracle::log_uniform(rng, 1e-2, 1e2);
    const double p = 1e3 * std::max(g, w);
    const BlochVector m = steady_state_closed(p, g, w);
    const double ratio = std::abs(m.x) / (w / p);
    min_mz = std::min(min_mz, m.z);
    if (std::abs(std::log(ratio)) > std::abs(std::log(worst_ratio))) worst_ratio = ratio;
    pass = pass && m.z > 0.997 && ratio >= 0.5 && ratio <= 2.0;
  }
  return {pass, fmt("min mz %.6f, worst |mx|/(Omega0/P) %.4f over 100 pairs", min_mz, worst_ratio)};
}

Outcome fit_round_trip() {
  SyntheticParams s;
  s.gamma = units::kTwoPi * 3e3;
  s.omega0 = units::kTwoPi * 9e3;
  s.scale = 1.33e-4;
  s.beam_area = 1.2e-5;
  const double p_star = (s.omega0 * s.omega0 + s.gamma * s.gamma) / (s.omega0 - s.gamma);
  s.rate_slope = p_star / (0.010 / s.beam_area);
  std::vector<double> powers;
  for (int i = 0; i < 30; ++i) powers.push_back(0.028 * i / 29.0);

  const FitResult clean = fit(generate_synthetic(s, powers));
  const double clean_err = std::abs(clean.gamma_hat / s.gamma - 1);
  double worst = 0;
  bool all_converged = clean.converged;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const FitResult r = fit(generate_synthetic(s, powers, GaussianNoise{0.01, seed}));
    all_converged = all_converged && r.converged;
    worst = std::max(worst, std::abs(r.gamma_hat / s.gamma - 1));
  }
  return {all_converged && clean_err < 1e-3 && worst < 0.10,
          fmt("noiseless Gamma rel err %.2e, 1%% noise worst over 20 seeds %.4f", clean_err, worst)};
}

// The repump rate is held fixed across the power grid at 10 b P for the
// strongest pump, so R >= 10 b P holds at every point.
ExperimentConfig chop_config(double pump, double branching, double repump) {
  ExperimentConfig c;
  c.spin = SpinParams::transverse(pump, 1000.0, 3000.0);
  c.opt = optics();
  c.branching = branching;
  c.repump_rate = repump;
  c.return_polarization = ReturnPolarization::kPreserved;
  c.n_periods = 3;
  c.chop_freq = c.slowest_rate() / 100;
  const double fastest = std::max({c.spin.gamma + pump, 3000.0, c.repump_rate, branching * pump});
  c.dt = 0.1 / fastest;
  return c;
}

Outcome chop_consistency() {
  double worst = 0;
  const double p_max = 20000.0, b = 0.5;
  for (double pump : log_grid(500.0, p_max, 10)) {
    const ExperimentConfig c = chop_config(pump, b, 10 * b * p_max);
    const double amp = simulate_chop(c).extracted_amplitude;
    const double model = delta_intensity(pump, 1000.0, 3000.0, c.opt).delta_i;
    worst = std::max(worst, std::abs(amp / model - 1));
  }
  const double closed = simulate_chop(chop_config(5000.0, 0.0, 1000.0)).extracted_amplitude;
  return {worst < 0.05 && closed == 0.0,
          fmt("worst deviation %.4f over 10 powers (polarization-preserving return), b=0 amplitude %g",
              worst, closed)};
}

Outcome invariant_suite() {
  std::mt19937_64 rng(1008);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int failures = 0;

  // Norm contraction from states on the unit sphere.
  double max_norm = 0;
  for (int i = 0; i < 1000; ++i) {
    const oracle::V3 a = oracle::on_sphere(rng), s = oracle::on_sphere(rng);
    SpinParams p;
    p.omega = oracle::log_uniform(rng, 1e-2, 1e2) * Vec3{s.x, s.y, s.z};
    p.gamma = i % 4 == 0 ? 0.0 : oracle::log_uniform(rng, 1e-2, 1e2);
    p.pump = i % 5 == 0 ? 0.0 : oracle::log_uniform(rng, 1e-2, 1e2);
    IntegrationConfig cfg;
    cfg.dt = 0.05 / p.fastest_rate();
    cfg.t_end = 200 * cfg.dt;
    const Trajectory tr = integrate({a.x, a.y, a.z}, p, cfg);
    for (const auto& m : tr.states) max_norm = std::max(max_norm, norm(m));
  }
  if (max_norm > 1 + kNormSlack) ++failures;

  // Pump decomposition rebuilds the right-hand side.
  double worst_rebuild = 0;
  for (int i = 0; i < 1000; ++i) {
    const oracle::V3 m = oracle::in_ball(rng), s = oracle::on_sphere(rng);
    SpinParams p;
    p.omega = oracle::log_uniform(rng, 1e-2, 1e2) * Vec3{s.x, s.y, s.z};
    p.gamma = oracle::log_uniform(rng, 1e-2, 1e2);
    p.pump = oracle::log_uniform(rng, 1e-2, 1e2);
    const Vec3 mv{m.x, m.y, m.z};
    const Vec3 rebuilt = cross(mv, p.omega) - p.gamma * mv + decompose_pump(mv, p).pump_term();
    const Vec3 rhs = bloch_rhs(mv, p);
    worst_rebuild = std::max(worst_rebuild, norm(rebuilt - rhs) / std::max(1.0, norm(rhs)));
  }
  if (worst_rebuild > 1e-14) ++failures;

  // alpha in [0, N sigma] and ΔI in [0, eps P dz].
  const OpticalParams opt = optics();
  int optics_bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const double mz = 2 * u(rng) - 1;
    const double alpha = absorption_coefficient(mz, opt);
    if (!(alpha >= 0 && alpha <= opt.density * opt.sigma)) ++optics_bad;
    const double g = oracle::log_uniform(rng, 1e-3, 1e3);
    const double w = oracle::log_uniform(rng, 1e-3, 1e3);
    const double p = i % 10 == 0 ? 0.0 : oracle::log_uniform(rng, 1e-3, 1e5);
    const double di = delta_intensity(p, g, w, opt).delta_i;
    if (!(di >= 0 && di <= opt.epsilon() * p * opt.cell_length * (1 + 1e-15))) ++optics_bad;
  }
  if (optics_bad) ++failures;

  // f3 in [0, 1] along chopped traces.
  double f3_lo = 1, f3_hi = 0;
  for (int i = 0; i < 1000; ++i) {
    ExperimentConfig c;
    const double pump = oracle::log_uniform(rng, 1e2, 1e4);
    c.spin = SpinParams::transverse(pump, oracle::log_uniform(rng, 1e2, 1e4),
                                    oracle::log_uniform(rng, 1e2, 1e4));
    c.opt = opt;
    c.branching = u(rng);
    c.repump_rate = i % 7 == 0 ? 0.0 : oracle::log_uniform(rng, 1e1, 1e4);
    c.return_polarization = i % 2 ? ReturnPolarization::kPreserved : ReturnPolarization::kUnpolarized;
    const oracle::V3 m = oracle::in_ball(rng);
    c.initial_state = BlochVector{m.x, m.y, m.z};
    c.chop_freq = 1000;
    c.n_periods = 2;
    const double fastest = std::max({c.spin.gamma + pump, norm(c.spin.omega), c.repump_rate,
                                     c.branching * pump});
    c.dt = std::min(0.1 / fastest, 1e-5);
    const ChopTrace t = simulate_chop(c);
    for (double f : t.f3_population) {
      f3_lo = std::min(f3_lo, f);
      f3_hi = std::max(f3_hi, f);
    }
  }
  if (f3_lo < 0 || f3_hi > 1) ++failures;

  return {failures == 0,
          fmt("max |m| %.15f, decomposition residual %.1e, f3 in [%.4f, ", max_norm, worst_rebuild,
              f3_lo) +
              fmt("%.4f], %g optical violations (1000 cases each)", f3_hi, optics_bad)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 normalized curve maximum", curve_maximum},
      {"2 strong-pumping asymptote", asymptote},
      {"3 regime dichotomy", regime_dichotomy},
      {"4 steady-state equivalence and RK4 order", steady_equivalence},
      {"5 strong-pumping polarization", strong_pumping},
      {"6 fit round trip", fit_round_trip},
      {"7 chop-experiment consistency", chop_consistency},
      {"8 invariant suite", invariant_suite},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
