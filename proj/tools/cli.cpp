#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "zeno/absorption.hpp"
#include "zeno/core_model.hpp"
#include "zeno/csv.hpp"
#include "zeno/errors.hpp"
#include "zeno/experiment_sim.hpp"
#include "zeno/fitting.hpp"
#include "zeno/integrator.hpp"
#include "zeno/units.hpp"

namespace zeno::cli {
namespace {

using Json = nlohmann::ordered_json;
using units::Dimension;
using units::parse_quantity;

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = s.find(sep, start);
    parts.push_back(s.substr(start, at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return parts;
}

std::size_t parse_count(std::string_view s, const std::string& what) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ConfigError(what + ": expected a non-negative integer, got '" + std::string(s) + "'");
  }
  return v;
}

/// "a,b,c" or "start:stop:count" (linear, or geometric when `log`).
std::vector<double> parse_grid(const std::string& text, Dimension dim, bool log) {
  std::vector<double> grid;
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw ConfigError("range must be start:stop:count, got '" + text + "'");
    const double lo = parse_quantity(parts[0], dim);
    const double hi = parse_quantity(parts[1], dim);
    const std::size_t n = parse_count(parts[2], "range count");
    if (n == 0) throw ConfigError("range count must be >= 1");
    if (log && !(lo > 0.0)) throw ConfigError("a log range needs a positive start");
    for (std::size_t i = 0; i < n; ++i) {
      const double t = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
      grid.push_back(log ? lo * std::pow(hi / lo, t) : lo + t * (hi - lo));
    }
    if (n > 1) grid.back() = hi;
  } else {
    for (auto piece : split(text, ',')) grid.push_back(parse_quantity(piece, dim));
  }
  return grid;
}

std::string hz_note(double rad_per_s) {
  return csv::format_number(units::angular_to_hz(rad_per_s));
}

/// Flag values, then --config JSON values, then defaults.
class Inputs {
 public:
  Inputs(CLI::App* app, std::set<std::string>& schema) : app_(app), schema_(schema) {
    app_->add_option("--config", config_path_, "JSON file with option values (flags win)");
  }

  void option(const std::string& name, const std::string& help) {
    schema_.insert(name);
    app_->add_option("--" + name, values_[name], help);
  }
  void flag(const std::string& name, const std::string& help) {
    schema_.insert(name);
    app_->add_flag("--" + name, flags_[name], help);
  }

  void load_config() {
    if (config_path_.empty()) return;
    std::ifstream in(config_path_);
    if (!in) throw ConfigError("cannot open config file '" + config_path_ + "'");
    try {
      config_ = Json::parse(in);
    } catch (const Json::exception& e) {
      throw ConfigError("config file '" + config_path_ + "': " + e.what());
    }
    if (!config_.is_object()) throw ConfigError("config file must hold a JSON object");
    for (const auto& [key, value] : config_.items()) {
      if (!schema_.contains(key)) throw ConfigError("unknown config key '" + key + "'");
    }
  }

  bool given_on_command_line(const std::string& name) const {
    return app_->get_option("--" + name)->count() > 0;
  }

  std::optional<std::string> raw(const std::string& name) const {
    if (given_on_command_line(name)) {
      if (flags_.contains(name)) return flags_.at(name) ? "true" : "false";
      return values_.at(name);
    }
    if (config_.is_object() && config_.contains(name)) {
      const Json& v = config_.at(name);
      if (v.is_string()) return v.get<std::string>();
      if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
      if (v.is_number()) return csv::format_number(v.get<double>());
      throw ConfigError("config key '" + name + "' must be a string, number or boolean");
    }
    return std::nullopt;
  }

  bool has(const std::string& name) const { return raw(name).has_value(); }

  std::string text(const std::string& name, const std::string& fallback) const {
    return raw(name).value_or(fallback);
  }

  double quantity(const std::string& name, Dimension dim, const std::string& fallback) const {
    return parse_quantity(text(name, fallback), dim);
  }

  double required(const std::string& name, Dimension dim) const {
    const auto v = raw(name);
    if (!v) throw ConfigError("--" + name + " is required");
    return parse_quantity(*v, dim);
  }

  bool enabled(const std::string& name) const {
    const auto v = raw(name);
    if (!v) return false;
    if (*v == "true") return true;
    if (*v == "false") return false;
    throw ConfigError("--" + name + " must be true or false");
  }

  std::size_t count(const std::string& name, std::size_t fallback) const {
    const auto v = raw(name);
    return v ? parse_count(*v, "--" + name) : fallback;
  }

 private:
  CLI::App* app_;
  std::set<std::string>& schema_;
  std::string config_path_;
  std::map<std::string, std::string> values_;
  std::map<std::string, bool> flags_;
  Json config_;
};

// ---------------------------------------------------------------------------
// Shared option groups

void add_optical_options(Inputs& in) {
  in.option("eta", "pumping efficiency in (0, 1] (default 0.5)");
  in.option("sigma", "absorption cross section, e.g. 1e-17m2 (default 1e-17m2)");
  in.option("photon-energy", "photon energy, J or eV (default: from --wavelength)");
  in.option("wavelength", "pump wavelength (default 795nm)");
  in.option("density", "atomic density, /m3 or /cm3 (default 1e16/m3)");
  in.option("cell-length", "cell length (default 2.2cm)");
  in.option("passes", "1, or 2 with the retro-reflecting mirror (default 1)");
}

OpticalParams optical_from(const Inputs& in) {
  OpticalParams opt;
  opt.eta = in.quantity("eta", Dimension::kDimensionless, "0.5");
  opt.sigma = in.quantity("sigma", Dimension::kArea, "1e-17m2");
  opt.photon_energy =
      in.has("photon-energy")
          ? in.quantity("photon-energy", Dimension::kEnergy, "")
          : units::photon_energy_from_wavelength(in.quantity("wavelength", Dimension::kLength, "795nm"));
  opt.density = in.quantity("density", Dimension::kNumberDensity, "1e16/m3");
  opt.cell_length = in.quantity("cell-length", Dimension::kLength, "2.2cm");
  const std::string passes = in.text("passes", "1");
  if (passes != "1" && passes != "2") throw ConfigError("--passes must be 1 or 2");
  opt.passes = passes == "1" ? 1 : 2;
  opt.validate();
  return opt;
}

void add_field_options(Inputs& in) {
  in.option("omega", "Larmor precession rate |Omega0|, e.g. 9kHz or 5.65e4rad/s");
  in.option("field", "magnetic field, e.g. 2uT (needs --gyro)");
  in.option("gyro", "gyromagnetic ratio, e.g. 4.5kHz/uT");
  in.option("field-axis", "x, y or z (default y, transverse to the pump)");
}

struct FieldChoice {
  double omega0 = 0.0;
  Vec3 axis = kEy;
  std::optional<double> field;
};

FieldChoice field_from(const Inputs& in, std::ostream& err, const std::string& fallback) {
  FieldChoice f;
  if (in.has("omega") && in.has("field")) throw ConfigError("give either --omega or --field, not both");
  if (in.has("field")) {
    f.field = in.required("field", Dimension::kMagneticField);
    const double gyro = in.required("gyro", Dimension::kGyromagnetic);
    f.omega0 = gyro * *f.field;
    err << "omega0 = " << csv::format_number(f.omega0) << " rad/s (" << hz_note(f.omega0)
        << " Hz) from B = " << csv::format_number(*f.field) << " T\n";
  } else {
    f.omega0 = in.quantity("omega", Dimension::kAngularRate, fallback);
  }
  const std::string axis = in.text("field-axis", "y");
  if (axis == "x") f.axis = kEx;
  else if (axis == "y") f.axis = kEy;
  else if (axis == "z") f.axis = kEz;
  else throw ConfigError("--field-axis must be x, y or z");
  return f;
}

void add_spin_options(Inputs& in) {
  in.option("pump", "pump rate P, e.g. 3/s or 15kHz (default 0)");
  in.option("intensity", "pump intensity, converted to P with the optical parameters");
  in.option("gamma", "relaxation rate Gamma (default 0)");
  add_field_options(in);
}

SpinParams spin_from(const Inputs& in, const OpticalParams& opt, const FieldChoice& field) {
  SpinParams p;
  p.omega = field.omega0 * field.axis;
  p.gamma = in.quantity("gamma", Dimension::kAngularRate, "0");
  if (in.has("pump") && in.has("intensity")) {
    throw ConfigError("give either --pump or --intensity, not both");
  }
  p.pump = in.has("intensity")
               ? pump_rate(in.required("intensity", Dimension::kIntensity), opt)
               : in.quantity("pump", Dimension::kAngularRate, "0");
  p.validate();
  return p;
}

void add_rates(Json& j, const SpinParams& p) {
  const double w = norm(p.omega);
  j["omega0"] = w;
  j["omega0_hz"] = units::angular_to_hz(w);
  j["gamma"] = p.gamma;
  j["gamma_hz"] = units::angular_to_hz(p.gamma);
  j["pump"] = p.pump;
  j["pump_hz"] = units::angular_to_hz(p.pump);
}

/// Writes to --out when given, else to `fallback`.
void emit(const Inputs& in, std::ostream& fallback, const std::function<void(std::ostream&)>& body) {
  if (const auto path = in.raw("out")) {
    std::ofstream file(*path);
    if (!file) throw ConfigError("cannot open output file '" + *path + "'");
    body(file);
    if (!file) throw ConfigError("failed writing '" + *path + "'");
  } else {
    body(fallback);
  }
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_steady(const Inputs& in, std::ostream& out, std::ostream& err) {
  const OpticalParams opt = optical_from(in);
  const FieldChoice field = field_from(in, err, "0");
  const SpinParams p = spin_from(in, opt, field);

  const BlochVector m = field.axis == kEy ? steady_state_closed(p.pump, p.gamma, field.omega0)
                                          : steady_state_general(p);
  const double alpha = absorption_coefficient(std::clamp(m.z, -1.0, 1.0), opt);
  const double intensity = p.pump / opt.pump_rate_slope();
  const double delta_i = intensity * alpha * opt.path_length();

  Json j;
  add_rates(j, p);
  if (field.field) j["field"] = *field.field;
  j["mx"] = m.x;
  j["my"] = m.y;
  j["mz"] = m.z;
  j["intensity"] = intensity;
  j["alpha"] = alpha;
  j["delta_i"] = delta_i;
  j["epsilon"] = opt.epsilon();
  j["optically_thick"] = alpha * opt.path_length() > kThinLimit;
  emit(in, out, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
  return kExitOk;
}

int cmd_simulate(const Inputs& in, std::ostream& out, std::ostream& err) {
  const OpticalParams opt = optical_from(in);
  const FieldChoice field = field_from(in, err, "0");
  const SpinParams p = spin_from(in, opt, field);

  const auto m0v = parse_grid(in.text("m0", "0,0,0"), Dimension::kDimensionless, false);
  if (m0v.size() != 3) throw ConfigError("--m0 needs three components x,y,z");
  const BlochVector m0{m0v[0], m0v[1], m0v[2]};

  IntegrationConfig cfg;
  const double rate = p.fastest_rate();
  cfg.dt = in.has("dt") ? in.required("dt", Dimension::kTime) : (rate > 0.0 ? 0.01 / rate : 1e-3);
  cfg.t_end = in.required("t-end", Dimension::kTime);
  cfg.record_stride = in.count("stride", 1);

  const Trajectory traj = integrate(m0, p, cfg);
  emit(in, out, [&](std::ostream& os) { csv::write_trajectory(os, traj); });
  return kExitOk;
}

int cmd_sweep(const Inputs& in, std::ostream& out, std::ostream&) {
  const OpticalParams opt = optical_from(in);

  double gamma = 0.0;
  double omega0 = 0.0;
  if (in.has("omega-over-gamma") && in.has("gamma-over-omega")) {
    throw ConfigError("give at most one of --omega-over-gamma and --gamma-over-omega");
  }
  if (in.has("gamma-over-omega")) {
    if (in.has("gamma")) throw ConfigError("--gamma conflicts with --gamma-over-omega");
    omega0 = in.quantity("omega", Dimension::kAngularRate, "1");
    gamma = in.required("gamma-over-omega", Dimension::kDimensionless) * omega0;
  } else {
    gamma = in.quantity("gamma", Dimension::kAngularRate, "1");
    if (in.has("omega-over-gamma")) {
      if (in.has("omega")) throw ConfigError("--omega conflicts with --omega-over-gamma");
      omega0 = in.required("omega-over-gamma", Dimension::kDimensionless) * gamma;
    } else {
      omega0 = in.quantity("omega", Dimension::kAngularRate, "3");
    }
  }

  const bool log = in.enabled("log");
  std::vector<double> grid;
  if (in.has("grid") && in.has("grid-over-gamma")) {
    throw ConfigError("give either --grid or --grid-over-gamma, not both");
  }
  if (in.has("grid")) {
    grid = parse_grid(*in.raw("grid"), Dimension::kAngularRate, log);
  } else {
    grid = parse_grid(in.text("grid-over-gamma", "0:20:201"), Dimension::kDimensionless, log);
    for (double& v : grid) v *= gamma;
  }

  const bool normalize = in.enabled("normalize");
  const AbsorptionCurve zeno = sweep(grid, gamma, omega0, opt, SweepMode::kZeno, normalize);
  std::optional<AbsorptionCurve> plain;
  if (in.enabled("compare")) plain = sweep(grid, gamma, omega0, opt, SweepMode::kNoZeno, normalize);

  emit(in, out, [&](std::ostream& os) { csv::write_curve(os, zeno, plain ? &*plain : nullptr); });
  return kExitOk;
}

double rate_slope_from(const Inputs& in) {
  if (in.has("slope")) return in.required("slope", Dimension::kRateSlope);
  return optical_from(in).pump_rate_slope();
}

int cmd_fit(const Inputs& in, const std::string& data_path, std::ostream& out, std::ostream& err) {
  std::ifstream file(data_path);
  if (!file) throw ConfigError("cannot open data file '" + data_path + "'");

  DataSet data;
  data.points = csv::read_dataset(file);
  data.beam_area = in.quantity("area", Dimension::kArea, "0.12cm2");
  data.rate_slope = rate_slope_from(in);
  if (!in.has("omega") && !in.has("field")) throw ConfigError("--omega or --field/--gyro is required");
  data.omega0 = field_from(in, err, "0").omega0;

  FitOptions options;
  options.fit_omega = in.enabled("fit-omega");
  options.max_iterations = in.count("max-iter", options.max_iterations);
  options.x_tol = in.quantity("tol", Dimension::kDimensionless, "1e-8");

  FitInit init = default_init(data);
  if (in.has("init-gamma")) init.gamma = in.required("init-gamma", Dimension::kAngularRate);
  if (in.has("init-scale")) init.scale = in.required("init-scale", Dimension::kAreaDensity);

  const FitResult r = fit(data, init, options);
  Json j;
  j["gamma"] = r.gamma_hat;
  j["gamma_hz"] = units::angular_to_hz(r.gamma_hat);
  j["scale"] = r.scale_hat;
  j["omega0"] = r.omega0_hat;
  j["omega0_hz"] = units::angular_to_hz(r.omega0_hat);
  j["fit_omega"] = options.fit_omega;
  j["residual_rms"] = r.residual_rms;
  j["residual_rms_uw"] = r.residual_rms * 1e6;
  j["iterations"] = r.iterations;
  j["converged"] = r.converged;
  j["n_points"] = data.points.size();
  emit(in, out, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
  if (!r.converged) {
    err << "fit did not converge within " << options.max_iterations << " iterations\n";
    return kExitDomain;
  }
  return kExitOk;
}

int cmd_synth(const Inputs& in, std::ostream& out, std::ostream& err) {
  SyntheticParams params;
  params.gamma = in.required("gamma", Dimension::kAngularRate);
  params.omega0 = field_from(in, err, "0").omega0;
  params.scale = in.required("scale", Dimension::kAreaDensity);
  params.beam_area = in.quantity("area", Dimension::kArea, "0.12cm2");
  params.rate_slope = rate_slope_from(in);

  const auto powers = parse_grid(in.text("powers", "0:28mW:30"), Dimension::kPower, false);
  std::optional<GaussianNoise> noise;
  const double rel = in.quantity("noise", Dimension::kDimensionless, "0");
  if (rel > 0.0) noise = GaussianNoise{rel, in.count("seed", 0)};

  const DataSet data = generate_synthetic(params, powers, noise);
  emit(in, out, [&](std::ostream& os) { csv::write_dataset(os, data); });
  return kExitOk;
}

int cmd_chop(const Inputs& in, std::ostream& out, std::ostream& err) {
  ExperimentConfig cfg;
  cfg.opt = optical_from(in);
  const FieldChoice field = field_from(in, err, "0");
  cfg.spin = spin_from(in, cfg.opt, field);
  cfg.branching = in.quantity("branching", Dimension::kDimensionless, "0.5");
  if (in.has("repump-rate") && in.has("repump-intensity")) {
    throw ConfigError("give either --repump-rate or --repump-intensity, not both");
  }
  if (in.has("repump-intensity")) {
    cfg.repump_rate = repump_rate(
        in.required("repump-intensity", Dimension::kIntensity),
        in.quantity("repump-eta", Dimension::kDimensionless, "0.5"),
        in.quantity("repump-sigma", Dimension::kArea, "1e-17m2"),
        units::photon_energy_from_wavelength(in.quantity("repump-wavelength", Dimension::kLength, "780nm")));
  } else {
    cfg.repump_rate = in.quantity("repump-rate", Dimension::kAngularRate, "0");
  }
  cfg.chop_freq = in.quantity("chop-freq", Dimension::kFrequency, "91Hz");
  cfg.duty = in.quantity("duty", Dimension::kDimensionless, "0.5");
  cfg.n_periods = in.count("periods", 6);
  cfg.record_stride = in.count("stride", 1);
  const std::string pol = in.text("polarization", "unpolarized");
  if (pol == "unpolarized") cfg.return_polarization = ReturnPolarization::kUnpolarized;
  else if (pol == "preserved") cfg.return_polarization = ReturnPolarization::kPreserved;
  else throw ConfigError("--polarization must be unpolarized or preserved");

  if (in.has("dt")) {
    cfg.dt = in.required("dt", Dimension::kTime);
  } else {
    const double fastest = std::max({cfg.spin.gamma + cfg.spin.pump, field.omega0, cfg.repump_rate,
                                     cfg.branching * cfg.spin.pump});
    const double phase = std::min(cfg.duty, 1.0 - cfg.duty) / cfg.chop_freq;
    cfg.dt = std::min(fastest > 0.0 ? 0.05 / fastest : phase, 0.05 * phase);
  }

  const ChopTrace trace = simulate_chop(cfg);

  Json j;
  add_rates(j, cfg.spin);
  j["branching"] = cfg.branching;
  j["repump_rate"] = cfg.repump_rate;
  j["chop_freq"] = cfg.chop_freq;
  j["duty"] = cfg.duty;
  j["periods"] = cfg.n_periods;
  j["step"] = trace.step;
  j["intensity"] = trace.intensity;
  j["extracted_amplitude"] = trace.extracted_amplitude;
  if (field.axis == kEy) {
    const double model = delta_intensity(cfg.spin.pump, cfg.spin.gamma, field.omega0, cfg.opt).delta_i;
    j["delta_i_model"] = model;
    if (model > 0.0) j["relative_deviation"] = trace.extracted_amplitude / model - 1.0;
  }
  j["quasi_static_warning"] = trace.quasi_static_warning;
  if (trace.quasi_static_warning) {
    err << "warning: chop frequency is not well below the slowest internal rate\n";
  }

  emit(in, out, [&](std::ostream& os) { csv::write_chop_trace(os, trace); });
  const std::string report = j.dump(2) + "\n";
  if (const auto path = in.raw("report")) {
    std::ofstream file(*path);
    if (!file) throw ConfigError("cannot open report file '" + *path + "'");
    file << report;
  } else if (in.has("out")) {
    out << report;
  } else {
    err << report;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optical pumping and quantum Zeno absorption toolkit", "zeno"};
  app.require_subcommand(1);
  std::set<std::string> schema;
  std::vector<std::unique_ptr<Inputs>> inputs;
  auto make = [&](CLI::App* sub) -> Inputs& {
    inputs.push_back(std::make_unique<Inputs>(sub, schema));
    return *inputs.back();
  };

  auto* steady = app.add_subcommand("steady", "steady-state Bloch vector, alpha and delta I");
  Inputs& steady_in = make(steady);
  add_spin_options(steady_in);
  add_optical_options(steady_in);
  steady_in.option("out", "write the JSON report here instead of stdout");

  auto* simulate = app.add_subcommand("simulate", "RK4 trajectory of the Bloch equation as CSV");
  Inputs& simulate_in = make(simulate);
  add_spin_options(simulate_in);
  add_optical_options(simulate_in);
  simulate_in.option("m0", "initial Bloch vector x,y,z (default 0,0,0)");
  simulate_in.option("dt", "RK4 step (default 0.01 / fastest rate)");
  simulate_in.option("t-end", "integration time (required)");
  simulate_in.option("stride", "record every n-th step (default 1)");
  simulate_in.option("out", "CSV output path (default stdout)");

  auto* sweep_cmd = app.add_subcommand("sweep", "absorbed intensity versus pump rate as CSV");
  Inputs& sweep_in = make(sweep_cmd);
  sweep_in.option("gamma", "relaxation rate (default 1/s)");
  sweep_in.option("omega", "precession rate (default 3/s, or 1/s with --gamma-over-omega)");
  sweep_in.option("omega-over-gamma", "set Omega0 = ratio * Gamma");
  sweep_in.option("gamma-over-omega", "set Gamma = ratio * Omega0");
  sweep_in.option("grid", "pump rates: list a,b,c or range start:stop:count");
  sweep_in.option("grid-over-gamma", "pump rates in units of Gamma (default 0:20:201)");
  sweep_in.flag("log", "geometric spacing for ranges");
  sweep_in.flag("normalize", "add columns divided by eps Gamma dz");
  sweep_in.flag("compare", "add the curve with pump decoherence removed");
  add_optical_options(sweep_in);
  sweep_in.option("out", "CSV output path (default stdout)");

  auto* fit_cmd = app.add_subcommand("fit", "fit Gamma and eps*dz to a pump-power scan");
  Inputs& fit_in = make(fit_cmd);
  std::string data_path;
  fit_cmd->add_option("data", data_path, "CSV with pump_power_mW,absorbed_power_uW")->required();
  add_field_options(fit_in);
  fit_in.option("area", "pump beam area (default 0.12cm2)");
  fit_in.option("slope", "dP/dI in m2/J (default: passes * eta * sigma / photon energy)");
  add_optical_options(fit_in);
  fit_in.option("init-gamma", "initial Gamma (default: plateau heuristic)");
  fit_in.option("init-scale", "initial eps*dz in J/m2 (default: low-power slope)");
  fit_in.flag("fit-omega", "fit Omega0 as well");
  fit_in.option("max-iter", "simplex iteration budget (default 500)");
  fit_in.option("tol", "simplex size tolerance in log space (default 1e-8)");
  fit_in.option("out", "write the JSON report here instead of stdout");

  auto* synth = app.add_subcommand("synth", "synthetic pump-power scan as data CSV");
  Inputs& synth_in = make(synth);
  synth_in.option("gamma", "relaxation rate (required)");
  add_field_options(synth_in);
  synth_in.option("scale", "eps*dz in J/m2 (required)");
  synth_in.option("area", "pump beam area (default 0.12cm2)");
  synth_in.option("slope", "dP/dI in m2/J (default: from optical parameters)");
  add_optical_options(synth_in);
  synth_in.option("powers", "pump powers, list or start:stop:count (default 0:28mW:30)");
  synth_in.option("noise", "relative Gaussian noise level (default 0)");
  synth_in.option("seed", "PRNG seed for the noise (default 0)");
  synth_in.option("out", "CSV output path (default stdout)");

  auto* chop = app.add_subcommand("chop", "chopped-repump differential absorption trace");
  Inputs& chop_in = make(chop);
  add_spin_options(chop_in);
  add_optical_options(chop_in);
  chop_in.option("branching", "fraction of excitations lost to F=2 (default 0.5)");
  chop_in.option("repump-rate", "F=2 -> F=3 return rate while the repump is on");
  chop_in.option("repump-intensity", "repump intensity, converted with --repump-sigma");
  chop_in.option("repump-sigma", "repump cross section (default 1e-17m2)");
  chop_in.option("repump-eta", "repump efficiency (default 0.5)");
  chop_in.option("repump-wavelength", "repump wavelength (default 780nm)");
  chop_in.option("chop-freq", "chopper frequency (default 91Hz)");
  chop_in.option("duty", "open fraction of the chop period (default 0.5)");
  chop_in.option("periods", "number of chop periods (default 6)");
  chop_in.option("polarization", "unpolarized or preserved return (default unpolarized)");
  chop_in.option("dt", "RK4 step upper bound (default automatic)");
  chop_in.option("stride", "record every n-th step (default 1)");
  chop_in.option("out", "trace CSV path (default stdout)");
  chop_in.option("report", "amplitude JSON path (default: stdout with --out, else stderr)");

  std::vector<std::string> argv_tail(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(argv_tail.begin(), argv_tail.end());
  try {
    app.parse(argv_tail);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    for (auto& i : inputs) i->load_config();
    if (steady->parsed()) return cmd_steady(steady_in, out, err);
    if (simulate->parsed()) return cmd_simulate(simulate_in, out, err);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_in, out, err);
    if (fit_cmd->parsed()) return cmd_fit(fit_in, data_path, out, err);
    if (synth->parsed()) return cmd_synth(synth_in, out, err);
    if (chop->parsed()) return cmd_chop(chop_in, out, err);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ConvergenceError& e) {
    err << "convergence error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitConfig;
}

}  // namespace zeno::cli
