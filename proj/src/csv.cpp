#include "zeno/csv.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <string_view>

#include "zeno/errors.hpp"

namespace zeno::csv {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    cells.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

double parse_cell(std::string_view cell, std::size_t line_no) {
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
    throw ConfigError("line " + std::to_string(line_no) + ": bad number '" + std::string(cell) + "'");
  }
  return v;
}

}  // namespace

std::string format_number(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

void write_trajectory(std::ostream& out, const Trajectory& traj) {
  out << "t,mx,my,mz\n";
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const auto& m = traj.states[i];
    out << format_number(traj.times[i]) << ',' << format_number(m.x) << ','
        << format_number(m.y) << ',' << format_number(m.z) << '\n';
  }
}

void write_curve(std::ostream& out, const AbsorptionCurve& curve, const AbsorptionCurve* no_zeno) {
  if (no_zeno && no_zeno->pump_rates != curve.pump_rates) {
    throw ConfigError("comparison curves must share the pump grid");
  }
  out << "pump_rate,delta_i";
  if (curve.normalized) out << ",normalized_delta_i";
  if (no_zeno) {
    out << ",delta_i_no_zeno";
    if (no_zeno->normalized) out << ",normalized_delta_i_no_zeno";
  }
  out << '\n';
  for (std::size_t i = 0; i < curve.pump_rates.size(); ++i) {
    out << format_number(curve.pump_rates[i]) << ',' << format_number(curve.delta_i[i]);
    if (curve.normalized) out << ',' << format_number(curve.normalized_delta_i[i]);
    if (no_zeno) {
      out << ',' << format_number(no_zeno->delta_i[i]);
      if (no_zeno->normalized) out << ',' << format_number(no_zeno->normalized_delta_i[i]);
    }
    out << '\n';
  }
}

void write_chop_trace(std::ostream& out, const ChopTrace& trace) {
  out << "t,absorbed,f3\n";
  for (std::size_t i = 0; i < trace.times.size(); ++i) {
    out << format_number(trace.times[i]) << ',' << format_number(trace.absorbed[i]) << ','
        << format_number(trace.f3_population[i]) << '\n';
  }
}

void write_dataset(std::ostream& out, const DataSet& data) {
  out << "pump_power_mW,absorbed_power_uW\n";
  for (const auto& p : data.points) {
    out << format_number(p.pump_power * 1e3) << ',' << format_number(p.absorbed_power * 1e6)
        << '\n';
  }
}

std::vector<DataPoint> read_dataset(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::vector<DataPoint> points;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    const auto cells = split(view);
    if (!have_header) {
      if (cells.size() != 2 || cells[0] != "pump_power_mW" || cells[1] != "absorbed_power_uW") {
        throw ConfigError("data CSV must start with header 'pump_power_mW,absorbed_power_uW'");
      }
      have_header = true;
      continue;
    }
    if (cells.size() != 2) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 2 columns");
    }
    points.push_back({parse_cell(cells[0], line_no) * 1e-3, parse_cell(cells[1], line_no) * 1e-6});
  }
  if (!have_header) throw ConfigError("data CSV is empty (header row required)");
  return points;
}

}  // namespace zeno::csv
