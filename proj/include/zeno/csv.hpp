#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "zeno/absorption.hpp"
#include "zeno/experiment_sim.hpp"
#include "zeno/fitting.hpp"
#include "zeno/integrator.hpp"

namespace zeno::csv {

/// Shortest representation that parses back to the same double.
std::string format_number(double v);

/// t,mx,my,mz
void write_trajectory(std::ostream& out, const Trajectory& traj);

/// pump_rate,delta_i[,normalized_delta_i][,delta_i_no_zeno[,normalized_delta_i_no_zeno]]
/// `no_zeno` may be null; when given it must share the pump grid.
void write_curve(std::ostream& out, const AbsorptionCurve& curve,
                 const AbsorptionCurve* no_zeno = nullptr);

/// t,absorbed,f3
void write_chop_trace(std::ostream& out, const ChopTrace& trace);

/// pump_power_mW,absorbed_power_uW
void write_dataset(std::ostream& out, const DataSet& data);

/// Reads the two-column data set CSV (header row required) and converts to W.
std::vector<DataPoint> read_dataset(std::istream& in);

}  // namespace zeno::csv
