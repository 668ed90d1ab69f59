#include <doctest.h>

#include <charconv>
#include <cstring>
#include <random>
#include <sstream>

#include "zeno/csv.hpp"
#include "zeno/errors.hpp"

using namespace zeno;

namespace {

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_SUITE("csv") {
  TEST_CASE("format_number round-trips") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 1000; ++i) {
      std::uint64_t bits = rng();
      double v;
      std::memcpy(&v, &bits, sizeof v);
      if (!std::isfinite(v)) continue;
      const std::string s = csv::format_number(v);
      double back = 0;
      std::from_chars(s.data(), s.data() + s.size(), back);
      REQUIRE(back == v);
    }
    CHECK(csv::format_number(0.5) == "0.5");
    CHECK(csv::format_number(-3) == "-3");
  }

  TEST_CASE("read_dataset converts mW and uW to W") {
    std::istringstream in("pump_power_mW,absorbed_power_uW\n# comment\n0,0\n10,2.5\n\n28,3\n");
    const auto pts = csv::read_dataset(in);
    REQUIRE(pts.size() == 3);
    CHECK(pts[1].pump_power == doctest::Approx(0.010));
    CHECK(pts[1].absorbed_power == doctest::Approx(2.5e-6));
  }

  TEST_CASE("read_dataset errors") {
    std::istringstream empty("");
    CHECK_THROWS_AS(csv::read_dataset(empty), ConfigError);
    std::istringstream no_header("1,2\n3,4\n");
    CHECK_THROWS_AS(csv::read_dataset(no_header), ConfigError);
    std::istringstream bad("pump_power_mW,absorbed_power_uW\n1,x\n");
    CHECK_THROWS_AS(csv::read_dataset(bad), ConfigError);
    std::istringstream cols("pump_power_mW,absorbed_power_uW\n1,2,3\n");
    CHECK_THROWS_AS(csv::read_dataset(cols), ConfigError);
  }

  TEST_CASE("write_dataset then read_dataset is lossless") {
    DataSet d;
    d.points = {{0.0, 0.0}, {0.001234, 1.5e-7}, {0.028, 3.3e-6}};
    std::ostringstream out;
    csv::write_dataset(out, d);
    CHECK(first_line(out.str()) == "pump_power_mW,absorbed_power_uW");
    std::istringstream in(out.str());
    const auto pts = csv::read_dataset(in);
    REQUIRE(pts.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(pts[i].pump_power == doctest::Approx(d.points[i].pump_power).epsilon(1e-15));
      CHECK(pts[i].absorbed_power == doctest::Approx(d.points[i].absorbed_power).epsilon(1e-15));
    }
  }

  TEST_CASE("writer headers") {
    Trajectory traj;
    traj.times = {0, 1};
    traj.states = {{0, 0, 0}, {0, 0, 1}};
    std::ostringstream a;
    csv::write_trajectory(a, traj);
    CHECK(a.str() == "t,mx,my,mz\n0,0,0,0\n1,0,0,1\n");

    ChopTrace trace;
    trace.times = {0};
    trace.absorbed = {2};
    trace.f3_population = {1};
    std::ostringstream b;
    csv::write_chop_trace(b, trace);
    CHECK(b.str() == "t,absorbed,f3\n0,2,1\n");

    AbsorptionCurve c;
    c.pump_rates = {0, 1};
    c.delta_i = {0, 2};
    c.normalized = true;
    c.normalized_delta_i = {0, 0.5};
    AbsorptionCurve nz = c;
    nz.delta_i = {0, 3};
    nz.normalized_delta_i = {0, 0.75};
    std::ostringstream d;
    csv::write_curve(d, c, &nz);
    CHECK(d.str() ==
          "pump_rate,delta_i,normalized_delta_i,delta_i_no_zeno,normalized_delta_i_no_zeno\n"
          "0,0,0,0,0\n1,2,0.5,3,0.75\n");
    nz.pump_rates = {0, 2};
    std::ostringstream e;
    CHECK_THROWS_AS(csv::write_curve(e, c, &nz), ConfigError);
  }
}
