#include "zeno/units.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <string>
#include <utility>

#include "zeno/errors.hpp"

namespace zeno::units {
namespace {

struct Suffix {
  std::string_view name;
  double factor;
};

constexpr double kMicro = 1e-6;

constexpr std::array kAngularRate{
    Suffix{"rad/s", 1.0},          Suffix{"krad/s", 1e3},
    Suffix{"Mrad/s", 1e6},         Suffix{"/s", 1.0},
    Suffix{"1/s", 1.0},            Suffix{"s^-1", 1.0},
    Suffix{"Hz", kTwoPi},          Suffix{"kHz", kTwoPi * 1e3},
    Suffix{"MHz", kTwoPi * 1e6},
};
constexpr std::array kFrequency{Suffix{"Hz", 1.0}, Suffix{"kHz", 1e3},
                                Suffix{"MHz", 1e6}};
constexpr std::array kMagneticField{Suffix{"T", 1.0}, Suffix{"mT", 1e-3},
                                    Suffix{"uT", kMicro}, Suffix{"nT", 1e-9},
                                    Suffix{"G", 1e-4}, Suffix{"mG", 1e-7}};
constexpr std::array kGyromagnetic{
    Suffix{"rad/s/T", 1.0},          Suffix{"Hz/T", kTwoPi},
    Suffix{"kHz/T", kTwoPi * 1e3},   Suffix{"MHz/T", kTwoPi * 1e6},
    Suffix{"GHz/T", kTwoPi * 1e9},   Suffix{"Hz/uT", kTwoPi / kMicro},
    Suffix{"kHz/uT", kTwoPi * 1e3 / kMicro},
    Suffix{"Hz/G", kTwoPi / 1e-4},   Suffix{"kHz/G", kTwoPi * 1e3 / 1e-4},
    Suffix{"MHz/G", kTwoPi * 1e6 / 1e-4},
};
constexpr std::array kPower{Suffix{"W", 1.0}, Suffix{"mW", 1e-3},
                            Suffix{"uW", kMicro}, Suffix{"nW", 1e-9}};
constexpr std::array kArea{Suffix{"m2", 1.0}, Suffix{"cm2", 1e-4},
                           Suffix{"mm2", 1e-6}, Suffix{"m^2", 1.0},
                           Suffix{"cm^2", 1e-4}, Suffix{"mm^2", 1e-6}};
constexpr std::array kLength{Suffix{"m", 1.0}, Suffix{"cm", 1e-2},
                             Suffix{"mm", 1e-3}, Suffix{"um", kMicro},
                             Suffix{"nm", 1e-9}};
constexpr std::array kIntensity{
    Suffix{"W/m2", 1.0},     Suffix{"W/cm2", 1e4},  Suffix{"mW/cm2", 10.0},
    Suffix{"mW/mm2", 1e3},   Suffix{"W/m^2", 1.0},  Suffix{"mW/cm^2", 10.0},
};
constexpr std::array kEnergy{Suffix{"J", 1.0}, Suffix{"eV", kElectronVolt}};
constexpr std::array kNumberDensity{
    Suffix{"/m3", 1.0}, Suffix{"m^-3", 1.0}, Suffix{"/cm3", 1e6},
    Suffix{"cm^-3", 1e6}};
constexpr std::array kTime{Suffix{"s", 1.0}, Suffix{"ms", 1e-3},
                           Suffix{"us", kMicro}, Suffix{"ns", 1e-9}};
constexpr std::array kRateSlope{Suffix{"m2/J", 1.0}, Suffix{"cm2/J", 1e-4},
                                Suffix{"m^2/J", 1.0}};
constexpr std::array kAreaDensity{Suffix{"J/m2", 1.0}, Suffix{"J/m^2", 1.0},
                                  Suffix{"J/cm2", 1e4}};
constexpr std::array<Suffix, 0> kNone{};

template <std::size_t N>
bool lookup(const std::array<Suffix, N>& table, std::string_view name,
            double& factor) {
  for (const auto& s : table) {
    if (s.name == name) {
      factor = s.factor;
      return true;
    }
  }
  return false;
}

bool factor_for(Dimension dim, std::string_view suffix, double& factor) {
  switch (dim) {
    case Dimension::kAngularRate: return lookup(kAngularRate, suffix, factor);
    case Dimension::kFrequency: return lookup(kFrequency, suffix, factor);
    case Dimension::kMagneticField: return lookup(kMagneticField, suffix, factor);
    case Dimension::kGyromagnetic: return lookup(kGyromagnetic, suffix, factor);
    case Dimension::kPower: return lookup(kPower, suffix, factor);
    case Dimension::kArea: return lookup(kArea, suffix, factor);
    case Dimension::kLength: return lookup(kLength, suffix, factor);
    case Dimension::kIntensity: return lookup(kIntensity, suffix, factor);
    case Dimension::kEnergy: return lookup(kEnergy, suffix, factor);
    case Dimension::kNumberDensity: return lookup(kNumberDensity, suffix, factor);
    case Dimension::kTime: return lookup(kTime, suffix, factor);
    case Dimension::kRateSlope: return lookup(kRateSlope, suffix, factor);
    case Dimension::kAreaDensity: return lookup(kAreaDensity, suffix, factor);
    case Dimension::kDimensionless: return lookup(kNone, suffix, factor);
  }
  return false;
}

// Accept the micro sign and Greek mu as "u".
std::string normalize_micro(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.substr(i, 2) == "\xC2\xB5" || s.substr(i, 2) == "\xCE\xBC") {
      out.push_back('u');
      ++i;
    } else {
      out.push_back(s[i]);
    }
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

double parse_quantity(std::string_view text, Dimension dim) {
  const std::string normalized = normalize_micro(trim(text));
  std::string_view s = normalized;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);

  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr == s.data()) {
    throw ConfigError("cannot parse quantity '" + std::string(text) + "'");
  }
  const std::string_view suffix = trim(std::string_view(ptr, s.data() + s.size() - ptr));
  if (!std::isfinite(value)) {
    throw ConfigError("non-finite quantity '" + std::string(text) + "'");
  }
  if (suffix.empty()) return value;

  double factor = 1.0;
  if (!factor_for(dim, suffix, factor)) {
    throw ConfigError("unrecognized unit '" + std::string(suffix) + "' in '" +
                      std::string(text) + "' (expected " +
                      std::string(canonical_unit(dim)) + "-compatible unit)");
  }
  return value * factor;
}

std::string_view canonical_unit(Dimension dim) {
  switch (dim) {
    case Dimension::kAngularRate: return "rad/s";
    case Dimension::kFrequency: return "Hz";
    case Dimension::kMagneticField: return "T";
    case Dimension::kGyromagnetic: return "rad/s/T";
    case Dimension::kPower: return "W";
    case Dimension::kArea: return "m2";
    case Dimension::kLength: return "m";
    case Dimension::kIntensity: return "W/m2";
    case Dimension::kEnergy: return "J";
    case Dimension::kNumberDensity: return "/m3";
    case Dimension::kTime: return "s";
    case Dimension::kRateSlope: return "m2/J";
    case Dimension::kAreaDensity: return "J/m2";
    case Dimension::kDimensionless: return "1";
  }
  return "";
}

}  // namespace zeno::units
