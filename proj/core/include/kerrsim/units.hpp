#pragma once

#include <numbers>

// Everything inside the library is SI. These factors convert from the units
// used in config files and CSV headers.
namespace kerrsim::units {

inline constexpr double speed_of_light = 299'792'458.0;  // m/s

inline constexpr double nm = 1e-9;
inline constexpr double um = 1e-6;
inline constexpr double fs = 1e-15;
inline constexpr double ps = 1e-12;
inline constexpr double nJ = 1e-9;

constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

}  // namespace kerrsim::units
