#pragma once

#include <cmath>
#include <numbers>

namespace biolink::units {

inline constexpr double kMu0 = 4.0e-7 * std::numbers::pi;  // H/m
inline constexpr double kBoltzmann = 1.380649e-23;         // J/K

inline double to_db(double ratio) { return 10.0 * std::log10(ratio); }
inline double from_db(double db) { return std::pow(10.0, db / 10.0); }
inline double watts_to_dbm(double w) { return to_db(w) + 30.0; }
inline double watts_to_dbw(double w) { return to_db(w); }
inline double dbm_to_watts(double dbm) { return from_db(dbm - 30.0); }

}  // namespace biolink::units
