#pragma once

#include <numbers>

namespace squeezeslab::constants {

// CODATA 2018 exact / recommended values, SI units.
inline constexpr double c = 299792458.0;             // m/s
inline constexpr double hbar = 1.054571817e-34;      // J s
inline constexpr double k_B = 1.380649e-23;          // J/K
inline constexpr double epsilon0 = 8.8541878128e-12; // F/m

inline constexpr double pi = std::numbers::pi;

}  // namespace squeezeslab::constants

namespace squeezeslab {

/// Vacuum wavelength (m) to angular frequency (rad/s).
inline constexpr double angular_frequency(double wavelength) {
  return 2.0 * constants::pi * constants::c / wavelength;
}

inline constexpr double vacuum_wavelength(double omega) {
  return 2.0 * constants::pi * constants::c / omega;
}

}  // namespace squeezeslab
