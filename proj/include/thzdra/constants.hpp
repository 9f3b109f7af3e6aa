// Physical constants (CODATA 2018) and the sign conventions used throughout.
//
// Conventions, fixed once here:
//   * Time dependence is e^{+j omega t}.  Consequences:
//       - passive dielectrics have Im(eps_r) <= 0,
//       - passive sheets have Re(sigma) >= 0,
//       - a forward wave decaying in +x is exp(-j beta x - alpha x), so the
//         complex effective index is n_eff = beta/k0 - j alpha/k0 and lossy
//         guided modes carry Im(n_eff) <= 0.
//   * Transverse decay constants gamma = k0 sqrt(n_eff^2 - eps_r) use the
//     principal square root, Re(gamma) >= 0.  A bound mode must have
//     Re(gamma) > 0 in both semi-infinite claddings.
//   * All internal quantities are SI.  eV / ps / THz / um appear only at the
//     interface layer (units.hpp, CLI).

#pragma once

#include <complex>

namespace thzdra {

using Complex = std::complex<double>;

inline constexpr Complex j_unit{0.0, 1.0};

namespace phys {

inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double hbar = 1.054571817e-34;               // J s
inline constexpr double boltzmann = 1.380649e-23;             // J/K
inline constexpr double vacuum_permittivity = 8.8541878128e-12;  // F/m
inline constexpr double light_speed = 299792458.0;               // m/s

// eta0 = 1/(eps0 c), kept consistent with the two constants above.
inline constexpr double free_space_impedance =
    1.0 / (vacuum_permittivity * light_speed);  // Ohm

inline constexpr double electron_volt = elementary_charge;  // J per eV

}  // namespace phys

}  // namespace thzdra
