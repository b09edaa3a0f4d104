#pragma once

namespace solarsim {

/// Physical constants, SI units.
struct PhysicalConstants {
  double qe = 1.602176634e-19;     // elementary charge [C]
  double kB = 1.380649e-23;        // Boltzmann constant [J/K]
  double eps0 = 8.8541878128e-12;  // vacuum permittivity [F/m]
  double mu0 = 1.25663706212e-6;   // vacuum permeability [H/m]
  double eta0 = 376.730313668;     // impedance of free space [ohm], sqrt(mu0/eps0)
  double hbar = 1.054571817e-34;   // reduced Planck constant [J s]
  double c0 = 2.99792458e8;        // speed of light [m/s], 1/sqrt(mu0 eps0)

  /// Thermal voltage kB*T/qe [V].
  constexpr double vth(double T = 300.0) const { return kB * T / qe; }
};

inline constexpr PhysicalConstants phys{};

inline constexpr double pi = 3.14159265358979323846;

}  // namespace solarsim
