#pragma once

namespace gvdw {

// Internal unit system: energies in eV, lengths in nm, times in s (so
// frequencies are rad/s, wave numbers 1/nm). Atomic units appear only at the
// I/O boundary via UnitSystem.
struct Constants {
  double hbar_c = 197.3269804;     // eV nm  (CODATA)
  double c = 2.99792458e17;        // nm / s (exact)
  double kB = 8.617333262e-5;      // eV / K (CODATA)
  double hbar = hbar_c / c;        // eV s, derived so hbar*c == hbar_c exactly
  double fine_structure = 7.2973525693e-3;
};

const Constants& constants();

struct UnitSystem {
  double c3_au_in_eV_nm3 = 4.032e-3;          // 1 a.u. of C3
  double c4_au_in_eV_nm4 = 4.032e-3;          // 1 a.u. of C4
  double polarizability_au_in_m3 = 1.482e-31; // 1 a.u. of polarizability

  double polarizability_au_in_nm3() const {
    return polarizability_au_in_m3 * 1e27;
  }
};

const UnitSystem& units();

enum class Quantity { C3, C4, Polarizability };

// `value` is in eV·nm^3 for C3, eV·nm^4 for C4, and m^3 for polarizability.
double to_atomic_units(double value, Quantity kind);
double from_atomic_units(double value_au, Quantity kind);

// xi_l = 2 pi kB T l / hbar, in rad/s. l >= 0, T > 0.
double matsubara_frequency(int l, double temperature_K);

}  // namespace gvdw
