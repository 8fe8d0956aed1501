#include "gvdw/units.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gvdw/errors.hpp"

namespace gvdw {

const Constants& constants() {
  static const Constants k{};
  return k;
}

const UnitSystem& units() {
  static const UnitSystem u{};
  return u;
}

namespace {
double conversion_factor(Quantity kind) {
  const UnitSystem& u = units();
  switch (kind) {
    case Quantity::C3:
      return u.c3_au_in_eV_nm3;
    case Quantity::C4:
      return u.c4_au_in_eV_nm4;
    case Quantity::Polarizability:
      return u.polarizability_au_in_m3;
  }
  throw validation_error("to_atomic_units: unknown quantity kind");
}
}  // namespace

double to_atomic_units(double value, Quantity kind) {
  if (!std::isfinite(value))
    throw validation_error("to_atomic_units: value must be finite");
  return value / conversion_factor(kind);
}

double from_atomic_units(double value_au, Quantity kind) {
  if (!std::isfinite(value_au))
    throw validation_error("from_atomic_units: value must be finite");
  return value_au * conversion_factor(kind);
}

double matsubara_frequency(int l, double temperature_K) {
  if (!(temperature_K > 0.0))
    throw std::domain_error("matsubara_frequency: temperature must be > 0");
  if (l < 0) throw std::domain_error("matsubara_frequency: l must be >= 0");
  const Constants& k = constants();
  return 2.0 * std::numbers::pi * k.kB * temperature_K / k.hbar *
         static_cast<double>(l);
}

}  // namespace gvdw
