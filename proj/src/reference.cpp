#include "gvdw/reference.hpp"

namespace gvdw::reference {

const std::vector<RatioTableRef>& ratio_tables() {
  static const std::vector<RatioTableRef> tables{
      {"H", {1.065, 1.19, 1.44, 1.85, 2.85, 4.21}},
      {"H2", {1.045, 1.18, 1.45, 1.89, 3.00, 4.63}},
      {"He*", {1.33, 1.47, 1.76, 2.23, 3.33, 4.78}},
      {"Na", {1.40, 1.55, 1.87, 2.39, 3.61, 5.29}},
  };
  return tables;
}

const ThermalRef& thermal_check() {
  static const ThermalRef ref{};
  return ref;
}

const std::vector<FitRef>& fits() {
  static const std::vector<FitRef> refs{
      {"He*", "hydrodynamic", 0.0, 85.11, 72.77},
      {"He*", "dirac", 0.1, 12.59, 11.18},
      {"Na", "hydrodynamic", 0.0, 50.82, 66.92},
      {"Na", "dirac", 0.1, 7.11, 9.77},
      {"He*", "dirac", 1e-15, 18.04, 18.22},
      {"Na", "dirac", 1e-15, 9.74, 15.45},
  };
  return refs;
}

const std::vector<FitWindowRef>& fit_windows() {
  // hydro fits: <1% inside [10, 60] nm, ~10% +-3 pp at both ends;
  // dirac(0.1 eV) fits: <1% inside [6, 100] nm, 5-5.7% +-2 pp at 3 nm.
  static const std::vector<FitWindowRef> refs{
      {"He*", "hydrodynamic", 0.0, 10.0, 60.0, 7.0, 13.0, true, 7.0, 13.0},
      {"Na", "hydrodynamic", 0.0, 10.0, 60.0, 7.0, 13.0, true, 7.0, 13.0},
      {"He*", "dirac", 0.1, 6.0, 100.0, 3.0, 7.7, false, 0.0, 0.0},
      {"Na", "dirac", 0.1, 6.0, 100.0, 3.0, 7.7, false, 0.0, 0.0},
  };
  return refs;
}

const std::vector<SpreadRef>& gap_spreads() {
  // +-2 pp below 20%, +-3 pp above.
  static const std::vector<SpreadRef> refs{
      {"H", 5, 6.6, 2.0},    {"H", 50, 16.4, 2.0},   {"H", 100, 31.3, 3.0},
      {"He*", 5, 3.7, 2.0},  {"He*", 50, 28.0, 3.0}, {"He*", 100, 46.0, 3.0},
      {"Na", 5, 3.2, 2.0},   {"Na", 50, 25.6, 3.0},  {"Na", 100, 42.0, 3.0},
  };
  return refs;
}

const std::vector<PlateauRef>& plateaus() {
  static const std::vector<PlateauRef> refs{
      {5, 0.01}, {50, 0.004}, {100, 0.001}};
  return refs;
}

const std::vector<SpeciesRatioRef>& species_ratios() {
  static const std::vector<SpeciesRatioRef> refs{
      {"He*", "H", "dirac", 0.1, 3, 18.0},
      {"He*", "H", "dirac", 0.1, 100, 46.0},
      {"He*", "H", "hydrodynamic", 0.0, 3, 23.0},
      {"He*", "H", "hydrodynamic", 0.0, 100, 52.0},
      {"Na", "H", "dirac", 0.1, 3, 11.6},
      {"Na", "H", "dirac", 0.1, 100, 26.0},
      {"Na", "H", "hydrodynamic", 0.0, 3, 15.0},
      {"Na", "H", "hydrodynamic", 0.0, 100, 33.0},
  };
  return refs;
}

}  // namespace gvdw::reference
