#pragma once

#include <vector>

#include "gvdw/sweep.hpp"

namespace gvdw {

// E(a) = -C4 / (a^3 (a + l)); bridges -C3/a^3 (a << l, C3 = C4/l) and the
// retarded -C4/a^4 (a >> l).
struct PhenomenologicalPotential {
  double C4_au;
  double l_nm;
};

double potential_energy_eV(const PhenomenologicalPotential& p, double a_nm);
// Effective C3(a) = C4 / (a + l), in a.u.
double potential_c3_au(const PhenomenologicalPotential& p, double a_nm);

struct FitReport {
  PhenomenologicalPotential potential{0.0, 0.0};
  std::vector<double> grid_nm;
  std::vector<double> residuals;    // signed E_ph/E - 1 per grid point
  double max_rel_deviation_pct = 0.0;
  double sub_1pct_lo_nm = 0.0;      // longest contiguous |residual| < 1% run
  double sub_1pct_hi_nm = 0.0;      // (NaN pair when no point qualifies)
  double objective = 0.0;           // sum of squared residuals at the optimum
};

// Least squares on relative residuals sum_i (E_ph(a_i)/E(a_i) - 1)^2.
// For fixed l the optimal C4 is closed-form; the search is a bounded 1-D
// minimization over l in [0.1, 1000] nm. The curve must have >= 10 points,
// cover [3, 100] nm and have strictly negative energies.
FitReport fit_potential(const C3Curve& curve);

// Residual diagnostics of a given potential against a curve.
FitReport deviation_profile(const PhenomenologicalPotential& p,
                            const C3Curve& curve);

}  // namespace gvdw
