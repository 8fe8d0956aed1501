#pragma once

// Independent cross-check implementations used by the unit and acceptance
// suites.  These deliberately avoid the adaptive quadrature and the Brent
// fitter from the library so that agreement between the two is meaningful.

#include "gvdw/atoms.hpp"
#include "gvdw/graphene.hpp"
#include "gvdw/lifshitz.hpp"
#include "gvdw/potential_fit.hpp"

#include <cstddef>
#include <vector>

namespace gvdw::oracle {

// Zero-temperature C3 (atomic units) via a tensor-product trapezoid rule on
// the (y, t) rectangle [0, y_max] x [0, 1] with two levels of Richardson
// extrapolation (grids n, 2n, 4n in each direction).
double c3_tensor_trapezoid(const AtomSpec& atom, const GrapheneModel& model,
                           double separation_nm, double y_max = 60.0,
                           std::size_t base_n = 256);

// Dirac polarization function evaluated in long double straight from the
// closed form, with no series branch and no small-x switch.
long double phi_direct_ld(long double q_tilde_per_nm,
                          const DiracParams& params);

// 2-D Levenberg-Marquardt fit of E = -C4 / (a^3 (a + l)) to a C3 curve,
// minimising the same residuals C4*g_i - 1 as the library but through damped
// normal equations instead of profiling + Brent.
PhenomenologicalPotential lm_fit(const std::vector<double>& a_nm,
                                 const std::vector<double>& c3_au,
                                 double c4_start, double l_start);

}  // namespace gvdw::oracle
