#pragma once

#include <string>
#include <variant>
#include <vector>

#include "gvdw/atoms.hpp"
#include "gvdw/graphene.hpp"
#include "gvdw/quadrature.hpp"

namespace gvdw {

using GrapheneModel = std::variant<HydrodynamicParams, DiracParams>;

std::string model_label(const GrapheneModel& model);
bool is_dirac(const GrapheneModel& model);

// Validity window of the sheet boundary-condition description; evaluations
// outside it succeed but carry a warning.
inline constexpr double kMinValidSeparation_nm = 3.0;
inline constexpr double kMaxValidSeparation_nm = 1000.0;

struct LifshitzRequest {
  AtomSpec atom;
  GrapheneModel model;
  double a_nm = 10.0;
  double temperature_K = 0.0;  // 0 selects the zero-temperature integral
  QuadratureConfig quad{};
};

struct C3Result {
  double c3_au = 0.0;
  double energy_eV = 0.0;
  double est_rel_error = 0.0;
  bool converged = true;
  bool matsubara_cutoff_met = true;  // false if the thermal sum hit the term cap
  std::string atom;
  std::string model;
  double temperature_K = 0.0;
  std::vector<std::string> warnings;
};

// C3(a) at T = 0:
//   C3 = hbar/(16 pi) Int_0^inf dy e^-y Int_0^{cy/2a} dxi alpha(i xi)
//        { 2 y^2 r_TM - (4 a^2 xi^2 / c^2)(r_TM + r_TE) },
// evaluated with xi = (cy/2a) t, t in [0,1]. Throws convergence_error (with
// the best estimate) if the panel budget is exhausted.
C3Result c3_zero_temperature(const LifshitzRequest& req);

// Thermal Matsubara form: the frequency integral of the T = 0 formula is
// replaced by kB T Sum'_l at xi_l = 2 pi kB T l / hbar (l = 0 at half
// weight), i.e.
//   C3(a,T) = (kB T / 8) Sum'_l alpha(i xi_l)
//             Int_{y_l}^inf dy e^-y { 2 y^2 r_TM - y_l^2 (r_TM + r_TE) },
// with y_l = 2 a xi_l / c.
C3Result c3_thermal(const LifshitzRequest& req);

// Dispatches on temperature_K == 0.
C3Result evaluate(const LifshitzRequest& req);

// E(a) = -C3/a^3 with C3 in a.u.: returns eV.
double energy_eV_from_c3(double c3_au, double a_nm);

}  // namespace gvdw
