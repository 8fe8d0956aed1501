#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "gvdw/atoms.hpp"
#include "gvdw/errors.hpp"
#include "gvdw/graphene.hpp"
#include "gvdw/lifshitz.hpp"
#include "gvdw/potential_fit.hpp"
#include "gvdw/sweep.hpp"
#include "gvdw/units.hpp"

namespace py = pybind11;
using namespace gvdw;

PYBIND11_MODULE(_gvdw, m) {
  m.doc() = "van der Waals / Casimir-Polder coefficients for atoms above "
            "graphene (hydrodynamic and Dirac reflection models)";
  m.attr("__version__") = GVDW_VERSION;

  py::register_exception<validation_error>(m, "ValidationError",
                                           PyExc_ValueError);
  py::register_exception<not_found_error>(m, "NotFoundError", PyExc_KeyError);
  py::register_exception<convergence_error>(m, "ConvergenceError",
                                            PyExc_RuntimeError);

  // units
  py::class_<Constants>(m, "Constants")
      .def_readonly("hbar_c", &Constants::hbar_c)
      .def_readonly("c", &Constants::c)
      .def_readonly("kB", &Constants::kB)
      .def_readonly("hbar", &Constants::hbar)
      .def_readonly("fine_structure", &Constants::fine_structure);
  m.def("constants", &constants, py::return_value_policy::reference);

  py::enum_<Quantity>(m, "Quantity")
      .value("C3", Quantity::C3)
      .value("C4", Quantity::C4)
      .value("Polarizability", Quantity::Polarizability);
  m.def("to_atomic_units", &to_atomic_units, py::arg("value"), py::arg("kind"));
  m.def("from_atomic_units", &from_atomic_units, py::arg("value_au"),
        py::arg("kind"));
  m.def("matsubara_frequency", &matsubara_frequency, py::arg("l"),
        py::arg("temperature_K"));

  // atoms
  py::class_<AtomSpec>(m, "AtomSpec")
      .def(py::init([](std::string name, double alpha0_au, double omega0_eV) {
             return AtomSpec{std::move(name), alpha0_au, omega0_eV};
           }),
           py::arg("name"), py::arg("alpha0_au"), py::arg("omega0_eV"))
      .def_readwrite("name", &AtomSpec::name)
      .def_readwrite("alpha0_au", &AtomSpec::alpha0_au)
      .def_readwrite("omega0_eV", &AtomSpec::omega0_eV)
      .def("omega0_rad_s", &AtomSpec::omega0_rad_s)
      .def("__repr__", [](const AtomSpec& a) {
        return "AtomSpec(name='" + a.name +
               "', alpha0_au=" + std::to_string(a.alpha0_au) +
               ", omega0_eV=" + std::to_string(a.omega0_eV) + ")";
      });

  py::class_<AtomCatalog>(m, "AtomCatalog")
      .def_static("builtins", &AtomCatalog::builtins)
      .def_static("load", &AtomCatalog::load, py::arg("config"))
      .def("lookup", &AtomCatalog::lookup, py::arg("name"),
           py::return_value_policy::copy)
      .def("contains", &AtomCatalog::contains, py::arg("name"))
      .def("add", &AtomCatalog::add, py::arg("spec"))
      .def("names", &AtomCatalog::names)
      .def("entries", &AtomCatalog::entries, py::return_value_policy::copy);

  m.def("polarizability", &polarizability, py::arg("atom"), py::arg("xi_rad_s"),
        "alpha(i xi) in nm^3");
  m.def("polarizability_au", &polarizability_au, py::arg("atom"),
        py::arg("xi_rad_s"));

  // graphene models and reflection coefficients
  py::class_<HydrodynamicParams>(m, "HydrodynamicParams")
      .def(py::init<>())
      .def(py::init([](double K_per_m) { return HydrodynamicParams{K_per_m}; }),
           py::arg("K_per_m"))
      .def_readwrite("K_per_m", &HydrodynamicParams::K_per_m)
      .def("K_per_nm", &HydrodynamicParams::K_per_nm)
      .def("__repr__", [](const HydrodynamicParams& h) {
        return "HydrodynamicParams(K_per_m=" + std::to_string(h.K_per_m) + ")";
      });

  py::class_<DiracParams>(m, "DiracParams")
      .def(py::init<>())
      .def(py::init([](double Delta_eV, double v_F_m_s, int N) {
             DiracParams d;
             d.Delta_eV = Delta_eV;
             d.v_F_m_s = v_F_m_s;
             d.N = N;
             return d;
           }),
           py::arg("Delta_eV") = 0.1, py::arg("v_F_m_s") = 1e6,
           py::arg("N") = 8)
      .def_readwrite("Delta_eV", &DiracParams::Delta_eV)
      .def_readwrite("v_F_m_s", &DiracParams::v_F_m_s)
      .def_readwrite("N", &DiracParams::N)
      .def_readonly("delta_bound", &DiracParams::delta_bound)
      .def("beta", &DiracParams::beta)
      .def("delta_tilde_per_nm", &DiracParams::delta_tilde_per_nm)
      .def("__repr__", [](const DiracParams& d) {
        return "DiracParams(Delta_eV=" + std::to_string(d.Delta_eV) + ")";
      });

  py::class_<ReflectionPair>(m, "ReflectionPair")
      .def_readonly("r_tm", &ReflectionPair::r_tm)
      .def_readonly("r_te", &ReflectionPair::r_te)
      .def_readonly("boundary", &ReflectionPair::boundary);

  py::class_<Kinematics>(m, "Kinematics")
      .def(py::init([](double xi_rad_s, double q_per_nm, double q_tilde_per_nm) {
             return Kinematics{xi_rad_s, q_per_nm, q_tilde_per_nm};
           }),
           py::arg("xi_rad_s"), py::arg("q_per_nm"), py::arg("q_tilde_per_nm"))
      .def_readwrite("xi_rad_s", &Kinematics::xi_rad_s)
      .def_readwrite("q_per_nm", &Kinematics::q_per_nm)
      .def_readwrite("q_tilde_per_nm", &Kinematics::q_tilde_per_nm);

  m.def("phi", &phi, py::arg("q_tilde_per_nm"), py::arg("params"),
        "Polarization function Phi(q~) in 1/nm");
  m.def("reflection_hydrodynamic", &reflection_hydrodynamic, py::arg("kin"),
        py::arg("params"));
  m.def("reflection_dirac", &reflection_dirac, py::arg("kin"),
        py::arg("params"));
  m.def("kinematics_from_y", &kinematics_from_y, py::arg("y"),
        py::arg("xi_rad_s"), py::arg("a_nm"), py::arg("v_F_m_s"));

  // quadrature configuration
  py::class_<QuadratureConfig>(m, "QuadratureConfig")
      .def(py::init<>())
      .def_readwrite("rel_tol", &QuadratureConfig::rel_tol)
      .def_readwrite("inner_rel_tol", &QuadratureConfig::inner_rel_tol)
      .def_readwrite("y_max", &QuadratureConfig::y_max)
      .def_readwrite("max_subdivisions", &QuadratureConfig::max_subdivisions)
      .def_readwrite("matsubara_term_rel_cutoff",
                     &QuadratureConfig::matsubara_term_rel_cutoff)
      .def_readwrite("matsubara_max_terms",
                     &QuadratureConfig::matsubara_max_terms);

  // Lifshitz evaluation
  py::class_<C3Result>(m, "C3Result")
      .def_readonly("c3_au", &C3Result::c3_au)
      .def_readonly("energy_eV", &C3Result::energy_eV)
      .def_readonly("est_rel_error", &C3Result::est_rel_error)
      .def_readonly("converged", &C3Result::converged)
      .def_readonly("matsubara_cutoff_met", &C3Result::matsubara_cutoff_met)
      .def_readonly("atom", &C3Result::atom)
      .def_readonly("model", &C3Result::model)
      .def_readonly("temperature_K", &C3Result::temperature_K)
      .def_readonly("warnings", &C3Result::warnings)
      .def("__repr__", [](const C3Result& r) {
        return "C3Result(c3_au=" + std::to_string(r.c3_au) +
               ", energy_eV=" + std::to_string(r.energy_eV) + ")";
      });

  m.def(
      "evaluate",
      [](const AtomSpec& atom, const GrapheneModel& model, double a_nm,
         double temperature_K, const QuadratureConfig& quad) {
        return evaluate({atom, model, a_nm, temperature_K, quad});
      },
      py::arg("atom"), py::arg("model"), py::arg("a_nm"),
      py::arg("temperature_K") = 0.0, py::arg("quad") = QuadratureConfig{},
      "C3 (a.u.) and E (eV); temperature 0 selects the T=0 integral");
  m.def("model_label", &model_label, py::arg("model"));
  m.def("energy_eV_from_c3", &energy_eV_from_c3, py::arg("c3_au"),
        py::arg("a_nm"));

  // sweeps and tables
  py::class_<CurvePoint>(m, "CurvePoint")
      .def_readonly("a_nm", &CurvePoint::a_nm)
      .def_readonly("c3_au", &CurvePoint::c3_au)
      .def_readonly("energy_eV", &CurvePoint::energy_eV)
      .def_readonly("est_rel_error", &CurvePoint::est_rel_error)
      .def_readonly("converged", &CurvePoint::converged);

  py::class_<C3Curve>(m, "C3Curve")
      .def_readonly("atom", &C3Curve::atom)
      .def_readonly("model", &C3Curve::model)
      .def_readonly("temperature_K", &C3Curve::temperature_K)
      .def_readonly("points", &C3Curve::points)
      .def("model_name", &C3Curve::model_name);

  py::class_<GapSweepPoint>(m, "GapSweepPoint")
      .def_readonly("delta_eV", &GapSweepPoint::delta_eV)
      .def_readonly("c3_au", &GapSweepPoint::c3_au);

  py::class_<GapSweep>(m, "GapSweep")
      .def_readonly("atom", &GapSweep::atom)
      .def_readonly("a_nm", &GapSweep::a_nm)
      .def_readonly("points", &GapSweep::points)
      .def_readonly("spread", &GapSweep::spread)
      .def_readonly("plateau_delta_eV", &GapSweep::plateau_delta_eV)
      .def_readonly("plateau_threshold", &GapSweep::plateau_threshold);

  py::class_<RatioRow>(m, "RatioRow")
      .def_readonly("a_nm", &RatioRow::a_nm)
      .def_readonly("c3_a_au", &RatioRow::c3_a_au)
      .def_readonly("c3_b_au", &RatioRow::c3_b_au)
      .def_readonly("ratio", &RatioRow::ratio);

  py::class_<RatioTable>(m, "RatioTable")
      .def_readonly("atom", &RatioTable::atom)
      .def_readonly("model_a", &RatioTable::model_a)
      .def_readonly("model_b", &RatioTable::model_b)
      .def_readonly("rows", &RatioTable::rows);

  m.def("reference_separations", [] { return reference_separations(); });
  m.def("default_separation_grid", &default_separation_grid);
  m.def("fit_separation_grid", &fit_separation_grid);
  m.def("default_delta_grid", &default_delta_grid);

  m.def("sweep_separation", &sweep_separation, py::arg("atom"),
        py::arg("model"), py::arg("grid_nm"), py::arg("temperature_K") = 0.0,
        py::arg("quad") = QuadratureConfig{}, py::arg("jobs") = 0,
        py::call_guard<py::gil_scoped_release>());
  m.def("sweep_gap", &sweep_gap, py::arg("atom"), py::arg("a_nm"),
        py::arg("delta_grid_eV"), py::arg("quad") = QuadratureConfig{},
        py::arg("jobs") = 0, py::arg("plateau_threshold") = 0.01,
        py::call_guard<py::gil_scoped_release>());
  m.def(
      "model_ratio_table",
      [](const AtomSpec& atom, double delta_eV, const std::vector<double>& grid,
         const QuadratureConfig& quad, int jobs) {
        return model_ratio_table(atom, delta_eV, grid, quad, jobs);
      },
      py::arg("atom"), py::arg("delta_eV"), py::arg("grid_nm"),
      py::arg("quad") = QuadratureConfig{}, py::arg("jobs") = 0,
      py::call_guard<py::gil_scoped_release>());
  m.def("species_ratio", &species_ratio, py::arg("numerator"),
        py::arg("denominator"), py::arg("model"), py::arg("a_nm"),
        py::arg("quad") = QuadratureConfig{},
        py::call_guard<py::gil_scoped_release>());

  // phenomenological potential
  py::class_<PhenomenologicalPotential>(m, "PhenomenologicalPotential")
      .def(py::init([](double C4_au, double l_nm) {
             return PhenomenologicalPotential{C4_au, l_nm};
           }),
           py::arg("C4_au"), py::arg("l_nm"))
      .def_readwrite("C4_au", &PhenomenologicalPotential::C4_au)
      .def_readwrite("l_nm", &PhenomenologicalPotential::l_nm)
      .def("__repr__", [](const PhenomenologicalPotential& p) {
        return "PhenomenologicalPotential(C4_au=" + std::to_string(p.C4_au) +
               ", l_nm=" + std::to_string(p.l_nm) + ")";
      });

  py::class_<FitReport>(m, "FitReport")
      .def_readonly("potential", &FitReport::potential)
      .def_readonly("grid_nm", &FitReport::grid_nm)
      .def_readonly("residuals", &FitReport::residuals)
      .def_readonly("max_rel_deviation_pct", &FitReport::max_rel_deviation_pct)
      .def_readonly("sub_1pct_lo_nm", &FitReport::sub_1pct_lo_nm)
      .def_readonly("sub_1pct_hi_nm", &FitReport::sub_1pct_hi_nm)
      .def_readonly("objective", &FitReport::objective);

  m.def("potential_energy_eV", &potential_energy_eV, py::arg("potential"),
        py::arg("a_nm"));
  m.def("potential_c3_au", &potential_c3_au, py::arg("potential"),
        py::arg("a_nm"));
  m.def("fit_potential", &fit_potential, py::arg("curve"),
        py::call_guard<py::gil_scoped_release>());
  m.def("deviation_profile", &deviation_profile, py::arg("potential"),
        py::arg("curve"));
}
