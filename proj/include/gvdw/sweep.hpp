#pragma once

#include <string>
#include <vector>

#include "gvdw/lifshitz.hpp"

namespace gvdw {

struct CurvePoint {
  double a_nm;
  double c3_au;
  double energy_eV;
  double est_rel_error;
  bool converged = true;
};

struct C3Curve {
  std::string atom;
  GrapheneModel model;
  double temperature_K = 0.0;
  QuadratureConfig quad{};
  std::vector<CurvePoint> points;

  std::string model_name() const { return model_label(model); }
};

struct GapSweepPoint {
  double delta_eV;
  double c3_au;
};

struct GapSweep {
  std::string atom;
  double a_nm;
  std::vector<GapSweepPoint> points;    // ordered by delta
  double spread = 0.0;                  // (C3_max - C3_min) / C3_min
  double plateau_delta_eV = 0.0;        // largest grid delta with < threshold
                                        // change per decade below it (NaN if none)
  double plateau_threshold = 0.01;      // recorded in output metadata
};

struct RatioRow {
  double a_nm;
  double c3_a_au;  // first model
  double c3_b_au;  // second model
  double ratio;    // c3_a / c3_b
};

struct RatioTable {
  std::string atom;
  std::string model_a;
  std::string model_b;
  std::vector<RatioRow> rows;
};

// The six separations the reference tables quote.
const std::vector<double>& reference_separations();
// 40 log-spaced points in [3, 100] nm merged with the reference separations.
std::vector<double> default_separation_grid();
// 50 log-spaced points in [3, 100] nm used by the potential fit.
std::vector<double> fit_separation_grid();
// Decade points 1e-15..1e-1 eV refined to 4 points/decade in [1e-4, 1e-1].
std::vector<double> default_delta_grid();

// One evaluation per grid point, concurrently (`jobs` <= 0: hardware
// parallelism). Non-converged points are flagged, never dropped.
C3Curve sweep_separation(const AtomSpec& atom, const GrapheneModel& model,
                         const std::vector<double>& grid_nm,
                         double temperature_K = 0.0,
                         const QuadratureConfig& quad = {}, int jobs = 0);

// Dirac C3 at fixed separation across a gap grid, plus spread and plateau.
GapSweep sweep_gap(const AtomSpec& atom, double a_nm,
                   const std::vector<double>& delta_grid_eV,
                   const QuadratureConfig& quad = {}, int jobs = 0,
                   double plateau_threshold = 0.01);

RatioTable model_ratio_table(const AtomSpec& atom, const GrapheneModel& model_a,
                             const GrapheneModel& model_b,
                             const std::vector<double>& grid_nm,
                             const QuadratureConfig& quad = {}, int jobs = 0);
// Hydrodynamic over Dirac(delta) on the given grid.
RatioTable model_ratio_table(const AtomSpec& atom, double delta_eV,
                             const std::vector<double>& grid_nm,
                             const QuadratureConfig& quad = {}, int jobs = 0);

double species_ratio(const AtomSpec& numerator, const AtomSpec& denominator,
                     const GrapheneModel& model, double a_nm,
                     const QuadratureConfig& quad = {});

}  // namespace gvdw
