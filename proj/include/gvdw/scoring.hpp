#pragma once

#include <vector>

#include "gvdw/atoms.hpp"
#include "gvdw/potential_fit.hpp"
#include "gvdw/reference.hpp"
#include "gvdw/sweep.hpp"

// Recomputes every embedded reference quantity with the library and scores it
// against the stored tolerance. Shared by `gvdw reproduce` and the acceptance
// binary so both always agree.
namespace gvdw::reference {

struct ScoreContext {
  AtomCatalog catalog = AtomCatalog::builtins();
  QuadratureConfig quad{};
  int jobs = 0;
};

struct RatioScores {
  std::vector<RatioTable> tables;       // one per ratio_tables() entry
  std::vector<Comparison> comparisons;  // six per table
};
RatioScores score_ratio_tables(const ScoreContext& ctx);

struct ThermalScores {
  double c3_T0_au = 0.0;
  double c3_T_au = 0.0;
  double rel_diff_pct = 0.0;
  std::vector<Comparison> comparisons;  // both values and the difference
};
ThermalScores score_thermal(const ScoreContext& ctx);

struct FitScores {
  struct Entry {
    FitRef ref;
    C3Curve curve;
    FitReport report;
  };
  std::vector<Entry> entries;                     // one per fits() entry
  std::vector<Comparison> parameter_comparisons;  // C4 and l per fit
  std::vector<Comparison> window_comparisons;     // deviation-profile checks
};
FitScores score_fits(const ScoreContext& ctx);

struct GapScores {
  std::vector<GapSweep> sweeps;  // H/He*/Na at a = 5, 50, 100 nm
  std::vector<Comparison> spread_comparisons;
  std::vector<Comparison> plateau_comparisons;  // two-sided checks, H only
};
GapScores score_gap_sweeps(const ScoreContext& ctx);

std::vector<Comparison> score_species_ratios(const ScoreContext& ctx);

}  // namespace gvdw::reference
