#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "gvdw/potential_fit.hpp"
#include "gvdw/sweep.hpp"

#include <nlohmann/json_fwd.hpp>

namespace gvdw {

// 17 significant digits: round-trips any double exactly.
std::string format_g17(double v);

// Provenance block stamped into every artifact (no timestamps: outputs must
// be byte-identical across runs).
nlohmann::json provenance_json(const std::string& atom,
                               const GrapheneModel& model,
                               double temperature_K,
                               const QuadratureConfig& quad);

// CSV: '#'-prefixed provenance lines, then `a_nm,c3_au,energy_eV,rel_err`.
void write_curve_csv(std::ostream& os, const C3Curve& curve);
void write_curve_csv(const std::filesystem::path& path, const C3Curve& curve);
// Reads the numeric records back (provenance comments are skipped).
std::vector<CurvePoint> read_curve_csv(std::istream& is);
std::vector<CurvePoint> read_curve_csv(const std::filesystem::path& path);

void write_gap_sweep_csv(std::ostream& os, const GapSweep& sweep,
                         const QuadratureConfig& quad);
void write_ratio_table_csv(std::ostream& os, const RatioTable& table,
                           const QuadratureConfig& quad);

nlohmann::json curve_to_json(const C3Curve& curve);
C3Curve curve_from_json(const nlohmann::json& j);
nlohmann::json gap_sweep_to_json(const GapSweep& sweep,
                                 const QuadratureConfig& quad);
nlohmann::json ratio_table_to_json(const RatioTable& table,
                                   const QuadratureConfig& quad);
nlohmann::json fit_report_to_json(const FitReport& report,
                                  const C3Curve& curve);

void write_json(const std::filesystem::path& path, const nlohmann::json& j);

// Two-column plot data (`fig<N>_<series>.dat`), with '#' provenance lines.
void write_xy_dat(const std::filesystem::path& path,
                  const std::vector<double>& x, const std::vector<double>& y,
                  const std::string& comment);

}  // namespace gvdw
