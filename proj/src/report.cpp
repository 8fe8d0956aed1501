#include "gvdw/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gvdw/errors.hpp"

namespace gvdw {

using nlohmann::json;

namespace {

constexpr const char* kCurveHeader = "a_nm,c3_au,energy_eV,rel_err";

json model_json(const GrapheneModel& model) {
  json j;
  if (const auto* h = std::get_if<HydrodynamicParams>(&model)) {
    j["kind"] = "hydrodynamic";
    j["K_per_m"] = h->K_per_m;
  } else {
    const auto& d = std::get<DiracParams>(model);
    j["kind"] = "dirac";
    j["Delta_eV"] = d.Delta_eV;
    j["v_F_m_s"] = d.v_F_m_s;
    j["N"] = d.N;
  }
  return j;
}

GrapheneModel model_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "hydrodynamic") {
    HydrodynamicParams h;
    h.K_per_m = j.at("K_per_m").get<double>();
    return h;
  }
  if (kind == "dirac") {
    DiracParams d;
    d.Delta_eV = j.at("Delta_eV").get<double>();
    d.v_F_m_s = j.at("v_F_m_s").get<double>();
    d.N = j.at("N").get<int>();
    return d;
  }
  throw validation_error("unknown model kind in JSON: " + kind);
}

json quad_json(const QuadratureConfig& q) {
  return json{{"rel_tol", q.rel_tol},
              {"inner_rel_tol", q.inner_rel_tol},
              {"y_max", q.y_max},
              {"max_subdivisions", q.max_subdivisions},
              {"matsubara_term_rel_cutoff", q.matsubara_term_rel_cutoff},
              {"matsubara_max_terms", q.matsubara_max_terms}};
}

QuadratureConfig quad_from_json(const json& j) {
  QuadratureConfig q;
  q.rel_tol = j.at("rel_tol").get<double>();
  q.inner_rel_tol = j.at("inner_rel_tol").get<double>();
  q.y_max = j.at("y_max").get<double>();
  q.max_subdivisions = j.at("max_subdivisions").get<int>();
  q.matsubara_term_rel_cutoff = j.at("matsubara_term_rel_cutoff").get<double>();
  q.matsubara_max_terms = j.at("matsubara_max_terms").get<int>();
  return q;
}

void write_comment_block(std::ostream& os, const std::string& atom,
                         const std::string& model_label, double temperature_K,
                         const QuadratureConfig& quad) {
  os << "# gvdw " << GVDW_VERSION << "\n";
  os << "# atom=" << atom << "\n";
  os << "# model=" << model_label << "\n";
  os << "# temperature_K=" << format_g17(temperature_K) << "\n";
  os << "# quad.rel_tol=" << format_g17(quad.rel_tol)
     << " quad.inner_rel_tol=" << format_g17(quad.inner_rel_tol)
     << " quad.y_max=" << format_g17(quad.y_max)
     << " quad.max_subdivisions=" << quad.max_subdivisions << "\n";
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream os(path);
  if (!os) throw validation_error("cannot open for writing: " + path.string());
  return os;
}

}  // namespace

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json provenance_json(const std::string& atom, const GrapheneModel& model,
                     double temperature_K, const QuadratureConfig& quad) {
  return json{{"tool", "gvdw"},
              {"version", GVDW_VERSION},
              {"atom", atom},
              {"model", model_json(model)},
              {"model_label", model_label(model)},
              {"temperature_K", temperature_K},
              {"quadrature", quad_json(quad)}};
}

void write_curve_csv(std::ostream& os, const C3Curve& curve) {
  write_comment_block(os, curve.atom, curve.model_name(),
                      curve.temperature_K, curve.quad);
  int flagged = 0;
  for (const auto& p : curve.points) flagged += p.converged ? 0 : 1;
  if (flagged > 0) os << "# non_converged_points=" << flagged << "\n";
  os << kCurveHeader << "\n";
  for (const auto& p : curve.points)
    os << format_g17(p.a_nm) << ',' << format_g17(p.c3_au) << ','
       << format_g17(p.energy_eV) << ',' << format_g17(p.est_rel_error)
       << "\n";
}

void write_curve_csv(const std::filesystem::path& path, const C3Curve& curve) {
  auto os = open_out(path);
  write_curve_csv(os, curve);
}

std::vector<CurvePoint> read_curve_csv(std::istream& is) {
  std::vector<CurvePoint> points;
  std::string line;
  bool header_seen = false;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != kCurveHeader)
        throw validation_error("unexpected CSV header: " + line);
      header_seen = true;
      continue;
    }
    CurvePoint p;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &p.a_nm, &p.c3_au,
                    &p.energy_eV, &p.est_rel_error) != 4)
      throw validation_error("bad CSV record at line " +
                             std::to_string(lineno) + ": " + line);
    points.push_back(p);
  }
  if (!header_seen) throw validation_error("CSV header not found");
  return points;
}

std::vector<CurvePoint> read_curve_csv(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw validation_error("cannot open for reading: " + path.string());
  return read_curve_csv(is);
}

void write_gap_sweep_csv(std::ostream& os, const GapSweep& sweep,
                         const QuadratureConfig& quad) {
  write_comment_block(os, sweep.atom, "dirac(delta swept)", 0.0, quad);
  os << "# a_nm=" << format_g17(sweep.a_nm) << "\n";
  os << "# spread=" << format_g17(sweep.spread) << "\n";
  os << "# plateau_delta_eV=" << format_g17(sweep.plateau_delta_eV)
     << " plateau_threshold=" << format_g17(sweep.plateau_threshold) << "\n";
  os << "delta_eV,c3_au\n";
  for (const auto& p : sweep.points)
    os << format_g17(p.delta_eV) << ',' << format_g17(p.c3_au) << "\n";
}

void write_ratio_table_csv(std::ostream& os, const RatioTable& table,
                           const QuadratureConfig& quad) {
  os << "# gvdw " << GVDW_VERSION << "\n";
  os << "# atom=" << table.atom << "\n";
  os << "# model_a=" << table.model_a << "\n";
  os << "# model_b=" << table.model_b << "\n";
  os << "# quad.rel_tol=" << format_g17(quad.rel_tol)
     << " quad.inner_rel_tol=" << format_g17(quad.inner_rel_tol)
     << " quad.y_max=" << format_g17(quad.y_max)
     << " quad.max_subdivisions=" << quad.max_subdivisions << "\n";
  os << "a_nm,c3_a_au,c3_b_au,ratio\n";
  for (const auto& r : table.rows)
    os << format_g17(r.a_nm) << ',' << format_g17(r.c3_a_au) << ','
       << format_g17(r.c3_b_au) << ',' << format_g17(r.ratio) << "\n";
}

json curve_to_json(const C3Curve& curve) {
  json pts = json::array();
  for (const auto& p : curve.points)
    pts.push_back(json{{"a_nm", p.a_nm},
                       {"c3_au", p.c3_au},
                       {"energy_eV", p.energy_eV},
                       {"rel_err", p.est_rel_error},
                       {"converged", p.converged}});
  return json{{"provenance", provenance_json(curve.atom, curve.model,
                                             curve.temperature_K, curve.quad)},
              {"points", pts}};
}

C3Curve curve_from_json(const json& j) {
  C3Curve curve;
  const json& prov = j.at("provenance");
  curve.atom = prov.at("atom").get<std::string>();
  curve.model = model_from_json(prov.at("model"));
  curve.temperature_K = prov.at("temperature_K").get<double>();
  curve.quad = quad_from_json(prov.at("quadrature"));
  for (const json& p : j.at("points")) {
    CurvePoint cp;
    cp.a_nm = p.at("a_nm").get<double>();
    cp.c3_au = p.at("c3_au").get<double>();
    cp.energy_eV = p.at("energy_eV").get<double>();
    cp.est_rel_error = p.at("rel_err").get<double>();
    cp.converged = p.value("converged", true);
    curve.points.push_back(cp);
  }
  return curve;
}

json gap_sweep_to_json(const GapSweep& sweep, const QuadratureConfig& quad) {
  json pts = json::array();
  for (const auto& p : sweep.points)
    pts.push_back(json{{"delta_eV", p.delta_eV}, {"c3_au", p.c3_au}});
  return json{{"tool", "gvdw"},
              {"version", GVDW_VERSION},
              {"atom", sweep.atom},
              {"a_nm", sweep.a_nm},
              {"quadrature", quad_json(quad)},
              {"spread", sweep.spread},
              {"plateau_delta_eV", sweep.plateau_delta_eV},
              {"plateau_threshold", sweep.plateau_threshold},
              {"points", pts}};
}

json ratio_table_to_json(const RatioTable& table, const QuadratureConfig& quad) {
  json rows = json::array();
  for (const auto& r : table.rows)
    rows.push_back(json{{"a_nm", r.a_nm},
                        {"c3_a_au", r.c3_a_au},
                        {"c3_b_au", r.c3_b_au},
                        {"ratio", r.ratio}});
  return json{{"tool", "gvdw"},
              {"version", GVDW_VERSION},
              {"atom", table.atom},
              {"model_a", table.model_a},
              {"model_b", table.model_b},
              {"quadrature", quad_json(quad)},
              {"rows", rows}};
}

json fit_report_to_json(const FitReport& report, const C3Curve& curve) {
  json residuals = json::array();
  for (std::size_t i = 0; i < report.grid_nm.size(); ++i)
    residuals.push_back(
        json{{"a_nm", report.grid_nm[i]}, {"rel_residual", report.residuals[i]}});
  return json{{"provenance", provenance_json(curve.atom, curve.model,
                                             curve.temperature_K, curve.quad)},
              {"C4_au", report.potential.C4_au},
              {"l_nm", report.potential.l_nm},
              {"max_rel_deviation_pct", report.max_rel_deviation_pct},
              {"sub_1pct_lo_nm", report.sub_1pct_lo_nm},
              {"sub_1pct_hi_nm", report.sub_1pct_hi_nm},
              {"objective", report.objective},
              {"residuals", residuals}};
}

void write_json(const std::filesystem::path& path, const json& j) {
  auto os = open_out(path);
  os << j.dump(2) << "\n";
}

void write_xy_dat(const std::filesystem::path& path,
                  const std::vector<double>& x, const std::vector<double>& y,
                  const std::string& comment) {
  if (x.size() != y.size())
    throw validation_error("write_xy_dat: x/y size mismatch");
  auto os = open_out(path);
  std::istringstream lines(comment);
  std::string line;
  while (std::getline(lines, line)) os << "# " << line << "\n";
  for (std::size_t i = 0; i < x.size(); ++i)
    os << format_g17(x[i]) << ' ' << format_g17(y[i]) << "\n";
}

}  // namespace gvdw
