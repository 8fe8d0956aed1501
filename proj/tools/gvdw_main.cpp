#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gvdw/errors.hpp"
#include "gvdw/lifshitz.hpp"
#include "gvdw/potential_fit.hpp"
#include "gvdw/report.hpp"
#include "gvdw/scoring.hpp"
#include "gvdw/sweep.hpp"
#include "gvdw/units.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Options {
  std::string atom = "H";
  std::string model = "hydrodynamic";
  double delta_eV = 0.1;
  double a_nm = 10.0;
  double temperature_K = 0.0;
  std::string units = "au";
  std::string output;
  std::string format = "csv";
  std::string atoms_file;
  int jobs = 0;
  double a_min = 3.0;
  double a_max = 100.0;
  int n_points = 0;
  double plateau_threshold = 0.01;
  gvdw::QuadratureConfig quad;
};

void add_quad_flags(CLI::App* sub, Options& o) {
  sub->add_option("--rel-tol", o.quad.rel_tol, "Outer-integral relative tolerance")
      ->capture_default_str();
  sub->add_option("--inner-rel-tol", o.quad.inner_rel_tol,
                  "Inner-integral relative tolerance")
      ->capture_default_str();
  sub->add_option("--y-max", o.quad.y_max, "Outer-integral truncation in y")
      ->capture_default_str();
  sub->add_option("--max-subdiv", o.quad.max_subdivisions,
                  "Adaptive subdivision budget")
      ->capture_default_str();
}

void add_atom_flags(CLI::App* sub, Options& o) {
  sub->add_option("--atom", o.atom, "Atom name from the catalog")
      ->capture_default_str();
  sub->add_option("--atoms-file", o.atoms_file,
                  "Extra atom records: `name alpha0_au omega0_eV` per line")
      ->envname("GVDW_ATOMS");
}

void add_model_flags(CLI::App* sub, Options& o) {
  sub->add_option("--model", o.model, "Reflection-coefficient model")
      ->check(CLI::IsMember({"hydrodynamic", "dirac"}))
      ->capture_default_str();
  sub->add_option("--delta", o.delta_eV, "Dirac gap parameter, eV")
      ->capture_default_str();
}

void add_output_flags(CLI::App* sub, Options& o) {
  sub->add_option("--output,-o", o.output, "Output path (default: stdout)");
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "dat"}))
      ->capture_default_str();
}

gvdw::AtomCatalog make_catalog(const Options& o) {
  if (o.atoms_file.empty()) return gvdw::AtomCatalog::builtins();
  return gvdw::AtomCatalog::load(o.atoms_file);
}

gvdw::GrapheneModel make_model(const CLI::App* sub, const Options& o) {
  if (o.model == "dirac") {
    gvdw::DiracParams d;
    d.Delta_eV = o.delta_eV;
    return d;
  }
  if (sub->count("--delta") > 0)
    throw gvdw::validation_error("--delta requires --model dirac");
  return gvdw::HydrodynamicParams{};
}

std::vector<double> log_spaced(double lo, double hi, int n) {
  if (!(lo > 0) || !(hi > lo) || n < 2)
    throw gvdw::validation_error("grid: need 0 < a-min < a-max and n-points >= 2");
  std::vector<double> g(n);
  const double step = (std::log(hi) - std::log(lo)) / (n - 1);
  for (int i = 0; i < n; ++i) g[i] = std::exp(std::log(lo) + step * i);
  g.front() = lo;
  g.back() = hi;
  return g;
}

std::vector<double> separation_grid(const CLI::App* sub, const Options& o,
                                    std::vector<double> fallback) {
  if (sub->count("--a-min") + sub->count("--a-max") + sub->count("--n-points") ==
      0)
    return fallback;
  return log_spaced(o.a_min, o.a_max, o.n_points > 0 ? o.n_points : 40);
}

// '-' or empty selects stdout.
void emit(const std::string& output, const std::string& text) {
  if (output.empty() || output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(output);
  if (!os)
    throw gvdw::validation_error("cannot open for writing: " + output);
  os << text;
}

std::string sanitize(std::string name) {
  std::string out;
  for (char c : name) {
    if (c == '*')
      out += "_star";
    else if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' ||
             c == '.' || c == '_')
      out += c;
    else
      out += '_';
  }
  return out;
}

std::string model_file_tag(const gvdw::GrapheneModel& model) {
  if (const auto* d = std::get_if<gvdw::DiracParams>(&model)) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "dirac_delta%g", d->Delta_eV);
    return buf;
  }
  return "hydrodynamic";
}

int cmd_eval(const CLI::App* sub, const Options& o) {
  gvdw::LifshitzRequest req;
  req.atom = make_catalog(o).lookup(o.atom);
  req.model = make_model(sub, o);
  req.a_nm = o.a_nm;
  req.temperature_K = o.temperature_K;
  req.quad = o.quad;
  const gvdw::C3Result r = gvdw::evaluate(req);
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";

  std::cout << "atom = " << r.atom << "\n";
  std::cout << "model = " << r.model << "\n";
  std::cout << "a = " << gvdw::format_g17(o.a_nm) << " nm\n";
  std::cout << "T = " << gvdw::format_g17(r.temperature_K) << " K\n";
  if (o.units == "eV-nm")
    std::cout << "C3 = "
              << gvdw::format_g17(
                     gvdw::from_atomic_units(r.c3_au, gvdw::Quantity::C3))
              << " eV nm^3\n";
  else
    std::cout << "C3 = " << gvdw::format_g17(r.c3_au) << " a.u.\n";
  std::cout << "E = " << gvdw::format_g17(r.energy_eV) << " eV\n";
  std::cout << "est_rel_error = " << gvdw::format_g17(r.est_rel_error) << "\n";

  if (!o.output.empty()) {
    gvdw::C3Curve curve{r.atom, req.model, r.temperature_K, o.quad,
                        {{o.a_nm, r.c3_au, r.energy_eV, r.est_rel_error,
                          r.converged}}};
    if (o.format == "json")
      gvdw::write_json(o.output, gvdw::curve_to_json(curve));
    else if (o.format == "dat")
      gvdw::write_xy_dat(o.output, {o.a_nm}, {r.c3_au},
                         "C3 [a.u.] vs a [nm]; atom=" + r.atom +
                             "; model=" + r.model);
    else
      gvdw::write_curve_csv(fs::path(o.output), curve);
  }
  return 0;
}

int cmd_sweep(const CLI::App* sub, const Options& o) {
  const auto catalog = make_catalog(o);
  const auto model = make_model(sub, o);
  const auto grid = separation_grid(sub, o, gvdw::default_separation_grid());
  const gvdw::C3Curve curve = gvdw::sweep_separation(
      catalog.lookup(o.atom), model, grid, o.temperature_K, o.quad, o.jobs);

  if (o.format == "json") {
    emit(o.output, gvdw::curve_to_json(curve).dump(2) + "\n");
  } else if (o.format == "dat") {
    std::vector<double> x, y;
    for (const auto& p : curve.points) {
      x.push_back(p.a_nm);
      y.push_back(p.c3_au);
    }
    if (o.output.empty() || o.output == "-")
      throw gvdw::validation_error("--format dat requires --output");
    gvdw::write_xy_dat(o.output, x, y,
                       "C3 [a.u.] vs a [nm]; atom=" + curve.atom +
                           "; model=" + curve.model_name());
  } else {
    std::ostringstream os;
    gvdw::write_curve_csv(os, curve);
    emit(o.output, os.str());
  }
  int flagged = 0;
  for (const auto& p : curve.points) flagged += p.converged ? 0 : 1;
  if (flagged > 0)
    std::cerr << "warning: " << flagged << " point(s) not converged\n";
  return 0;
}

int cmd_ratio(const CLI::App* sub, const Options& o) {
  const auto catalog = make_catalog(o);
  const auto grid = separation_grid(sub, o, gvdw::reference_separations());
  const gvdw::RatioTable table = gvdw::model_ratio_table(
      catalog.lookup(o.atom), o.delta_eV, grid, o.quad, o.jobs);
  if (o.format == "json") {
    emit(o.output, gvdw::ratio_table_to_json(table, o.quad).dump(2) + "\n");
  } else if (o.format == "dat") {
    std::vector<double> x, y;
    for (const auto& r : table.rows) {
      x.push_back(r.a_nm);
      y.push_back(r.ratio);
    }
    if (o.output.empty() || o.output == "-")
      throw gvdw::validation_error("--format dat requires --output");
    gvdw::write_xy_dat(o.output, x, y,
                       "C3 ratio " + table.model_a + " / " + table.model_b +
                           " vs a [nm]; atom=" + table.atom);
  } else {
    std::ostringstream os;
    gvdw::write_ratio_table_csv(os, table, o.quad);
    emit(o.output, os.str());
  }
  return 0;
}

int cmd_gapsweep(const CLI::App* sub, const Options& o) {
  const auto catalog = make_catalog(o);
  if (sub->count("--a") == 0)
    throw gvdw::validation_error("gapsweep requires --a");
  const gvdw::GapSweep sweep =
      gvdw::sweep_gap(catalog.lookup(o.atom), o.a_nm,
                      gvdw::default_delta_grid(), o.quad, o.jobs,
                      o.plateau_threshold);
  std::cout << "spread = " << gvdw::format_g17(100.0 * sweep.spread) << " %\n";
  std::cout << "plateau_delta = " << gvdw::format_g17(sweep.plateau_delta_eV)
            << " eV (change per decade < "
            << gvdw::format_g17(100.0 * sweep.plateau_threshold) << " %)\n";
  if (o.format == "json") {
    if (!o.output.empty())
      gvdw::write_json(o.output, gvdw::gap_sweep_to_json(sweep, o.quad));
  } else if (o.format == "dat") {
    std::vector<double> x, y;
    for (const auto& p : sweep.points) {
      x.push_back(p.delta_eV);
      y.push_back(p.c3_au);
    }
    if (o.output.empty() || o.output == "-")
      throw gvdw::validation_error("--format dat requires --output");
    gvdw::write_xy_dat(o.output, x, y,
                       "C3 [a.u.] vs delta [eV]; atom=" + sweep.atom +
                           "; a=" + gvdw::format_g17(sweep.a_nm) + " nm");
  } else if (!o.output.empty()) {
    std::ofstream os(o.output);
    if (!os)
      throw gvdw::validation_error("cannot open for writing: " + o.output);
    gvdw::write_gap_sweep_csv(os, sweep, o.quad);
  }
  return 0;
}

int cmd_fit(const CLI::App* sub, const Options& o) {
  const auto catalog = make_catalog(o);
  const auto model = make_model(sub, o);
  const auto grid = separation_grid(sub, o, gvdw::fit_separation_grid());
  const gvdw::C3Curve curve = gvdw::sweep_separation(
      catalog.lookup(o.atom), model, grid, 0.0, o.quad, o.jobs);
  const gvdw::FitReport rep = gvdw::fit_potential(curve);
  std::cout << "C4 = " << gvdw::format_g17(rep.potential.C4_au) << " a.u.\n";
  std::cout << "l = " << gvdw::format_g17(rep.potential.l_nm) << " nm\n";
  std::cout << "max_deviation = "
            << gvdw::format_g17(rep.max_rel_deviation_pct) << " %\n";
  std::cout << "sub-1% window = [" << gvdw::format_g17(rep.sub_1pct_lo_nm)
            << ", " << gvdw::format_g17(rep.sub_1pct_hi_nm) << "] nm\n";
  if (!o.output.empty())
    gvdw::write_json(o.output, gvdw::fit_report_to_json(rep, curve));
  return 0;
}

void write_summary_group(std::ostream& os, const std::string& title,
                         const std::vector<gvdw::reference::Comparison>& group,
                         int& total, int& passed) {
  os << "[" << title << "]\n";
  int ok = 0;
  for (const auto& c : group) {
    os << (c.pass ? "PASS " : "FAIL ") << c.label << ": computed "
       << gvdw::format_g17(c.computed) << ", expected "
       << gvdw::format_g17(c.expected) << " (" << c.tolerance << ")\n";
    ok += c.pass ? 1 : 0;
  }
  os << "group result: " << ok << "/" << group.size() << " passed\n\n";
  total += static_cast<int>(group.size());
  passed += ok;
}

int cmd_reproduce(const Options& o) {
  const fs::path dir = o.output.empty() ? fs::path("reproduce") : fs::path(o.output);
  fs::create_directories(dir);

  gvdw::reference::ScoreContext ctx;
  ctx.catalog = make_catalog(o);
  ctx.quad = o.quad;
  ctx.jobs = o.jobs;

  // figure curves: hydrodynamic + Dirac at both gap bounds per species
  const std::vector<std::pair<std::string, std::string>> fig_atoms{
      {"fig1a", "H"}, {"fig2", "H2"}, {"fig3", "He*"}, {"fig4", "Na"}};
  const std::vector<gvdw::GrapheneModel> fig_models{
      gvdw::HydrodynamicParams{},
      gvdw::DiracParams{1e-15},
      gvdw::DiracParams{0.1},
  };
  const auto fig_grid = gvdw::default_separation_grid();
  for (const auto& [fig, atom] : fig_atoms) {
    for (const auto& model : fig_models) {
      const gvdw::C3Curve curve = gvdw::sweep_separation(
          ctx.catalog.lookup(atom), model, fig_grid, 0.0, ctx.quad, ctx.jobs);
      std::vector<double> x, y;
      for (const auto& p : curve.points) {
        x.push_back(p.a_nm);
        y.push_back(p.c3_au);
      }
      gvdw::write_xy_dat(dir / (fig + "_" + sanitize(atom) + "_" +
                                model_file_tag(model) + ".dat"),
                         x, y,
                         "C3 [a.u.] vs a [nm]; atom=" + atom +
                             "; model=" + gvdw::model_label(model));
    }
  }

  const auto ratio = gvdw::reference::score_ratio_tables(ctx);
  for (const auto& table : ratio.tables) {
    std::ofstream os(dir / ("ratio_" + sanitize(table.atom) + ".csv"));
    gvdw::write_ratio_table_csv(os, table, ctx.quad);
  }

  const auto thermal = gvdw::reference::score_thermal(ctx);
  {
    const auto& ref = gvdw::reference::thermal_check();
    gvdw::DiracParams model;
    model.Delta_eV = ref.delta_eV;
    json j = gvdw::provenance_json(ref.atom, model, ref.temperature_K, ctx.quad);
    j["a_nm"] = ref.a_nm;
    j["c3_T0_au"] = thermal.c3_T0_au;
    j["c3_T_au"] = thermal.c3_T_au;
    j["rel_diff_pct"] = thermal.rel_diff_pct;
    gvdw::write_json(dir / ("thermal_" + sanitize(ref.atom) + ".json"), j);
  }

  const auto fits = gvdw::reference::score_fits(ctx);
  for (const auto& e : fits.entries) {
    const auto tag = sanitize(e.ref.atom) + "_" + model_file_tag(e.curve.model);
    gvdw::write_json(dir / ("fit_" + tag + ".json"),
                     gvdw::fit_report_to_json(e.report, e.curve));
  }

  const auto gaps = gvdw::reference::score_gap_sweeps(ctx);
  for (const auto& sweep : gaps.sweeps) {
    char name[64];
    std::snprintf(name, sizeof name, "gap_%s_a%gnm.csv",
                  sanitize(sweep.atom).c_str(), sweep.a_nm);
    std::ofstream os(dir / name);
    gvdw::write_gap_sweep_csv(os, sweep, ctx.quad);
    if (sweep.atom == "H") {
      std::vector<double> x, y;
      for (const auto& p : sweep.points) {
        x.push_back(p.delta_eV);
        y.push_back(p.c3_au);
      }
      std::snprintf(name, sizeof name, "fig1b_H_a%gnm.dat", sweep.a_nm);
      gvdw::write_xy_dat(dir / name, x, y,
                         "C3 [a.u.] vs delta [eV]; atom=H; a=" +
                             gvdw::format_g17(sweep.a_nm) + " nm");
    }
  }

  const auto species = gvdw::reference::score_species_ratios(ctx);

  std::ostringstream sum;
  sum << "gvdw " << GVDW_VERSION << " reproduce summary\n\n";
  int total = 0, passed = 0;
  write_summary_group(sum, "model-ratio tables", ratio.comparisons, total,
                      passed);
  write_summary_group(sum, "thermal check", thermal.comparisons, total, passed);
  write_summary_group(sum, "phenomenological-potential fits",
                      fits.parameter_comparisons, total, passed);
  write_summary_group(sum, "fit-quality windows", fits.window_comparisons,
                      total, passed);
  write_summary_group(sum, "gap-parameter spreads", gaps.spread_comparisons,
                      total, passed);
  write_summary_group(sum, "gap plateaus", gaps.plateau_comparisons, total,
                      passed);
  write_summary_group(sum, "species ratios", species, total, passed);
  sum << "overall: " << passed << "/" << total << " passed\n";

  std::ofstream os(dir / "summary.txt");
  os << sum.str();
  std::cout << sum.str();
  std::cout << "\nartifacts written to " << dir.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"van der Waals / Casimir-Polder coefficients for atoms above "
               "graphene (hydrodynamic and Dirac reflection models)"};
  app.set_version_flag("--version", GVDW_VERSION);
  app.set_config("--config", "", "Read options from an INI/TOML file");
  app.require_subcommand(1);

  Options o;

  CLI::App* eval = app.add_subcommand("eval", "Evaluate C3 and E at one point");
  eval->configurable();
  add_atom_flags(eval, o);
  add_model_flags(eval, o);
  add_quad_flags(eval, o);
  add_output_flags(eval, o);
  eval->add_option("--a", o.a_nm, "Separation, nm")->capture_default_str();
  eval->add_option("--temp", o.temperature_K, "Temperature, K (0 = T=0 theory)")
      ->capture_default_str();
  eval->add_option("--units", o.units, "C3 output units")
      ->check(CLI::IsMember({"au", "eV-nm"}))
      ->capture_default_str();

  CLI::App* sweep = app.add_subcommand("sweep", "C3(a) over a separation grid");
  sweep->configurable();
  add_atom_flags(sweep, o);
  add_model_flags(sweep, o);
  add_quad_flags(sweep, o);
  add_output_flags(sweep, o);
  sweep->add_option("--temp", o.temperature_K, "Temperature, K")
      ->capture_default_str();
  sweep->add_option("--a-min", o.a_min, "Grid start, nm")->capture_default_str();
  sweep->add_option("--a-max", o.a_max, "Grid end, nm")->capture_default_str();
  sweep->add_option("--n-points", o.n_points, "Log-spaced point count");
  sweep->add_option("--jobs", o.jobs, "Concurrent evaluations (0 = all cores)")
      ->capture_default_str();

  CLI::App* ratio = app.add_subcommand(
      "ratio", "C3 hydrodynamic/Dirac ratio table over a separation grid");
  ratio->configurable();
  add_atom_flags(ratio, o);
  add_quad_flags(ratio, o);
  add_output_flags(ratio, o);
  ratio->add_option("--delta", o.delta_eV, "Dirac gap parameter, eV")
      ->capture_default_str();
  ratio->add_option("--a-min", o.a_min, "Grid start, nm")->capture_default_str();
  ratio->add_option("--a-max", o.a_max, "Grid end, nm")->capture_default_str();
  ratio->add_option("--n-points", o.n_points, "Log-spaced point count");
  ratio->add_option("--jobs", o.jobs, "Concurrent evaluations (0 = all cores)")
      ->capture_default_str();

  CLI::App* gapsweep = app.add_subcommand(
      "gapsweep", "Dirac C3 vs gap parameter at fixed separation");
  gapsweep->configurable();
  add_atom_flags(gapsweep, o);
  add_quad_flags(gapsweep, o);
  add_output_flags(gapsweep, o);
  gapsweep->add_option("--a", o.a_nm, "Separation, nm");
  gapsweep->add_option("--plateau-threshold", o.plateau_threshold,
                       "Plateau change-per-decade threshold")
      ->capture_default_str();
  gapsweep->add_option("--jobs", o.jobs, "Concurrent evaluations (0 = all cores)")
      ->capture_default_str();

  CLI::App* fit = app.add_subcommand(
      "fit", "Fit E = -C4/(a^3 (a+l)) to a Lifshitz sweep");
  fit->configurable();
  add_atom_flags(fit, o);
  add_model_flags(fit, o);
  add_quad_flags(fit, o);
  fit->add_option("--output,-o", o.output, "Write the fit report (JSON)");
  fit->add_option("--a-min", o.a_min, "Grid start, nm")->capture_default_str();
  fit->add_option("--a-max", o.a_max, "Grid end, nm")->capture_default_str();
  fit->add_option("--n-points", o.n_points, "Log-spaced point count");
  fit->add_option("--jobs", o.jobs, "Concurrent evaluations (0 = all cores)")
      ->capture_default_str();

  CLI::App* reproduce = app.add_subcommand(
      "reproduce", "Recompute every built-in reference table and score it");
  reproduce->configurable();
  add_quad_flags(reproduce, o);
  reproduce->add_option("--output,-o", o.output,
                        "Output directory (default: ./reproduce)");
  reproduce->add_option("--atoms-file", o.atoms_file,
                        "Extra atom records: `name alpha0_au omega0_eV`")
      ->envname("GVDW_ATOMS");
  reproduce->add_option("--jobs", o.jobs,
                        "Concurrent evaluations (0 = all cores)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (eval->parsed()) return cmd_eval(eval, o);
    if (sweep->parsed()) return cmd_sweep(sweep, o);
    if (ratio->parsed()) return cmd_ratio(ratio, o);
    if (gapsweep->parsed()) return cmd_gapsweep(gapsweep, o);
    if (fit->parsed()) return cmd_fit(fit, o);
    if (reproduce->parsed()) return cmd_reproduce(o);
  } catch (const gvdw::convergence_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
