#include "gvdw/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>

#include "gvdw/errors.hpp"

namespace gvdw {

namespace {

// Index-sharded parallel map with deterministic result placement. The first
// exception (if any) is rethrown after all workers join.
void parallel_for(std::size_t n, int jobs,
                  const std::function<void(std::size_t)>& body) {
  int workers = jobs > 0 ? jobs
                         : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min<int>(workers, static_cast<int>(n)));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::vector<double> log_spaced(double lo, double hi, int n) {
  std::vector<double> g(n);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < n; ++i)
    g[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
  g.front() = lo;
  g.back() = hi;
  return g;
}

void validate_separation_grid(const std::vector<double>& grid) {
  if (grid.empty())
    throw validation_error("sweep: separation grid must not be empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0) || !std::isfinite(grid[i]))
      throw validation_error("sweep: separations must be positive and finite");
    if (i > 0 && grid[i] <= grid[i - 1])
      throw validation_error("sweep: separations must be strictly increasing");
  }
}

CurvePoint evaluate_point(const AtomSpec& atom, const GrapheneModel& model,
                          double a_nm, double T, const QuadratureConfig& quad) {
  LifshitzRequest req{atom, model, a_nm, T, quad};
  try {
    const C3Result r = evaluate(req);
    return {a_nm, r.c3_au, r.energy_eV, r.est_rel_error, r.converged};
  } catch (const convergence_error& e) {
    // flagged, not dropped
    return {a_nm, e.best_estimate, energy_eV_from_c3(e.best_estimate, a_nm),
            e.achieved_rel_error, false};
  }
}

}  // namespace

const std::vector<double>& reference_separations() {
  static const std::vector<double> g{3, 5, 10, 20, 50, 100};
  return g;
}

std::vector<double> default_separation_grid() {
  std::vector<double> g = log_spaced(3.0, 100.0, 40);
  g.insert(g.end(), reference_separations().begin(),
           reference_separations().end());
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end(),
                      [](double a, double b) {
                        return std::abs(a - b) <= 1e-12 * std::max(a, b);
                      }),
          g.end());
  return g;
}

std::vector<double> fit_separation_grid() { return log_spaced(3.0, 100.0, 50); }

std::vector<double> default_delta_grid() {
  std::vector<double> g;
  for (int e = -15; e <= -1; ++e) g.push_back(std::pow(10.0, e));
  for (int e = -4; e < -1; ++e)       // knee refinement, 4 points per decade
    for (int q = 1; q <= 3; ++q) g.push_back(std::pow(10.0, e + 0.25 * q));
  std::sort(g.begin(), g.end());
  return g;
}

C3Curve sweep_separation(const AtomSpec& atom, const GrapheneModel& model,
                         const std::vector<double>& grid_nm, double T,
                         const QuadratureConfig& quad, int jobs) {
  validate_separation_grid(grid_nm);
  C3Curve curve{atom.name, model, T, quad, {}};
  curve.points.resize(grid_nm.size());
  parallel_for(grid_nm.size(), jobs, [&](std::size_t i) {
    curve.points[i] = evaluate_point(atom, model, grid_nm[i], T, quad);
  });
  return curve;
}

GapSweep sweep_gap(const AtomSpec& atom, double a_nm,
                   const std::vector<double>& delta_grid_eV,
                   const QuadratureConfig& quad, int jobs,
                   double plateau_threshold) {
  if (delta_grid_eV.empty())
    throw validation_error("gap sweep: delta grid must not be empty");
  std::vector<double> deltas = delta_grid_eV;
  std::sort(deltas.begin(), deltas.end());
  for (double d : deltas)
    if (!(d >= 1e-15) || !(d <= 0.1))
      throw validation_error("gap sweep: delta must lie in [1e-15, 0.1] eV");

  GapSweep sweep{atom.name, a_nm, {}, 0.0, 0.0, plateau_threshold};
  sweep.points.resize(deltas.size());
  parallel_for(deltas.size(), jobs, [&](std::size_t i) {
    const CurvePoint p =
        evaluate_point(atom, DiracParams{deltas[i]}, a_nm, 0.0, quad);
    sweep.points[i] = {deltas[i], p.c3_au};
  });

  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (const auto& p : sweep.points) {
    lo = std::min(lo, p.c3_au);
    hi = std::max(hi, p.c3_au);
  }
  sweep.spread = (hi - lo) / lo;

  // Largest grid delta whose change from delta/10 stays below the threshold.
  sweep.plateau_delta_eV = std::numeric_limits<double>::quiet_NaN();
  for (auto it = sweep.points.rbegin(); it != sweep.points.rend(); ++it) {
    const double down = it->delta_eV / 10.0;
    if (down < 1e-15) break;
    double c3_down;
    auto hit = std::find_if(sweep.points.begin(), sweep.points.end(),
                            [&](const GapSweepPoint& p) {
                              return std::abs(p.delta_eV - down) <=
                                     1e-9 * down;
                            });
    if (hit != sweep.points.end())
      c3_down = hit->c3_au;
    else
      c3_down = evaluate_point(atom, DiracParams{down}, a_nm, 0.0, quad).c3_au;
    if (std::abs(it->c3_au - c3_down) / c3_down < plateau_threshold) {
      sweep.plateau_delta_eV = it->delta_eV;
      break;
    }
  }
  return sweep;
}

RatioTable model_ratio_table(const AtomSpec& atom, const GrapheneModel& model_a,
                             const GrapheneModel& model_b,
                             const std::vector<double>& grid_nm,
                             const QuadratureConfig& quad, int jobs) {
  validate_separation_grid(grid_nm);
  const C3Curve ca = sweep_separation(atom, model_a, grid_nm, 0.0, quad, jobs);
  const C3Curve cb = sweep_separation(atom, model_b, grid_nm, 0.0, quad, jobs);
  RatioTable table{atom.name, model_label(model_a), model_label(model_b), {}};
  table.rows.reserve(grid_nm.size());
  for (std::size_t i = 0; i < grid_nm.size(); ++i)
    table.rows.push_back({grid_nm[i], ca.points[i].c3_au, cb.points[i].c3_au,
                          ca.points[i].c3_au / cb.points[i].c3_au});
  return table;
}

RatioTable model_ratio_table(const AtomSpec& atom, double delta_eV,
                             const std::vector<double>& grid_nm,
                             const QuadratureConfig& quad, int jobs) {
  return model_ratio_table(atom, HydrodynamicParams{},
                           DiracParams{delta_eV}, grid_nm, quad, jobs);
}

double species_ratio(const AtomSpec& numerator, const AtomSpec& denominator,
                     const GrapheneModel& model, double a_nm,
                     const QuadratureConfig& quad) {
  const CurvePoint pn = evaluate_point(numerator, model, a_nm, 0.0, quad);
  const CurvePoint pd = evaluate_point(denominator, model, a_nm, 0.0, quad);
  return pn.c3_au / pd.c3_au;
}

}  // namespace gvdw
