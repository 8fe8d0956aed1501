#include "gvdw/potential_fit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "gvdw/errors.hpp"
#include "gvdw/units.hpp"

namespace gvdw {

double potential_energy_eV(const PhenomenologicalPotential& p, double a_nm) {
  if (!(a_nm > 0.0)) throw std::domain_error("potential: a must be > 0");
  return -from_atomic_units(p.C4_au, Quantity::C4) /
         (a_nm * a_nm * a_nm * (a_nm + p.l_nm));
}

double potential_c3_au(const PhenomenologicalPotential& p, double a_nm) {
  if (!(a_nm > 0.0)) throw std::domain_error("potential: a must be > 0");
  return p.C4_au / (a_nm + p.l_nm);
}

namespace {

constexpr double kFitLMin = 0.1;    // nm
constexpr double kFitLMax = 1000.0; // nm

struct FitData {
  std::vector<double> a;   // sorted separations
  std::vector<double> c3;  // c3_au per point
};

FitData prepare(const C3Curve& curve) {
  if (curve.points.size() < 10)
    throw validation_error("fit: need at least 10 curve points");
  FitData d;
  d.a.reserve(curve.points.size());
  d.c3.reserve(curve.points.size());
  std::vector<CurvePoint> pts = curve.points;
  std::sort(pts.begin(), pts.end(),
            [](const CurvePoint& x, const CurvePoint& y) {
              return x.a_nm < y.a_nm;
            });
  for (const CurvePoint& p : pts) {
    if (!(p.c3_au > 0.0) || !(p.energy_eV < 0.0))
      throw validation_error(
          "fit: curve energies must be negative (c3 positive)");
    d.a.push_back(p.a_nm);
    d.c3.push_back(p.c3_au);
  }
  if (d.a.front() > 3.0 * (1.0 + 1e-9) || d.a.back() < 100.0 * (1.0 - 1e-9))
    throw validation_error("fit: curve must span [3, 100] nm");
  return d;
}

// E_ph/E = C4 g_i with g_i = 1/((a_i + l) c3_i); for fixed l the optimal
// C4 is sum(g)/sum(g^2).
double closed_form_C4(const FitData& d, double l) {
  double sg = 0.0, sg2 = 0.0;
  for (std::size_t i = 0; i < d.a.size(); ++i) {
    const double g = 1.0 / ((d.a[i] + l) * d.c3[i]);
    sg += g;
    sg2 += g * g;
  }
  return sg / sg2;
}

double objective(const FitData& d, double l, double* C4_out = nullptr) {
  const double C4 = closed_form_C4(d, l);
  if (C4_out) *C4_out = C4;
  double s = 0.0;
  for (std::size_t i = 0; i < d.a.size(); ++i) {
    const double r = C4 / ((d.a[i] + l) * d.c3[i]) - 1.0;
    s += r * r;
  }
  return s;
}

// Brent's bounded scalar minimization (golden section + parabolic steps).
double brent_min(const std::function<double(double)>& f, double lo, double hi,
                 double rel_xtol) {
  const double gold = 0.5 * (3.0 - std::sqrt(5.0));
  double a = lo, b = hi;
  double x = a + gold * (b - a), w = x, v = x;
  double fx = f(x), fw = fx, fv = fx;
  double d = 0.0, e = 0.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double m = 0.5 * (a + b);
    const double tol = rel_xtol * std::abs(x) + 1e-14;
    if (std::abs(x - m) <= 2.0 * tol - 0.5 * (b - a)) break;
    double p = 0.0, q = 0.0, r = 0.0;
    bool parabolic = false;
    if (std::abs(e) > tol) {
      r = (x - w) * (fx - fv);
      q = (x - v) * (fx - fw);
      p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::abs(q);
      const double e_old = e;
      e = d;
      if (std::abs(p) < std::abs(0.5 * q * e_old) && p > q * (a - x) &&
          p < q * (b - x)) {
        d = p / q;
        const double u = x + d;
        if (u - a < 2.0 * tol || b - u < 2.0 * tol)
          d = x < m ? tol : -tol;
        parabolic = true;
      }
    }
    if (!parabolic) {
      e = (x < m ? b : a) - x;
      d = gold * e;
    }
    const double u = x + (std::abs(d) >= tol ? d : (d > 0 ? tol : -tol));
    const double fu = f(u);
    if (fu <= fx) {
      if (u < x) b = x; else a = x;
      v = w; fv = fw;
      w = x; fw = fx;
      x = u; fx = fu;
    } else {
      if (u < x) a = u; else b = u;
      if (fu <= fw || w == x) {
        v = w; fv = fw;
        w = u; fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u; fv = fu;
      }
    }
  }
  return x;
}

FitReport profile(const PhenomenologicalPotential& p, const FitData& d) {
  FitReport rep;
  rep.potential = p;
  rep.grid_nm = d.a;
  rep.residuals.resize(d.a.size());
  double maxdev = 0.0, obj = 0.0;
  for (std::size_t i = 0; i < d.a.size(); ++i) {
    const double r = p.C4_au / ((d.a[i] + p.l_nm) * d.c3[i]) - 1.0;
    rep.residuals[i] = r;
    maxdev = std::max(maxdev, std::abs(r));
    obj += r * r;
  }
  rep.max_rel_deviation_pct = 100.0 * maxdev;
  rep.objective = obj;

  // longest contiguous run under 1%
  std::size_t best_lo = 0, best_len = 0, run_lo = 0, run_len = 0;
  for (std::size_t i = 0; i < d.a.size(); ++i) {
    if (std::abs(rep.residuals[i]) < 0.01) {
      if (run_len == 0) run_lo = i;
      if (++run_len > best_len) {
        best_len = run_len;
        best_lo = run_lo;
      }
    } else {
      run_len = 0;
    }
  }
  if (best_len == 0) {
    rep.sub_1pct_lo_nm = rep.sub_1pct_hi_nm =
        std::numeric_limits<double>::quiet_NaN();
  } else {
    rep.sub_1pct_lo_nm = d.a[best_lo];
    rep.sub_1pct_hi_nm = d.a[best_lo + best_len - 1];
  }
  return rep;
}

}  // namespace

FitReport fit_potential(const C3Curve& curve) {
  const FitData d = prepare(curve);
  const auto f = [&](double l) { return objective(d, l); };
  const double l = brent_min(f, kFitLMin, kFitLMax, 1e-12);
  if (!(l > kFitLMin * (1.0 + 1e-9)) && objective(d, kFitLMin) < objective(d, l))
    throw convergence_error("fit: optimizer pinned at the lower bound",
                            closed_form_C4(d, l), 0.0);
  double C4 = 0.0;
  objective(d, l, &C4);
  return profile({C4, l}, d);
}

FitReport deviation_profile(const PhenomenologicalPotential& p,
                            const C3Curve& curve) {
  if (curve.points.empty())
    throw validation_error("deviation_profile: empty curve");
  FitData d;
  std::vector<CurvePoint> pts = curve.points;
  std::sort(pts.begin(), pts.end(),
            [](const CurvePoint& x, const CurvePoint& y) {
              return x.a_nm < y.a_nm;
            });
  for (const CurvePoint& q : pts) {
    if (!(q.c3_au > 0.0))
      throw validation_error("deviation_profile: c3 must be positive");
    d.a.push_back(q.a_nm);
    d.c3.push_back(q.c3_au);
  }
  return profile(p, d);
}

}  // namespace gvdw
