#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace gvdw {

struct QuadratureConfig {
  double rel_tol = 1e-8;        // outer y-integral target
  double inner_rel_tol = 1e-9;  // inner t-integral target
  double y_max = 60.0;          // outer truncation (e^-60 ~ 9e-27)
  int max_subdivisions = 2000;
  double matsubara_term_rel_cutoff = 1e-10;
  int matsubara_max_terms = 200000;
};

struct QuadratureResult {
  double value = 0.0;
  double est_abs_error = 0.0;
  bool converged = false;
  int subdivisions = 0;
};

namespace detail {

struct Panel {
  double a, b, value, error;
};

// 15-point Kronrod / 7-point Gauss rule on [a,b].
template <class F>
Panel gk15(F&& f, double a, double b) {
  // QUADPACK dqk15 abscissae/weights.
  static constexpr double xgk[8] = {
      0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
      0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
      0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
      0.207784955007898467600689403773245, 0.0};
  static constexpr double wgk[8] = {
      0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
      0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
      0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
      0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
  static constexpr double wg[4] = {
      0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
      0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double resg = fc * wg[3];
  double resk = fc * wgk[7];
  double resabs = std::abs(resk);
  double fv1[7], fv2[7];
  for (int j = 0; j < 7; ++j) {
    fv1[j] = f(c - h * xgk[j]);
    fv2[j] = f(c + h * xgk[j]);
    const double sum = fv1[j] + fv2[j];
    resk += wgk[j] * sum;
    resabs += wgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    if (j % 2 == 1) resg += wg[j / 2] * sum;
  }
  const double reskh = resk * 0.5;
  double resasc = wgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j)
    resasc += wgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
  const double ah = std::abs(h);
  resasc *= ah;
  resabs *= ah;
  double err = std::abs((resk - resg) * h);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  constexpr double eps50 = 50.0 * 1.1102230246251565e-16;
  if (resabs > 1e-305 / eps50) err = std::max(err, eps50 * resabs);
  return {a, b, resk * h, err};
}

}  // namespace detail

// Globally adaptive bisection driven by the worst-error panel. Deterministic:
// ties broken by interval position and the final sum runs left to right.
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, double rel_tol,
                                    double abs_tol, int max_subdivisions,
                                    const std::vector<double>& seeds = {}) {
  std::vector<detail::Panel> panels;
  std::vector<double> edges{a};
  for (double s : seeds)
    if (s > a && s < b) edges.push_back(s);
  edges.push_back(b);
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    panels.push_back(detail::gk15(f, edges[i], edges[i + 1]));

  QuadratureResult out;
  const auto worse = [](const detail::Panel& p, const detail::Panel& q) {
    if (p.error != q.error) return p.error > q.error;
    return p.a < q.a;
  };
  int splits = 0;
  for (;;) {
    double total = 0.0, err = 0.0;
    for (const auto& p : panels) {
      total += p.value;
      err += p.error;
    }
    if (err <= std::max(abs_tol, rel_tol * std::abs(total)) ||
        splits >= max_subdivisions) {
      // deterministic final accumulation in interval order
      std::sort(panels.begin(), panels.end(),
                [](const detail::Panel& p, const detail::Panel& q) {
                  return p.a < q.a;
                });
      out.value = 0.0;
      out.est_abs_error = 0.0;
      for (const auto& p : panels) {
        out.value += p.value;
        out.est_abs_error += p.error;
      }
      out.converged = out.est_abs_error <=
                      std::max(abs_tol, rel_tol * std::abs(out.value));
      out.subdivisions = splits;
      return out;
    }
    auto worst = std::min_element(panels.begin(), panels.end(), worse);
    const detail::Panel bad = *worst;
    const double mid = 0.5 * (bad.a + bad.b);
    if (mid <= bad.a || mid >= bad.b) {  // interval at rounding limit
      worst->error = 0.0;
      continue;
    }
    *worst = detail::gk15(f, bad.a, mid);
    panels.push_back(detail::gk15(f, mid, bad.b));
    ++splits;
  }
}

}  // namespace gvdw
