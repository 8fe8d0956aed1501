#include "gvdw/lifshitz.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <type_traits>

#include "gvdw/errors.hpp"
#include "gvdw/units.hpp"

namespace gvdw {

namespace {

// Deterministic seed panels roughly tracking where e^-y * poly(y) lives.
const std::vector<double> kOuterSeeds{1, 2, 3, 4, 6, 8, 10, 14, 20, 30, 45};

std::vector<double> offset_seeds(double y0, double y_max) {
  std::vector<double> s;
  s.reserve(kOuterSeeds.size());
  for (double v : kOuterSeeds)
    if (v < y_max) s.push_back(y0 + v);
  return s;
}

template <class ModelT>
double model_v_F(const ModelT& m) {
  if constexpr (std::is_same_v<ModelT, DiracParams>)
    return m.v_F_m_s;
  else
    return 0.0;
}

template <class ModelT>
ReflectionPair reflect(const Kinematics& kin, const ModelT& m) {
  if constexpr (std::is_same_v<ModelT, DiracParams>)
    return reflection_dirac(kin, m);
  else
    return reflection_hydrodynamic(kin, m);
}

struct AtomEval {
  double alpha0_nm3;
  double omega0_rad_s;

  explicit AtomEval(const AtomSpec& a)
      : alpha0_nm3(a.alpha0_au * units().polarizability_au_in_nm3()),
        omega0_rad_s(a.omega0_rad_s()) {}

  double operator()(double xi) const {
    const double r = xi / omega0_rad_s;
    return alpha0_nm3 / (1.0 + r * r);
  }
};

void validate_request(const LifshitzRequest& req, C3Result& result) {
  if (!(req.a_nm > 0.0) || !std::isfinite(req.a_nm))
    throw validation_error("lifshitz: separation must be > 0");
  if (req.temperature_K < 0.0)
    throw validation_error("lifshitz: temperature must be >= 0");
  if (!(req.atom.alpha0_au > 0.0) || !(req.atom.omega0_eV > 0.0))
    throw validation_error("lifshitz: invalid atom spec");
  if (!(req.quad.rel_tol > 0.0) || !(req.quad.y_max > 10.0))
    throw validation_error("lifshitz: need rel_tol > 0 and y_max > 10");
  if (req.a_nm < kMinValidSeparation_nm)
    result.warnings.push_back(
        "outside-validity: a < 3 nm, the sheet boundary conditions are "
        "unreliable at this range");
  if (req.a_nm > kMaxValidSeparation_nm)
    result.warnings.push_back(
        "outside-validity: a > 1000 nm, beyond the quoted validity of the "
        "sheet description");
}

void fill_provenance(const LifshitzRequest& req, C3Result& result) {
  result.atom = req.atom.name;
  result.model = model_label(req.model);
  result.temperature_K = req.temperature_K;
}

template <class ModelT>
C3Result run_zero_temperature(const LifshitzRequest& req, const ModelT& m) {
  C3Result result;
  validate_request(req, result);
  fill_provenance(req, result);

  const Constants& k = constants();
  const double a = req.a_nm;
  const double v_F = model_v_F(m);
  const AtomEval alpha(req.atom);
  const QuadratureConfig& qc = req.quad;

  bool inner_ok = true;
  auto outer_f = [&](double y) {
    const double Xi = k.c * y / (2.0 * a);  // xi upper limit at this y
    auto inner_f = [&](double t) {
      const double xi = Xi * t;
      const ReflectionPair r = reflect(kinematics_from_y(y, xi, a, v_F), m);
      // 4 a^2 xi^2 / c^2 == y^2 t^2 under xi = Xi t
      return alpha(xi) *
             (2.0 * y * y * r.r_tm - y * y * t * t * (r.r_tm + r.r_te));
    };
    const QuadratureResult inner = integrate_adaptive(
        inner_f, 0.0, 1.0, qc.inner_rel_tol, 0.0, qc.max_subdivisions,
        {0.25, 0.5, 0.75});
    if (!inner.converged) inner_ok = false;
    return std::exp(-y) * Xi * inner.value;
  };

  const QuadratureResult outer =
      integrate_adaptive(outer_f, 0.0, qc.y_max, qc.rel_tol, 0.0,
                         qc.max_subdivisions, offset_seeds(0.0, qc.y_max));

  const double c3_eV_nm3 = k.hbar / (16.0 * std::numbers::pi) * outer.value;
  result.c3_au = to_atomic_units(c3_eV_nm3, Quantity::C3);
  result.energy_eV = energy_eV_from_c3(result.c3_au, a);
  result.est_rel_error =
      outer.value != 0.0 ? outer.est_abs_error / std::abs(outer.value) : 0.0;
  result.converged = outer.converged && inner_ok;
  if (!result.converged) {
    std::ostringstream msg;
    msg << "c3_zero_temperature(" << req.atom.name << ", " << result.model
        << ", a=" << a << " nm) did not reach rel_tol=" << qc.rel_tol
        << " within " << qc.max_subdivisions
        << " subdivisions; achieved " << result.est_rel_error;
    throw convergence_error(msg.str(), result.c3_au, result.est_rel_error);
  }
  return result;
}

template <class ModelT>
C3Result run_thermal(const LifshitzRequest& req, const ModelT& m) {
  C3Result result;
  validate_request(req, result);
  fill_provenance(req, result);

  const Constants& k = constants();
  const double a = req.a_nm;
  const double T = req.temperature_K;
  const double v_F = model_v_F(m);
  const AtomEval alpha(req.atom);
  const QuadratureConfig& qc = req.quad;

  bool quad_ok = true;
  double err_abs = 0.0;
  auto term = [&](double xi) {
    const double y0 = 2.0 * a * xi / k.c;
    auto f = [&](double y) {
      const ReflectionPair r = reflect(kinematics_from_y(y, xi, a, v_F), m);
      return std::exp(-y) *
             (2.0 * y * y * r.r_tm - y0 * y0 * (r.r_tm + r.r_te));
    };
    const QuadratureResult q =
        integrate_adaptive(f, y0, y0 + qc.y_max, qc.inner_rel_tol, 0.0,
                           qc.max_subdivisions, offset_seeds(y0, qc.y_max));
    if (!q.converged) quad_ok = false;
    err_abs += alpha(xi) * q.est_abs_error;
    return alpha(xi) * q.value;
  };

  double sum = 0.5 * term(0.0);  // l = 0 at half weight
  int consecutive_small = 0;
  int l = 1;
  for (; l <= qc.matsubara_max_terms; ++l) {
    const double t = term(matsubara_frequency(l, T));
    sum += t;
    consecutive_small =
        std::abs(t) < qc.matsubara_term_rel_cutoff * std::abs(sum)
            ? consecutive_small + 1
            : 0;
    if (consecutive_small >= 3) break;
  }
  if (l > qc.matsubara_max_terms) {
    result.matsubara_cutoff_met = false;
    result.warnings.push_back(
        "matsubara sum truncated at the term cap before reaching the "
        "configured cutoff");
  }

  const double c3_eV_nm3 = k.kB * T / 8.0 * sum;
  result.c3_au = to_atomic_units(c3_eV_nm3, Quantity::C3);
  result.energy_eV = energy_eV_from_c3(result.c3_au, a);
  result.est_rel_error = sum != 0.0 ? err_abs / std::abs(sum) : 0.0;
  result.converged = quad_ok;
  if (!result.converged) {
    std::ostringstream msg;
    msg << "c3_thermal(" << req.atom.name << ", " << result.model
        << ", a=" << a << " nm, T=" << T
        << " K): inner quadrature exhausted its subdivision budget";
    throw convergence_error(msg.str(), result.c3_au, result.est_rel_error);
  }
  return result;
}

}  // namespace

std::string model_label(const GrapheneModel& model) {
  return std::visit(
      [](const auto& m) -> std::string {
        std::ostringstream os;
        if constexpr (std::is_same_v<std::decay_t<decltype(m)>,
                                     DiracParams>) {
          os << "dirac(delta=" << m.Delta_eV << " eV)";
        } else {
          os << "hydrodynamic(K=" << m.K_per_m << " 1/m)";
        }
        return os.str();
      },
      model);
}

bool is_dirac(const GrapheneModel& model) {
  return std::holds_alternative<DiracParams>(model);
}

C3Result c3_zero_temperature(const LifshitzRequest& req) {
  if (req.temperature_K != 0.0)
    throw validation_error(
        "c3_zero_temperature: request carries a finite temperature");
  return std::visit([&](const auto& m) { return run_zero_temperature(req, m); },
                    req.model);
}

C3Result c3_thermal(const LifshitzRequest& req) {
  if (!(req.temperature_K > 0.0))
    throw validation_error("c3_thermal: temperature must be > 0");
  return std::visit([&](const auto& m) { return run_thermal(req, m); },
                    req.model);
}

C3Result evaluate(const LifshitzRequest& req) {
  return req.temperature_K == 0.0 ? c3_zero_temperature(req)
                                  : c3_thermal(req);
}

double energy_eV_from_c3(double c3_au, double a_nm) {
  if (!(a_nm > 0.0)) throw std::domain_error("energy: a must be > 0");
  return -from_atomic_units(c3_au, Quantity::C3) / (a_nm * a_nm * a_nm);
}

}  // namespace gvdw
