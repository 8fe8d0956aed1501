#include "gvdw/graphene.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gvdw/errors.hpp"
#include "gvdw/units.hpp"

namespace gvdw {

double DiracParams::beta() const { return v_F_nm_s() / constants().c; }

double DiracParams::delta_tilde_per_nm() const {
  return Delta_eV / constants().hbar_c;
}

namespace {
void validate_dirac(const DiracParams& p) {
  if (p.Delta_eV < 0.0 || p.Delta_eV > p.delta_bound)
    throw validation_error("dirac params: Delta must lie in [0, " +
                           std::to_string(p.delta_bound) + "] eV");
  if (!(p.v_F_m_s > 0.0) || p.v_F_nm_s() >= constants().c)
    throw validation_error("dirac params: need 0 < v_F < c");
  if (p.N < 1) throw validation_error("dirac params: N must be >= 1");
}
}  // namespace

double phi(double q_tilde_per_nm, const DiracParams& params) {
  validate_dirac(params);
  if (std::isnan(q_tilde_per_nm) || q_tilde_per_nm < 0.0)
    throw std::domain_error("phi: q_tilde must be >= 0");
  const double N = static_cast<double>(params.N);
  const double qt = q_tilde_per_nm;
  if (params.Delta_eV == 0.0) return N * std::numbers::pi * qt / 4.0;
  const double dt = params.delta_tilde_per_nm();
  const double x = qt / (2.0 * dt);
  if (x < kPhiSeriesThreshold) {
    // Delta~ + (q~^2 - 4 Delta~^2)/(2 q~) atan(x) with the leading Delta~
    // cancellation carried out analytically:
    //   Phi/(N Delta~) = 4/3 x^2 - 8/15 x^4 + 12/35 x^6 - 16/63 x^8 + ...
    const double x2 = x * x;
    return N * dt * x2 *
           (4.0 / 3.0 +
            x2 * (-8.0 / 15.0 + x2 * (12.0 / 35.0 - x2 * 16.0 / 63.0)));
  }
  return N * (dt + (qt * qt - 4.0 * dt * dt) / (2.0 * qt) * std::atan(x));
}

ReflectionPair reflection_hydrodynamic(const Kinematics& kin,
                                       const HydrodynamicParams& params) {
  if (!(params.K_per_m > 0.0))
    throw validation_error("hydrodynamic params: K must be > 0");
  if (kin.q_per_nm < 0.0 || kin.xi_rad_s < 0.0)
    throw std::domain_error("reflection: invalid kinematics");
  if (kin.q_per_nm == 0.0 && kin.xi_rad_s == 0.0) return {0.0, 0.0, true};
  const double K = params.K_per_nm();
  const double c = constants().c;
  const double cqK = c * c * kin.q_per_nm * K;
  return {cqK / (cqK + kin.xi_rad_s * kin.xi_rad_s),
          -K / (K + kin.q_per_nm), false};
}

namespace detail {
ReflectionPair reflection_dirac_scaled(const Kinematics& kin,
                                       const DiracParams& params,
                                       double coupling_scale) {
  validate_dirac(params);
  if (kin.q_per_nm < 0.0 || kin.q_tilde_per_nm < 0.0)
    throw std::domain_error("reflection: invalid kinematics");
  if (kin.q_tilde_per_nm == 0.0 && kin.q_per_nm == 0.0)
    return {0.0, 0.0, true};
  const double a = coupling_scale * constants().fine_structure;
  const double P = phi(kin.q_tilde_per_nm, params);
  const double q = kin.q_per_nm;
  const double qt = kin.q_tilde_per_nm;
  const double aqP = a * q * P;
  return {aqP == 0.0 ? 0.0 : aqP / (2.0 * qt * qt + aqP),
          a * P == 0.0 ? 0.0 : -a * P / (2.0 * q + a * P), false};
}
}  // namespace detail

ReflectionPair reflection_dirac(const Kinematics& kin,
                                const DiracParams& params) {
  return detail::reflection_dirac_scaled(kin, params, 1.0);
}

Kinematics kinematics_from_y(double y, double xi_rad_s, double a_nm,
                             double v_F_m_s) {
  if (!(a_nm > 0.0)) throw std::domain_error("kinematics: a must be > 0");
  if (y < 0.0 || xi_rad_s < 0.0)
    throw std::domain_error("kinematics: y and xi must be >= 0");
  const double c = constants().c;
  const double q = y / (2.0 * a_nm);
  if (xi_rad_s > c * q * (1.0 + 1e-12))
    throw std::domain_error("kinematics: xi exceeds cy/(2a), k_perp^2 < 0");
  const double beta = v_F_m_s * 1e9 / c;
  const double xi_over_c = xi_rad_s / c;
  const double qt2 =
      beta * beta * q * q + (1.0 - beta * beta) * xi_over_c * xi_over_c;
  return {xi_rad_s, q, std::sqrt(std::max(qt2, 0.0))};
}

}  // namespace gvdw
