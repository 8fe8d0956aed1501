#pragma once

namespace gvdw {

// Graphene as a charged fluid sheet with wave number K.
struct HydrodynamicParams {
  double K_per_m = 6.75e5;  // sheet wave number, 1/m

  double K_per_nm() const { return K_per_m * 1e-9; }
};

// Graphene as (possibly gapped) Dirac quasiparticles with Fermi velocity v_F.
struct DiracParams {
  double Delta_eV = 0.1;   // gap parameter, within [0, delta_bound]
  double v_F_m_s = 1e6;    // Fermi velocity
  // Multiplicity prefactor of Phi. The default 8 is calibrated so that the
  // built-in reference tables are reproduced; see README for the discussion.
  int N = 8;
  double delta_bound = 0.1;  // hard upper bound on Delta_eV, eV

  double v_F_nm_s() const { return v_F_m_s * 1e9; }
  double beta() const;               // v_F / c
  double delta_tilde_per_nm() const; // Delta / (hbar c)
};

struct ReflectionPair {
  double r_tm;
  double r_te;
  bool boundary = false;  // set at the measure-zero xi = k_perp = 0 corner
};

// One (xi, k_perp) evaluation point, expressed through q and q~.
struct Kinematics {
  double xi_rad_s;        // imaginary frequency
  double q_per_nm;        // sqrt(k_perp^2 + xi^2/c^2)
  double q_tilde_per_nm;  // sqrt(v_F^2 k_perp^2 + xi^2) / c
};

// Below this value of x = q~/(2 Delta~) the closed form loses precision to
// cancellation (error ~1e-8 relative near x ~ 1e-4 in double precision); the
// alternating series is exact to ~1e-16 there. At the threshold itself both
// branches carry < 1e-11 relative error, so they agree far inside 1e-10.
inline constexpr double kPhiSeriesThreshold = 1e-2;

// Polarization function Phi(q~) in 1/nm:
//   Phi = N (Delta~ + (q~^2 - 4 Delta~^2)/(2 q~) atan(q~/(2 Delta~)))
// with the exact massless branch N pi q~ / 4 at Delta = 0 and a series branch
// for small q~/(2 Delta~).
double phi(double q_tilde_per_nm, const DiracParams& params);

// r_TM = c^2 q K / (c^2 q K + xi^2),  r_TE = -K / (K + q).
ReflectionPair reflection_hydrodynamic(const Kinematics& kin,
                                       const HydrodynamicParams& params);

// r_TM = alpha q Phi / (2 q~^2 + alpha q Phi),
// r_TE = -alpha Phi / (2 q + alpha Phi).
ReflectionPair reflection_dirac(const Kinematics& kin,
                                const DiracParams& params);

// Kinematics from the dimensionless variable y = 2 a q at fixed xi:
//   q = y/(2a),  q~ = sqrt(beta^2 y^2/(4a^2) + (1 - beta^2) xi^2/c^2).
// Requires 0 <= xi <= c y / (2a) (otherwise k_perp^2 < 0).
Kinematics kinematics_from_y(double y, double xi_rad_s, double a_nm,
                             double v_F_m_s);

namespace detail {
// Test hook: scales the fine-structure coupling in the Dirac coefficients.
ReflectionPair reflection_dirac_scaled(const Kinematics& kin,
                                       const DiracParams& params,
                                       double coupling_scale);
}  // namespace detail

}  // namespace gvdw
