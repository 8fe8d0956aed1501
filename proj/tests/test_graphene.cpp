#include <doctest/doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gvdw/errors.hpp"
#include "gvdw/graphene.hpp"
#include "gvdw/units.hpp"
#include "oracles.hpp"

using namespace gvdw;

namespace {

// Frozen evaluation point: xi = 1e15 rad/s, k_perp = 1e8 1/m, a = 10 nm.
const Kinematics kFrozenKin{1e15, 0.10005561703652892, 3.3522776684131561e-3};

}  // namespace

TEST_CASE("kinematics_from_y reproduces the frozen (q, q~) pair") {
  const double y = 2.0 * 10.0 * kFrozenKin.q_per_nm;
  const Kinematics kin = kinematics_from_y(y, 1e15, 10.0, 1e6);
  CHECK(kin.q_per_nm == doctest::Approx(kFrozenKin.q_per_nm).epsilon(1e-15));
  CHECK(kin.q_tilde_per_nm ==
        doctest::Approx(kFrozenKin.q_tilde_per_nm).epsilon(1e-13));
  CHECK(kin.xi_rad_s == 1e15);
  // q~ <= q always (beta < 1)
  CHECK(kin.q_tilde_per_nm <= kin.q_per_nm);
}

TEST_CASE("kinematics_from_y validates its domain") {
  CHECK_THROWS_AS(kinematics_from_y(1.0, 1e15, 0.0, 1e6), std::domain_error);
  CHECK_THROWS_AS(kinematics_from_y(-1.0, 0.0, 10.0, 1e6), std::domain_error);
  CHECK_THROWS_AS(kinematics_from_y(1.0, -1.0, 10.0, 1e6), std::domain_error);
  // xi beyond the light cone at this y
  const double y = 1e-3;
  const double xi_max = constants().c * y / (2.0 * 10.0);
  CHECK_THROWS_AS(kinematics_from_y(y, 2.0 * xi_max, 10.0, 1e6),
                  std::domain_error);
  CHECK_NOTHROW(kinematics_from_y(y, xi_max, 10.0, 1e6));
}

TEST_CASE("phi matches the frozen series value and the massless closed form") {
  DiracParams p;  // Delta = 0.1 eV, v_F = 1e6 m/s, N = 8
  const double dt = p.delta_tilde_per_nm();

  // x = q~/(2 Delta~) = 1e-4, frozen Phi/(N Delta~)
  const double x = 1e-4;
  CHECK(phi(2.0 * dt * x, p) / (8.0 * dt) ==
        doctest::Approx(1.3333333280000000343e-8).epsilon(1e-12));

  DiracParams massless = p;
  massless.Delta_eV = 0.0;
  for (double qt : {1e-8, 1e-4, 0.1, 10.0})
    CHECK(phi(qt, massless) ==
          doctest::Approx(8.0 * std::numbers::pi * qt / 4.0).epsilon(1e-15));

  CHECK(phi(0.0, p) == 0.0);
  CHECK(phi(0.0, massless) == 0.0);
}

TEST_CASE("phi series and closed form agree at the branch point") {
  DiracParams p;
  const double dt = p.delta_tilde_per_nm();
  const double qt_branch = 2.0 * dt * kPhiSeriesThreshold;
  const double below = phi(qt_branch * (1.0 - 1e-12), p);  // series branch
  const double above = phi(qt_branch * (1.0 + 1e-12), p);  // closed form
  CHECK(below / above == doctest::Approx(1.0).epsilon(1e-10));

  // and against the long-double oracle across the switch region (x >= 1e-3:
  // below that the direct form cancels too hard even in long double, which is
  // exactly why the library switches to the series)
  for (double x = 1e-3; x < 100.0; x *= 2.1) {
    const double qt = 2.0 * dt * x;
    const double lib = phi(qt, p);
    const double ref = static_cast<double>(oracle::phi_direct_ld(qt, p));
    CHECK(lib == doctest::Approx(ref).epsilon(1e-10));
  }
}

TEST_CASE("phi is monotone increasing in q~") {
  DiracParams p;
  double prev = 0.0;
  for (double qt = 1e-9; qt < 1e3; qt *= 2.0) {
    const double cur = phi(qt, p);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("phi and reflections reject invalid input") {
  DiracParams p;
  CHECK_THROWS_AS(phi(-1.0, p), std::domain_error);
  CHECK_THROWS_AS(phi(std::nan(""), p), std::domain_error);

  DiracParams bad = p;
  bad.Delta_eV = 0.2;  // above delta_bound
  CHECK_THROWS_AS(phi(1.0, bad), validation_error);
  bad = p;
  bad.Delta_eV = -0.01;
  CHECK_THROWS_AS(phi(1.0, bad), validation_error);
  bad = p;
  bad.N = 0;
  CHECK_THROWS_AS(phi(1.0, bad), validation_error);
  bad = p;
  bad.v_F_m_s = 0.0;
  CHECK_THROWS_AS(phi(1.0, bad), validation_error);
  bad = p;
  bad.v_F_m_s = 4e8;  // >= c
  CHECK_THROWS_AS(phi(1.0, bad), validation_error);

  HydrodynamicParams h;
  h.K_per_m = 0.0;
  CHECK_THROWS_AS(reflection_hydrodynamic(kFrozenKin, h), validation_error);
  CHECK_THROWS_AS(reflection_dirac({1e15, -1.0, 1.0}, p), std::domain_error);
  CHECK_THROWS_AS(reflection_hydrodynamic({-1.0, 1.0, 1.0}, HydrodynamicParams{}),
                  std::domain_error);
}

TEST_CASE("dirac reflection matches the frozen N = 8 and N = 4 values") {
  DiracParams p8;
  const ReflectionPair r8 = reflection_dirac(kFrozenKin, p8);
  CHECK(r8.r_tm == doctest::Approx(0.389201619962993252).epsilon(1e-12));
  CHECK(r8.r_te == doctest::Approx(-0.000714764956906855255).epsilon(1e-12));
  CHECK_FALSE(r8.boundary);

  DiracParams p4 = p8;
  p4.N = 4;
  const ReflectionPair r4 = reflection_dirac(kFrozenKin, p4);
  CHECK(r4.r_tm == doctest::Approx(0.241620319952179036).epsilon(1e-12));
  CHECK(r4.r_te == doctest::Approx(-0.000357510246351341165).epsilon(1e-12));
}

TEST_CASE("hydrodynamic reflection follows the closed form, in sheet units") {
  const HydrodynamicParams h;  // K = 6.75e5 1/m
  const double K = 6.75e5 * 1e-9;
  const double c = constants().c;
  const ReflectionPair r = reflection_hydrodynamic(kFrozenKin, h);
  const double cqK = c * c * kFrozenKin.q_per_nm * K;
  CHECK(r.r_tm ==
        doctest::Approx(cqK / (cqK + 1e15 * 1e15)).epsilon(1e-14));
  CHECK(r.r_te ==
        doctest::Approx(-K / (K + kFrozenKin.q_per_nm)).epsilon(1e-14));
}

TEST_CASE("both models return the boundary pair at the origin") {
  const Kinematics origin{0.0, 0.0, 0.0};
  const ReflectionPair rh = reflection_hydrodynamic(origin, {});
  CHECK(rh.r_tm == 0.0);
  CHECK(rh.r_te == 0.0);
  CHECK(rh.boundary);
  const ReflectionPair rd = reflection_dirac(origin, {});
  CHECK(rd.r_tm == 0.0);
  CHECK(rd.r_te == 0.0);
  CHECK(rd.boundary);
}

TEST_CASE("reflection coefficients stay inside their physical bounds") {
  DiracParams dirac;
  DiracParams massless = dirac;
  massless.Delta_eV = 0.0;
  const HydrodynamicParams hydro;
  const double a = 10.0;
  for (int i = 0; i < 60; ++i) {
    const double q = 1e-8 * std::pow(10.0, 11.0 * i / 59.0);  // 1e-8..1e3 1/nm
    for (int j = 0; j <= 20; ++j) {
      const double t = static_cast<double>(j) / 20.0;
      const double xi = constants().c * q * t;
      for (double v_F : {0.0, 1e6}) {
        const Kinematics kin = kinematics_from_y(2.0 * a * q, xi, a, v_F);
        for (const ReflectionPair& r :
             {reflection_hydrodynamic(kin, hydro),
              reflection_dirac(kin, dirac), reflection_dirac(kin, massless)}) {
          CHECK(r.r_tm >= 0.0);
          CHECK(r.r_tm <= 1.0);
          CHECK(r.r_te <= 0.0);
          CHECK(r.r_te >= -1.0);
        }
        // q~ <= q makes TM dominate for the Dirac sheet (equality holds on
        // the light cone q~ = q, so allow an ulp there)
        const ReflectionPair rd = reflection_dirac(kin, dirac);
        CHECK(rd.r_tm >= std::abs(rd.r_te) * (1.0 - 1e-12));
      }
    }
  }
}

TEST_CASE("coupling scale hook reduces to the physical coupling at 1") {
  DiracParams p;
  const ReflectionPair base = reflection_dirac(kFrozenKin, p);
  const ReflectionPair same =
      detail::reflection_dirac_scaled(kFrozenKin, p, 1.0);
  CHECK(base.r_tm == same.r_tm);
  CHECK(base.r_te == same.r_te);
  // stronger coupling pushes both coefficients toward their perfect limits
  const ReflectionPair strong =
      detail::reflection_dirac_scaled(kFrozenKin, p, 100.0);
  CHECK(strong.r_tm > base.r_tm);
  CHECK(strong.r_te < base.r_te);
  CHECK(strong.r_tm <= 1.0);
  CHECK(strong.r_te >= -1.0);
}
