#include <doctest/doctest.h>

#include <cmath>

#include "gvdw/quadrature.hpp"

using namespace gvdw;

TEST_CASE("GK15 integrates low-degree polynomials exactly") {
  const auto cubic = [](double x) { return x * x * x; };
  const detail::Panel p = detail::gk15(cubic, 0.0, 1.0);
  CHECK(p.value == doctest::Approx(0.25).epsilon(1e-15));

  const auto deg7 = [](double x) { return 8.0 * std::pow(x, 7); };
  const detail::Panel p7 = detail::gk15(deg7, -1.0, 2.0);
  CHECK(p7.value == doctest::Approx(std::pow(2.0, 8) - 1.0).epsilon(1e-14));
}

TEST_CASE("adaptive driver hits tight tolerances on smooth integrands") {
  const auto f = [](double x) { return std::exp(-x) * x * x * x; };
  // Gamma(4) = 6 up to the e^-60 truncation tail
  const QuadratureResult r =
      integrate_adaptive(f, 0.0, 60.0, 1e-12, 0.0, 2000,
                         {1, 2, 3, 4, 6, 8, 10, 14, 20, 30, 45});
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(6.0).epsilon(1e-10));
  CHECK(r.est_abs_error <= 1e-12 * 6.0 * 1.0001);

  const auto osc = [](double x) { return std::sin(10.0 * x); };
  const QuadratureResult ro = integrate_adaptive(osc, 0.0, 3.0, 1e-12, 0.0, 500);
  CHECK(ro.converged);
  CHECK(ro.value ==
        doctest::Approx((1.0 - std::cos(30.0)) / 10.0).epsilon(1e-11));
}

TEST_CASE("seed panels change the path but not the answer") {
  const auto f = [](double x) { return 1.0 / (1.0 + x * x); };
  const QuadratureResult plain = integrate_adaptive(f, 0.0, 8.0, 1e-12, 0.0, 500);
  const QuadratureResult seeded =
      integrate_adaptive(f, 0.0, 8.0, 1e-12, 0.0, 500, {0.5, 1.0, 4.0});
  CHECK(plain.converged);
  CHECK(seeded.converged);
  CHECK(plain.value == doctest::Approx(std::atan(8.0)).epsilon(1e-12));
  CHECK(seeded.value == doctest::Approx(plain.value).epsilon(1e-12));
}

TEST_CASE("results are bitwise deterministic across repeated runs") {
  const auto f = [](double x) { return std::sqrt(std::fabs(x - 0.3)); };
  const QuadratureResult a = integrate_adaptive(f, 0.0, 1.0, 1e-10, 0.0, 2000);
  const QuadratureResult b = integrate_adaptive(f, 0.0, 1.0, 1e-10, 0.0, 2000);
  CHECK(a.value == b.value);
  CHECK(a.est_abs_error == b.est_abs_error);
  CHECK(a.subdivisions == b.subdivisions);
}

TEST_CASE("an exhausted budget is reported, not hidden") {
  const auto kink = [](double x) { return std::sqrt(std::fabs(x - 0.3)); };
  const QuadratureResult r = integrate_adaptive(kink, 0.0, 1.0, 1e-15, 0.0, 3);
  CHECK_FALSE(r.converged);
  CHECK(r.subdivisions == 3);
  // the estimate is still in the right place:
  // integral = (2/3)(0.3^1.5 + 0.7^1.5)
  CHECK(r.value == doctest::Approx(0.4999858572169352).epsilon(1e-3));
}

TEST_CASE("absolute tolerance terminates on the zero integrand") {
  const auto zero = [](double) { return 0.0; };
  const QuadratureResult r = integrate_adaptive(zero, 0.0, 1.0, 1e-12, 0.0, 50);
  CHECK(r.converged);
  CHECK(r.value == 0.0);
}
