#include <doctest/doctest.h>

#include <cmath>
#include <stdexcept>

#include "gvdw/errors.hpp"
#include "gvdw/units.hpp"

using namespace gvdw;

TEST_CASE("physical constants are self-consistent") {
  const Constants& k = constants();
  CHECK(k.hbar_c == doctest::Approx(197.3269804).epsilon(1e-12));
  CHECK(k.c == doctest::Approx(2.99792458e17).epsilon(1e-15));
  // hbar derived as hbar_c / c, frozen value in eV s
  CHECK(k.hbar == doctest::Approx(6.5821195675309483603e-16).epsilon(1e-14));
  CHECK(k.hbar * k.c == doctest::Approx(k.hbar_c).epsilon(1e-15));
  CHECK(k.kB == doctest::Approx(8.617333262e-5).epsilon(1e-12));
}

TEST_CASE("atomic-unit conversions round-trip and use the right factors") {
  CHECK(from_atomic_units(1.0, Quantity::C3) ==
        doctest::Approx(4.032e-3).epsilon(1e-15));
  CHECK(from_atomic_units(1.0, Quantity::C4) ==
        doctest::Approx(4.032e-3).epsilon(1e-15));
  CHECK(from_atomic_units(1.0, Quantity::Polarizability) ==
        doctest::Approx(1.482e-31).epsilon(1e-15));

  for (double v : {1e-6, 0.037, 1.0, 42.0, 9.9e4}) {
    CHECK(to_atomic_units(from_atomic_units(v, Quantity::C3), Quantity::C3) ==
          doctest::Approx(v).epsilon(1e-14));
    CHECK(from_atomic_units(to_atomic_units(v, Quantity::C4), Quantity::C4) ==
          doctest::Approx(v).epsilon(1e-14));
  }
}

TEST_CASE("conversions reject non-finite input") {
  CHECK_THROWS_AS(to_atomic_units(std::nan(""), Quantity::C3),
                  validation_error);
  CHECK_THROWS_AS(from_atomic_units(INFINITY, Quantity::C4), validation_error);
}

TEST_CASE("matsubara frequencies") {
  // xi_l = 2 pi kB T l / hbar; frozen value for l = 1, T = 300 K
  CHECK(matsubara_frequency(1, 300.0) ==
        doctest::Approx(2.4677902543410652384e14).epsilon(1e-13));
  CHECK(matsubara_frequency(0, 300.0) == 0.0);
  CHECK(matsubara_frequency(10, 300.0) ==
        doctest::Approx(10.0 * matsubara_frequency(1, 300.0)).epsilon(1e-15));
  // linear in T
  CHECK(matsubara_frequency(1, 600.0) ==
        doctest::Approx(2.0 * matsubara_frequency(1, 300.0)).epsilon(1e-15));

  CHECK_THROWS_AS(matsubara_frequency(1, 0.0), std::domain_error);
  CHECK_THROWS_AS(matsubara_frequency(1, -5.0), std::domain_error);
  CHECK_THROWS_AS(matsubara_frequency(-1, 300.0), std::domain_error);
}
