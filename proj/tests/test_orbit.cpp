#include <doctest.h>

#include "cosdyn/orbit.hpp"
#include "fixtures.hpp"

using namespace cosdyn;

TEST_CASE("real fixed points of (1/2) cosh") {
  const auto m = fixtures::half_cosh();
  // independent oracle: x = cosh(x)/2 by bisection on the real line
  const auto bisect = [](double lo, double hi) {
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      ((0.5 * std::cosh(lo) - lo) * (0.5 * std::cosh(mid) - mid) <= 0 ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
  };
  const double attracting = bisect(0.0, 1.0), beta = bisect(1.5, 3.0);
  CHECK(attracting == doctest::Approx(0.589387763469).epsilon(1e-11));
  CHECK(beta == doctest::Approx(2.126799892678).epsilon(1e-11));

  const PeriodicPoint a = newton_periodic(m, 0.5, 1);
  REQUIRE(a.converged);
  CHECK(std::abs(a.z - attracting) < 1e-12);
  CHECK(std::abs(a.multiplier - 0.5 * std::sinh(attracting)) < 1e-12);
  CHECK(std::abs(a.multiplier) == doctest::Approx(0.312054).epsilon(1e-5));

  const PeriodicPoint b = newton_periodic(m, 2.3, 1);
  REQUIRE(b.converged);
  CHECK(std::abs(b.z - beta) < 1e-12);
  CHECK(std::abs(b.multiplier) == doctest::Approx(2.067191).epsilon(1e-5));
}

TEST_CASE("the 2-cycle through u_1 at c*") {
  const auto m = fixtures::cstar();
  const PeriodicPoint p = newton_periodic(m, m.critical_point(1) + 0.01, 2);
  REQUIRE(p.converged);
  CHECK(std::abs(p.z - m.critical_point(1)) < 1e-10);
  CHECK(std::abs(p.multiplier) < 1e-8);
  CHECK(std::abs(m(p.z) + fixtures::kCStar) < 1e-10);
}

TEST_CASE("jet derivative matches finite differences") {
  const auto m = fixtures::cstar();
  const Complex z(0.3, 0.2);
  const Jet j = iterate_jet(m, z, 3);
  const double h = 1e-6;
  const Complex fd = (iterate_jet(m, z + h, 3).value - iterate_jet(m, z - h, 3).value) / (2 * h);
  CHECK(std::abs(j.derivative - fd) < 1e-5 * (1 + std::abs(fd)));
  CHECK(!j.escaped);
}

TEST_CASE("orbits stop on overflow") {
  const auto m = fixtures::cosh_map();
  const auto o = orbit(m, 3.0, 10);
  CHECK(o.size() < 11);
  CHECK(orbit(m, Complex(0, 0.5), 3).size() == 4);
}
