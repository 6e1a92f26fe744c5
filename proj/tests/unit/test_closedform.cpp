#include <cmath>

#include "doctest.h"
#include "fraclab/closedform.hpp"
#include "fraclab/errors.hpp"
#include "fraclab/specfun.hpp"

using namespace fraclab;

TEST_CASE("isotropic torsion constant") {
  for (int n : {2, 3}) {
    for (double lam : {1.0, 0.25, 4.0}) {
      const SymMatrix A = SymMatrix::identity(n, lam);
      for (double s : {0.3, 1.0, 1.5}) {
        const double d = specfun::ball_torsion_constant(n, s).value;
        CHECK(torsion_constant(A, s) == doctest::Approx(d * std::pow(lam, -s)).epsilon(1e-14));
        const double h = 1e-5;
        const double fd = (torsion_constant(A, s + h) - torsion_constant(A, s - h)) / (2.0 * h);
        CHECK(torsion_constant_ds(A, s) == doctest::Approx(fd).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("torsion values and s-derivative") {
  const SymMatrix A = SymMatrix::identity(2, 1.0);
  const Point x{0.6, 0.0};
  const double q = 0.64;
  CHECK(torsion_value(A, 1.0, x) == doctest::Approx(0.25 * q).epsilon(1e-14));
  CHECK(torsion_value(A, 0.5, Point{1.2, 0.0}) == 0.0);
  const auto dv = torsion_s_derivative(A, 1.0, x);
  CHECK_FALSE(dv.boundary);
  CHECK(dv.value == doctest::Approx(-0.5579657 * q + 0.25 * q * std::log(q)).epsilon(1e-7));
  const auto edge = torsion_s_derivative(A, 1.0, Point{1.0, 0.0});
  CHECK(edge.boundary);
  CHECK(edge.value == 0.0);
  CHECK(torsion_s_derivative(A, 1.0, Point{0.0, 0.0}).value == doctest::Approx(-0.5579657).epsilon(1e-7));
}

TEST_CASE("unsupported inputs") {
  CHECK_THROWS_AS(torsion_constant(SymMatrix::diagonal({1.0, 0.25}), 0.5), CapabilityError);
  CHECK_THROWS_AS(torsion_constant(SymMatrix::identity(2, 1.0), 0.0), DomainError);
  CHECK_THROWS_AS(torsion_constant(SymMatrix::identity(2, 1.0), -1.0), DomainError);
}
