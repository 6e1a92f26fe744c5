#include <cmath>

#include "doctest.h"
#include "fraclab/errors.hpp"
#include "fraclab/specfun.hpp"

using namespace fraclab;
using namespace fraclab::specfun;

TEST_CASE("gamma and log gamma at known points") {
  CHECK(specfun::gamma(0.5) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-14));
  CHECK(specfun::gamma(5.0) == doctest::Approx(24.0).epsilon(1e-14));
  CHECK(specfun::gamma(1.5) == doctest::Approx(0.5 * std::sqrt(kPi)).epsilon(1e-14));
  for (double x : {0.1, 0.7, 3.3, 12.5}) {
    CHECK(log_gamma(x) == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
    CHECK(specfun::gamma(x + 1.0) == doctest::Approx(x * specfun::gamma(x)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(specfun::gamma(0.0), DomainError);
  CHECK_THROWS_AS(specfun::gamma(-1.5), DomainError);
}

TEST_CASE("digamma identities") {
  CHECK(digamma(1.0) == doctest::Approx(-kEulerGamma).epsilon(1e-12));
  CHECK(digamma(0.5) == doctest::Approx(-kEulerGamma - 2.0 * kLn2).epsilon(1e-12));
  for (double x : {0.05, 0.8, 2.2, 40.0}) {
    CHECK(digamma(x + 1.0) - digamma(x) == doctest::Approx(1.0 / x).epsilon(1e-12));
  }
}

TEST_CASE("regularized incomplete beta") {
  CHECK(incomplete_beta_regularized(0.3, 1.0, 1.0) == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(incomplete_beta_regularized(0.5, 2.0, 3.0) == doctest::Approx(11.0 / 16.0).epsilon(1e-14));
  for (double x : {0.01, 0.4, 0.93}) {
    const double a = incomplete_beta_regularized(x, 0.3, 1.7);
    const double b = incomplete_beta_regularized(1.0 - x, 1.7, 0.3);
    CHECK(a + b == doctest::Approx(1.0).epsilon(1e-13));
  }
  CHECK(incomplete_beta_regularized(0.0, 0.5, 0.5) == 0.0);
  CHECK(incomplete_beta_regularized(1.0, 0.5, 0.5) == 1.0);
  CHECK(beta(2.0, 3.0) == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
}

TEST_CASE("geometric constants") {
  CHECK(sphere_area(2) == doctest::Approx(2.0 * kPi).epsilon(1e-15));
  CHECK(sphere_area(3) == doctest::Approx(4.0 * kPi).epsilon(1e-15));
  CHECK(ball_volume(2) == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(ball_volume(3) == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-15));
}

TEST_CASE("fractional normalization c_{N,s}") {
  CHECK(frac_normalization(2, 0.5) == doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-13));
  CHECK(frac_normalization(3, 0.5) == doctest::Approx(1.0 / (kPi * kPi)).epsilon(1e-13));
  CHECK(frac_normalization(2, 1e-9) < 1e-8);
  CHECK(frac_normalization(2, 1.0 - 1e-9) < 1e-8);
  for (double s : {0.1, 0.5, 0.9}) CHECK(frac_normalization(3, s) > 0.0);
}

TEST_CASE("logarithmic constants") {
  const auto l2 = log_constants(2);
  const auto l3 = log_constants(3);
  CHECK(l2.c_N == doctest::Approx(1.0 / kPi).epsilon(1e-15));
  CHECK(l2.rho_N == doctest::Approx(2.0 * kLn2 - 2.0 * kEulerGamma).epsilon(1e-12));
  CHECK(l3.rho_N == doctest::Approx(2.0 - 2.0 * kEulerGamma).epsilon(1e-13));
  CHECK(l3.c_N * sphere_area(3) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("Riesz and Poisson constants") {
  CHECK(riesz_constant(3, 1.0) == doctest::Approx(1.0 / (4.0 * kPi)).epsilon(1e-14));
  CHECK(ball_poisson_constant(2, 0.5) == doctest::Approx(1.0 / (kPi * kPi)).epsilon(1e-14));
  for (int n : {2, 3}) {
    for (double s : {0.1, 0.35, 0.6, 0.95}) {
      const double t = ball_poisson_constant(n, s);
      CHECK(t * specfun::gamma(s) * specfun::gamma(1.0 - s) * sphere_area(n) == doctest::Approx(2.0).epsilon(1e-12));
      CHECK(ball_poisson_constant_reflection(n, s) == doctest::Approx(t).epsilon(1e-12));
    }
  }
}

TEST_CASE("torsion constant d_{N,s} and its s-derivative") {
  CHECK(ball_torsion_constant(2, 1.0).value == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(ball_torsion_constant(3, 1.0).value == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(ball_torsion_constant(2, 0.5).value == doctest::Approx(2.0 / kPi).epsilon(1e-14));
  CHECK(ball_torsion_constant(2, 1.0).s_derivative == doctest::Approx(-0.5579657).epsilon(1e-7));
  for (int n : {2, 3}) {
    for (double s : {0.3, 0.8, 1.0, 1.4}) {
      const double h = 1e-5;
      const double fd = (specfun::ball_torsion_constant(n, s + h).value - ball_torsion_constant(n, s - h).value) /
                        (2.0 * h);
      CHECK(ball_torsion_constant(n, s).s_derivative == doctest::Approx(fd).epsilon(1e-8));
    }
  }
}
