#include <cmath>

#include "doctest.h"
#include "fraclab/errors.hpp"
#include "fraclab/operators.hpp"
#include "fraclab/specfun.hpp"

using namespace fraclab;

namespace {

ScalarField torsion(const Domain& ball, double s) {
  const double d = specfun::ball_torsion_constant(ball.dim(), s).value;
  const double r2 = ball.radius() * ball.radius();
  return CompactField::radial([=](double r) { return d * std::pow(std::max(0.0, r2 - r * r), s); }, s)
      .extend(ball);
}

ScalarField gaussian() {
  return ScalarField::smooth([](const Point& x) { return std::exp(-x.norm2()); });
}

}  // namespace

TEST_CASE("fractional Laplacian of the torsion function is one inside") {
  QuadConfig cfg;
  cfg.rel_tol = 1e-7;
  for (int n : {2, 3}) {
    const Domain b = Domain::unit_ball(n);
    for (double s : {0.25, 0.5, 0.75}) {
      const auto u = torsion(b, s);
      for (double r : {0.0, 0.5, 0.9}) {
        const auto v = frac_laplacian(u, r * Point::unit(n, 0), Order(s), cfg);
        CHECK(v.value == doctest::Approx(1.0).epsilon(1e-4));
      }
    }
  }
}

TEST_CASE("local case s = 1 uses the classical Laplacian") {
  QuadConfig cfg;
  const auto p = ScalarField::smooth([](const Point& x) { return 1.0 - x.norm2(); });
  CHECK(frac_laplacian(p, Point{0.2, 0.1}, Order(1.0), cfg).value == doctest::Approx(4.0).epsilon(1e-6));
  const auto q = [](const Point& x) { return x[0] * x[0] * x[1] + x[1] * x[1]; };
  CHECK(fd_laplacian(q, Point{0.3, 0.7}, 1e-3) == doctest::Approx(2.0 * 0.7 + 2.0).epsilon(1e-8));
}

TEST_CASE("exterior values agree across three representations") {
  QuadConfig cfg;
  cfg.rel_tol = 1e-8;
  const Domain b = Domain::unit_ball(2);
  const double s = 0.5;
  const auto u = torsion(b, s);
  const Point z{1.5, 0.0};
  const double fl = frac_laplacian(u, z, Order(s), cfg).value;
  const double nd = nonlocal_normal_derivative(u, b, z, Order(s), cfg).value;
  const double ws = restriction_ws(CompactField::constant(1.0), b, Order(s), z, cfg).value;
  CHECK(fl < 0.0);
  CHECK(nd == doctest::Approx(fl).epsilon(1e-5));
  CHECK(ws == doctest::Approx(fl).epsilon(1e-5));
  CHECK(restriction_ws(CompactField::constant(1.0), b, Order(s), Point{0.2, 0.0}, cfg).value == 0.0);
  CHECK_THROWS_AS(nonlocal_normal_derivative(u, b, Point{0.5, 0.0}, Order(s), cfg), DomainError);
}

TEST_CASE("h_Omega on balls") {
  QuadConfig cfg;
  cfg.rel_tol = 1e-10;
  const Domain b = Domain::unit_ball(2);
  CHECK(std::fabs(h_omega(b, Point{0.0, 0.0}, cfg).value) < 1e-10);
  CHECK(h_omega(b, Point{0.5, 0.0}, cfg).value == doctest::Approx(-std::log(0.75)).epsilon(1e-9));
  const Domain b3 = Domain::ball(Point{0.0, 0.0, 0.0}, 2.0);
  CHECK(h_omega(b3, Point{0.0, 1.0, 0.0}, cfg).value == doctest::Approx(-std::log(3.0)).epsilon(1e-9));
  CHECK_THROWS_AS(h_omega(b, Point{1.0, 0.0}, cfg), DivergenceError);
  CHECK_THROWS_AS(h_omega(b, Point{2.0, 0.0}, cfg), DivergenceError);
  QuadConfig mc;
  mc.mc_samples = 200000;
  const auto est = h_omega_mc(b, Point{0.5, 0.0}, mc);
  CHECK(std::fabs(est.value + std::log(0.75)) < 5.0 * est.error_estimate);
}

TEST_CASE("logarithmic Laplacian") {
  QuadConfig cfg;
  cfg.rel_tol = 1e-9;
  for (int n : {2, 3}) {
    const double exact = 2.0 * specfun::kLn2 + specfun::digamma(0.5 * n);
    CHECK(log_laplacian(gaussian(), Point::zero(n), cfg).value == doctest::Approx(exact).epsilon(1e-6));
  }
  const Domain b = Domain::ball(Point{0.0, 0.0}, 2.0);
  const double rho = specfun::log_constants(2).rho_N;
  const auto one = CompactField::constant(1.0);
  const double expected = rho - 2.0 * std::log(2.0);
  CHECK(log_laplacian_compact(one, b, Point{0.0, 0.0}, cfg).value == doctest::Approx(expected).epsilon(1e-8));
  CHECK(log_laplacian(one.extend(b), Point{0.0, 0.0}, cfg).value == doctest::Approx(expected).epsilon(1e-6));
  CHECK_THROWS_AS(log_laplacian_compact(one, b, Point{2.0, 0.0}, cfg), DivergenceError);
}

TEST_CASE("compact and whole-space log Laplacian agree off the centre") {
  QuadConfig cfg;
  cfg.rel_tol = 1e-9;
  const Domain b = Domain::unit_ball(2);
  const auto u = torsion(b, 1.0);
  const auto f = CompactField::radial([](double r) { return 0.25 * (1.0 - r * r); });
  for (const Point& x : {Point{0.3, 0.2}, Point{1.4, 0.0}}) {
    const double a = log_laplacian(u, x, cfg).value;
    const double c = log_laplacian_compact(f, b, x, cfg).value;
    CHECK(a == doctest::Approx(c).epsilon(1e-6));
  }
}
