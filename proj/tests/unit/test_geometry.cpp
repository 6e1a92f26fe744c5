#include <cmath>

#include "doctest.h"
#include "fraclab/errors.hpp"
#include "fraclab/geometry.hpp"
#include "fraclab/specfun.hpp"

using namespace fraclab;
using specfun::kPi;

TEST_CASE("ball measures and distance") {
  const Domain b = Domain::ball(Point{1.0, -2.0}, 2.0);
  const auto m = b.measures();
  CHECK(m.volume == doctest::Approx(4.0 * kPi).epsilon(1e-14));
  CHECK(m.diameter == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(b.surface_area() == doctest::Approx(4.0 * kPi).epsilon(1e-14));
  CHECK(b.delta(Point{1.0, -2.0}) == doctest::Approx(2.0));
  CHECK(b.delta(Point{4.0, -2.0}) == doctest::Approx(-1.0));
  CHECK(b.contains(Point{2.0, -2.0}));
  CHECK_FALSE(b.contains(Point{3.0, -2.0}));
  const Domain u3 = Domain::unit_ball(3);
  CHECK(u3.measures().volume == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-14));
  CHECK(u3.surface_area() == doctest::Approx(4.0 * kPi).epsilon(1e-14));
}

TEST_CASE("ellipsoid measures and reference map") {
  const Domain e = Domain::ellipsoid(SymMatrix::diagonal({1.0 / 4.0, 1.0}));
  const auto m = e.measures();
  CHECK(m.volume == doctest::Approx(2.0 * kPi).epsilon(1e-13));
  CHECK(m.diameter == doctest::Approx(4.0).epsilon(1e-13));
  CHECK(e.max_semi_axis() == doctest::Approx(2.0));
  CHECK(e.min_semi_axis() == doctest::Approx(1.0));
  // Ramanujan II is accurate to ~1e-10 relative at this eccentricity.
  const double a = 2.0, b = 1.0, h = (a - b) * (a - b) / ((a + b) * (a + b));
  const double perim = kPi * (a + b) * (1.0 + 3.0 * h / (10.0 + std::sqrt(4.0 - 3.0 * h)));
  CHECK(e.surface_area() == doctest::Approx(perim).epsilon(1e-8));
  const Point y{0.3, -0.4};
  const Point x = e.from_reference(y);
  CHECK(e.level(x) == doctest::Approx(y.norm2()).epsilon(1e-14));
  const Point back = e.to_reference(x);
  CHECK(back[0] == doctest::Approx(y[0]));
  CHECK(back[1] == doctest::Approx(y[1]));
  CHECK(e.jacobian() == doctest::Approx(2.0));
}

TEST_CASE("ellipsoid distance to the boundary") {
  const Domain e = Domain::ellipsoid(SymMatrix::diagonal({1.0 / 4.0, 1.0}));
  CHECK(e.delta(Point{0.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(e.delta(Point{1.5, 0.0}) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(e.delta(Point{0.0, 1.5}) == doctest::Approx(-0.5).epsilon(1e-10));
  const Point p = e.project_to_boundary(Point{1.0, 0.5});
  CHECK(e.level(p) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("ray exits and line intervals") {
  const Domain b = Domain::unit_ball(2);
  CHECK(b.ray_exit(Point{0.5, 0.0}, Point{1.0, 0.0}) == doctest::Approx(0.5));
  CHECK(b.ray_exit(Point{0.5, 0.0}, Point{-1.0, 0.0}) == doctest::Approx(1.5));
  const auto iv = b.line_interval(Point{-3.0, 0.0}, Point{1.0, 0.0});
  REQUIRE(iv.has_value());
  CHECK(iv->first == doctest::Approx(2.0));
  CHECK(iv->second == doctest::Approx(4.0));
  CHECK_FALSE(b.line_interval(Point{0.0, 2.0}, Point{1.0, 0.0}).has_value());
}

TEST_CASE("boundary quadrature integrates length and area") {
  const Domain e = Domain::ellipsoid(SymMatrix::diagonal({1.0 / 4.0, 1.0}));
  const auto q = boundary_quadrature(e, 256);
  double len = 0.0;
  for (double w : q.weights) len += w;
  CHECK(len == doctest::Approx(e.surface_area()).epsilon(1e-10));
  const auto q3 = boundary_quadrature(Domain::unit_ball(3), 24);
  double area = 0.0;
  double flux = 0.0;
  for (std::size_t i = 0; i < q3.nodes.size(); ++i) {
    area += q3.weights[i];
    flux += q3.weights[i] * q3.normals[i].dot(q3.nodes[i]);
  }
  CHECK(area == doctest::Approx(4.0 * kPi).epsilon(1e-12));
  CHECK(flux == doctest::Approx(4.0 * kPi).epsilon(1e-12));
}

TEST_CASE("domain literals and validation") {
  const Domain b = parse_domain("ball:2.5", 3);
  CHECK(b.is_ball());
  CHECK(b.dim() == 3);
  CHECK(b.radius() == doctest::Approx(2.5));
  const Domain e = parse_domain("ellipsoid:0.25,0,1", 0);
  CHECK(e.kind() == DomainKind::kEllipsoid);
  CHECK_THROWS_AS(parse_domain("cube:1", 2), DomainError);
  CHECK_THROWS_AS(parse_domain("ball:1", 5), CapabilityError);
  CHECK_THROWS_AS(Domain::ball(Point{0.0, 0.0}, -1.0), DomainError);
  CHECK_THROWS_AS(e.radius(), CapabilityError);
}
