#include <cmath>

#include "doctest.h"
#include "fraclab/bounds.hpp"
#include "fraclab/errors.hpp"
#include "fraclab/specfun.hpp"

using namespace fraclab;

// Frozen after agreement of the Gauss-Kronrod and adaptive Simpson rules to 1e-13.
constexpr double kQ21 = 0.0154453051629048;
constexpr double kQ31 = 0.00528739181212648;
constexpr double kPLower2Half = 0.01899772193;

TEST_CASE("q_{N,s} by two rules") {
  for (int n : {2, 3}) {
    for (double s : {0.25, 0.5, 0.75, 1.0}) {
      CHECK(q_constant(n, s) == doctest::Approx(q_constant_simpson(n, s)).epsilon(1e-8));
    }
  }
  CHECK(q_constant(2, 1.0) == doctest::Approx(kQ21).epsilon(1e-12));
  CHECK(q_constant(3, 1.0) == doctest::Approx(kQ31).epsilon(1e-12));
  CHECK(q_integrand(2, 1e-12) < 1e-10);
  double prev = 0.0;
  for (double s : {0.25, 0.5, 0.75, 1.0}) {
    const double q = q_constant(2, s);
    CHECK(q > prev);
    CHECK(std::fabs(q_constant(2, std::min(1.0, s + 1e-4)) - q) <= 1e-3);
    prev = q;
  }
  CHECK_THROWS_AS(q_constant(2, 0.0), DomainError);
}

TEST_CASE("explicit lower bound for p_s") {
  const Domain b = Domain::unit_ball(2);
  CHECK(p_s_lower(2, 1.0, b) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(p_s_lower(2, 0.5, b) == doctest::Approx(kPLower2Half).epsilon(1e-9));
  const double g = specfun::gamma(0.5) * specfun::gamma(1.5);
  const double direct = (1.0 / specfun::kPi) * std::pow(std::sqrt(3.0) / (4.0 * g), 2.0) * specfun::kPi / 4.0;
  CHECK(p_s_lower(2, 0.5, b) == doctest::Approx(direct).epsilon(1e-12));
  CHECK(p_s_lower(2, 1e-6, b) < 1e-5);
}

TEST_CASE("numeric p_s, min h and m_s on the unit disc") {
  QuadConfig cfg;
  const Domain b = Domain::unit_ball(2);
  CHECK(std::fabs(min_h_omega(b, cfg)) < 1e-4);
  const double p1 = p_s_numeric(b, Order(1.0), cfg);
  CHECK(p1 <= 1.0 + 1e-9);
  CHECK(p1 >= 0.25);
  for (double s : {0.5, 0.75, 0.9}) CHECK(p_s_numeric(b, Order(s), cfg) >= p_s_lower(2, s, b));
  const double rho = specfun::log_constants(2).rho_N;
  const double m = m_s(b, Order(0.5), cfg);
  CHECK(m >= min_h_omega(b, cfg) + rho + p_s_numeric(b, Order(0.5), cfg) - 1e-9);
  CHECK(m_s(Domain::unit_ball(2), Order(0.5), cfg) < m_s(Domain::ball(Point{0.0, 0.0}, 0.5), Order(0.5), cfg));
}

TEST_CASE("bound chain on the unit disc") {
  QuadConfig cfg;
  const Domain b = Domain::unit_ball(2);
  const auto r1 = green_norm_bound(b, Order(1.0), cfg);
  CHECK(r1.norm_numeric == doctest::Approx(0.25));
  CHECK(r1.bound_old == doctest::Approx(0.7930).epsilon(1e-4 / 0.7930));
  CHECK(r1.chain_holds());
  const auto r5 = green_norm_bound(b, Order(0.5), cfg);
  CHECK(r5.norm_numeric == doctest::Approx(0.6366198).epsilon(1e-7));
  CHECK(r5.bound_old == doctest::Approx(std::exp(-0.5 * specfun::log_constants(2).rho_N)).epsilon(1e-6));
  CHECK(r5.chain_holds());
  CHECK_THROWS_AS(green_norm_bound(Domain::ellipsoid(SymMatrix::diagonal({1.0, 0.5})), Order(0.5), cfg),
                  CapabilityError);
}
