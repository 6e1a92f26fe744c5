#include "fraclab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "fraclab/kernels.hpp"
#include "fraclab/operators.hpp"
#include "fraclab/specfun.hpp"

namespace fraclab {

double q_integrand(int dim, double t) {
  if (dim < 2) throw DomainError("q_integrand: N >= 2");
  if (!(t > 0.0)) return 0.0;
  const double n = dim;
  const double base = std::exp(t * std::log(3.0) + std::lgamma(0.5 * n) - n * std::log(2.0) -
                               std::lgamma(t) - std::lgamma(0.5 * n + 1.0 - t));
  const double denom = n - 2.0 * t;
  const double cn = specfun::log_constants(dim).c_N;
  if (denom <= 0.0) return base < 1.0 ? 0.0 : cn * base;
  return cn * std::pow(base, n / denom);
}

namespace {

void check_order(int dim, double s) {
  if (dim < 2) throw DomainError("bounds: N >= 2");
  if (!(s > 0.0 && s <= 1.0)) throw DomainError("bounds: s must lie in (0, 1]");
}

double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa,
                   double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double diff = left + right - whole;
  if (depth <= 0 || std::fabs(diff) <= 15.0 * tol) return left + right + diff / 15.0;
  return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

Domain centered(const Domain& ball) {
  if (!ball.is_ball()) throw CapabilityError("bounds: ball domains only");
  return Domain::ball(Point::zero(ball.dim()), ball.radius());
}

// Minimum of g(r) over 0 <= r < R: log-in-delta grid, then golden section on the bracket.
double radial_min(const std::function<double(double)>& g, double rad) {
  const int count = 24;
  std::vector<double> rs;
  std::vector<double> vs;
  for (int k = 0; k < count; ++k) {
    rs.push_back(rad - rad * std::pow(1e-3, static_cast<double>(k) / (count - 1)));
    vs.push_back(g(rs.back()));
  }
  const auto k = static_cast<int>(std::min_element(vs.begin(), vs.end()) - vs.begin());
  double a = rs[std::max(k - 1, 0)];
  double b = rs[std::min(k + 1, count - 1)];
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - phi * (b - a);
  double d = a + phi * (b - a);
  double fc = g(c);
  double fd = g(d);
  while (b - a > 1e-6 * rad) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = g(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = g(d);
    }
  }
  return std::min({vs[k], fc, fd});
}

}  // namespace

double q_constant(int dim, double s, const QuadConfig& cfg) {
  check_order(dim, s);
  quad::Tol tol = cfg.tol();
  tol.rel = std::min(tol.rel, 1e-12);
  tol.abs = std::min(tol.abs, 1e-14);
  return quad::gauss_kronrod([dim](double t) { return q_integrand(dim, t); }, 0.0, s, tol,
                             cfg.max_subdiv)
      .value;
}

double q_constant_simpson(int dim, double s, double tol) {
  check_order(dim, s);
  const std::function<double(double)> f = [dim](double t) { return q_integrand(dim, t); };
  const double fa = f(0.0);
  const double fm = f(0.5 * s);
  const double fb = f(s);
  const double whole = s / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, 0.0, s, fa, fm, fb, whole, tol, 40);
}

double p_s_lower(int dim, double s, const Domain& domain) {
  check_order(dim, s);
  if (domain.dim() != dim) throw DomainError("p_s_lower: dimension mismatch");
  const auto m = domain.measures();
  const double scale = m.volume * std::pow(m.diameter, -static_cast<double>(dim));
  if (s == 1.0) return specfun::log_constants(dim).c_N * scale;
  return q_integrand(dim, s) * scale;
}

double p_s_numeric(const Domain& ball, const Order& s, const QuadConfig& cfg) {
  const Domain b = centered(ball);
  const int n = b.dim();
  const auto one = CompactField::constant(1.0);
  return radial_min(
      [&](double r) { return comp_poisson_apply(b, one, s, r * Point::unit(n, 0), cfg).value; },
      b.radius());
}

double min_h_omega(const Domain& ball, const QuadConfig& cfg) {
  const Domain b = centered(ball);
  const int n = b.dim();
  return radial_min([&](double r) { return h_omega(b, r * Point::unit(n, 0), cfg).value; },
                    b.radius());
}

double m_s(const Domain& ball, const Order& s, const QuadConfig& cfg) {
  const Domain b = centered(ball);
  const int n = b.dim();
  const auto one = CompactField::constant(1.0);
  const double inner = radial_min(
      [&](double r) {
        const Point x = r * Point::unit(n, 0);
        return h_omega(b, x, cfg).value + comp_poisson_apply(b, one, s, x, cfg).value;
      },
      b.radius());
  return specfun::log_constants(n).rho_N + inner;
}

BoundReport green_norm_bound(const Domain& ball, const Order& s, const QuadConfig& cfg,
                             int tau_nodes) {
  const Domain b = centered(ball);
  const int n = b.dim();
  const double sv = s.value();
  check_order(n, sv);
  const auto meas = b.measures();
  const double rho = specfun::log_constants(n).rho_N;
  BoundReport rep;
  rep.s = sv;
  rep.norm_numeric = specfun::ball_torsion_constant(n, sv).value * std::pow(b.radius(), 2.0 * sv);
  rep.min_h = min_h_omega(b, cfg);
  rep.q_Ns = q_constant(n, sv, cfg);
  rep.bound_old = std::exp(-sv * (rep.min_h + rho));
  rep.bound_new =
      std::exp(-sv * (rep.min_h + rho) - rep.q_Ns * meas.volume * std::pow(meas.diameter, -n));
  const double integral =
      quad::gauss_legendre_fixed([&](double t) { return m_s(b, Order(t), cfg); }, 0.0, sv,
                                 tau_nodes);
  rep.bound_integral = std::exp(-integral);
  rep.m_s = m_s(b, s, cfg);
  rep.p_s_numeric = p_s_numeric(b, s, cfg);
  rep.p_s_lower = p_s_lower(n, sv, b);
  return rep;
}

}  // namespace fraclab
