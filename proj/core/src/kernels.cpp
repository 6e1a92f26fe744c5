#include "fraclab/kernels.hpp"

#include <cmath>

#include "fraclab/specfun.hpp"

namespace fraclab {

using specfun::kPi;

double fundamental_solution(int dim, double s, const Point& z) {
  if (z.dim() != dim) throw DomainError("fundamental_solution: dimension mismatch");
  const double r = z.norm();
  if (r == 0.0) throw SingularityError("fundamental_solution: z = 0");
  return specfun::riesz_constant(dim, s) * std::pow(r, 2.0 * s - dim);
}

namespace {

// Ball Green function with the s-dependent constants hoisted out.
class GreenEval {
 public:
  GreenEval(int dim, double s, double radius) : n_(dim), s_(s), r_(radius) {
    if (!(s > 0.0 && s <= 1.0)) throw DomainError("green_ball: s must lie in (0,1]");
    if (!(radius > 0.0)) throw DomainError("green_ball: radius must be positive");
    log_form_ = (dim == 2 && s == 1.0);
    if (!log_form_) {
      b_ = 0.5 * dim - s;
      const double g = specfun::gamma(s);
      pref_ = specfun::gamma(0.5 * dim) / (std::pow(4.0, s) * std::pow(kPi, 0.5 * dim) * g * g);
      full_beta_ = specfun::beta(s, b_);
    }
  }

  // x, y relative to the ball centre.
  double operator()(const Point& x, const Point& y) const {
    const double ax = x.norm();
    const double ay = y.norm();
    if (!(ax < r_) || !(ay < r_)) return 0.0;
    const double d2 = (x - y).norm2();
    if (d2 == 0.0) throw SingularityError("green_ball: x == y");
    const double r0 = (r_ - ax) * (r_ + ax) * (r_ - ay) * (r_ + ay) / (r_ * r_ * d2);
    if (log_form_) return std::log1p(r0) / (4.0 * kPi);
    const double w = r0 / (1.0 + r0);
    double inc;
    if (w <= 0.5) {
      inc = specfun::incomplete_beta_regularized(w, s_, b_);
    } else {
      inc = 1.0 - specfun::incomplete_beta_regularized(1.0 / (1.0 + r0), b_, s_);
    }
    return pref_ * std::pow(d2, s_ - 0.5 * n_) * inc * full_beta_;
  }

 private:
  int n_;
  double s_;
  double r_;
  bool log_form_ = false;
  double b_ = 0.0;
  double pref_ = 0.0;
  double full_beta_ = 0.0;
};

void require_ball(const Domain& d, const char* who) {
  if (!d.is_ball()) throw CapabilityError(std::string(who) + ": only ball domains supported");
}

// Angular mean over the sphere of radius rho of G(r e1, .), times |S^{N-1}|.
double green_sphere_mean(const GreenEval& g, int dim, double r, double rho, const quad::Tol& tol,
                         long& evals) {
  Point x = Point::zero(dim);
  x[0] = r;
  if (r == 0.0) {
    Point y = Point::zero(dim);
    y[0] = rho;
    return specfun::sphere_area(dim) * g(x, y);
  }
  auto f = [&](double th) {
    Point y = Point::zero(dim);
    y[0] = rho * std::cos(th);
    y[1] = rho * std::sin(th);
    const double v = g(x, y);
    return dim == 2 ? 2.0 * v : 2.0 * kPi * std::sin(th) * v;
  };
  const auto res = quad::tanh_sinh(f, 0.0, kPi, tol);
  evals += res.evaluations;
  return res.value;
}

}  // namespace

double green_ball(const Order& s, const Point& x, const Point& y, double radius) {
  if (x.dim() != y.dim()) throw DomainError("green_ball: dimension mismatch");
  return GreenEval(x.dim(), s.value(), radius)(x, y);
}

double green_ball(const Domain& ball, const Order& s, const Point& x, const Point& y) {
  require_ball(ball, "green_ball");
  return green_ball(s, x - ball.center(), y - ball.center(), ball.radius());
}

IntegralResult green_apply(const Domain& ball, const CompactField& f, const Order& s,
                           const Point& x, const QuadConfig& cfg) {
  require_ball(ball, "green_apply");
  cfg.validate();
  s.require_operator_range();
  if (!ball.contains(x)) return {};
  const int n = ball.dim();
  const double rad = ball.radius();
  const GreenEval g(n, s.value(), rad);
  const Point xc = x - ball.center();
  if (f.is_radial() && ball.is_centered_ball()) {
    const double r = xc.norm();
    const quad::Tol inner = cfg.tol().tighter(0.01);
    long evals = 0;
    auto h = [&](double rho) {
      return f.radial_profile(rho) * std::pow(rho, n - 1) *
             green_sphere_mean(g, n, r, rho, inner, evals);
    };
    IntegralResult out;
    if (r > 0.0) out += quad::tanh_sinh(h, 0.0, r, cfg.tol().tighter(0.1));
    out += quad::tanh_sinh(h, r, rad, cfg.tol().tighter(0.1));
    out.evaluations += evals;
    return out;
  }
  auto integrand = [&](const Point& y, double) {
    if (y == x) return 0.0;
    return g(xc, y - ball.center()) * f(y);
  };
  return integrate_polar_interior(ball, x, integrand, cfg.tol(), cfg.max_subdiv);
}

double poisson_ball(const Order& s, const Point& z, const Point& y, double radius) {
  s.require_open_range();
  const double az = z.norm();
  const double ay = y.norm();
  if (!(az < radius)) throw DomainError("poisson_ball: z must lie inside the ball");
  if (ay == radius) throw SingularityError("poisson_ball: |y| = R");
  if (!(ay > radius)) throw DomainError("poisson_ball: y must lie outside the ball");
  const double num = (radius - az) * (radius + az);
  const double den = (ay - radius) * (ay + radius);
  return specfun::ball_poisson_constant(z.dim(), s.value()) * std::pow(num / den, s.value()) *
         std::pow((z - y).norm2(), -0.5 * z.dim());
}

double poisson_ball_classical(const Point& z, const Point& y, double radius) {
  const int n = z.dim();
  const double az = z.norm();
  if (!(az < radius)) throw DomainError("poisson_ball_classical: z must lie inside the ball");
  if (std::fabs(y.norm() - radius) > 1e-10 * radius) {
    throw DomainError("poisson_ball_classical: y must lie on the sphere |y| = R");
  }
  return (radius - az) * (radius + az) /
         (radius * specfun::sphere_area(n) * std::pow((z - y).norm2(), 0.5 * n));
}

namespace {

// int_{|y-c| > R} F(y) dy for F with an (|y-c| - R)^{-sing} boundary singularity.
// The shell R < r < 2R uses r - R = R u^{1/(1-sing)}; the tail uses r = 2R / v.
template <class F>
IntegralResult ball_exterior_integral(const Domain& ball, double sing, const Point& axis, F&& fy,
                                      const quad::Tol& tol, int max_subdiv) {
  const int n = ball.dim();
  const double rad = ball.radius();
  const Point c = ball.center();
  const double p = 1.0 / (1.0 - sing);
  const quad::Tol inner = tol.tighter(0.1);
  long evals = 0;
  bool ok = true;
  auto ray = [&](const Point& w) {
    auto shell = [&](double u) {
      const double t = rad * std::pow(u, p);
      if (!(t > 1e-200 * rad)) return 0.0;
      const double r = rad + t;
      const double dr = rad * p * std::pow(u, p - 1.0);
      return fy(c + r * w, r, t) * std::pow(r, n - 1) * dr;
    };
    auto tail = [&](double v) {
      const double r = 2.0 * rad / v;
      return fy(c + r * w, r, r - rad) * std::pow(r, n - 1) * 2.0 * rad / (v * v);
    };
    auto res = quad::tanh_sinh(shell, 0.0, 1.0, inner) + quad::tanh_sinh(tail, 0.0, 1.0, inner);
    evals += res.evaluations;
    ok = ok && res.converged;
    return res.value;
  };
  auto out = quad::integrate_sphere(n, axis, ray, tol, max_subdiv);
  out.evaluations += evals;
  out.converged = out.converged && ok;
  return out;
}

// R^{N-1} int_S F(c + R w) dw.
template <class F>
IntegralResult ball_boundary_integral(const Domain& ball, const Point& axis, F&& fy,
                                      const quad::Tol& tol, int max_subdiv) {
  const double rad = ball.radius();
  const Point c = ball.center();
  auto g = [&](const Point& w) { return fy(c + rad * w); };
  return quad::integrate_sphere(ball.dim(), axis, g, tol, max_subdiv)
      .scaled(std::pow(rad, ball.dim() - 1));
}

Point axis_of(const Point& v, int dim) {
  return v.norm() > 0.0 ? v : Point::unit(dim, 0);
}

// (R^2 - |z|^2)^s / (|y|^2 - R^2)^s factor written with t = |y| - R, relative coordinates.
double poisson_ratio(double s, double rad, double az, double ay, double t) {
  return std::pow((rad - az) * (rad + az) / (t * (ay + rad)), s);
}

void require_interior(const Domain& ball, const Point& z, const char* who) {
  const double az = distance(z, ball.center());
  if (az == ball.radius()) throw SingularityError(std::string(who) + ": point on the boundary");
  if (!(az < ball.radius())) throw DomainError(std::string(who) + ": point outside the ball");
}

}  // namespace

IntegralResult poisson_extend(const Domain& ball, const ScalarField& g, const Order& s,
                              const Point& x, const QuadConfig& cfg) {
  require_ball(ball, "poisson_extend");
  cfg.validate();
  s.require_operator_range();
  if (!ball.contains(x)) return {g(x), 0.0, 1, true};
  const int n = ball.dim();
  const double rad = ball.radius();
  const Point xc = x - ball.center();
  const double ax = xc.norm();
  if (s.is_local()) {
    auto fy = [&](const Point& y) {
      return poisson_ball_classical(xc, y - ball.center(), rad) * g(y);
    };
    return ball_boundary_integral(ball, axis_of(xc, n), fy, cfg.tol(), cfg.max_subdiv);
  }
  const double sv = s.value();
  const double tau = specfun::ball_poisson_constant(n, sv);
  auto fy = [&](const Point& y, double r, double t) {
    if (!(t > 0.0)) return 0.0;
    return tau * poisson_ratio(sv, rad, ax, r, t) * std::pow((x - y).norm2(), -0.5 * n) * g(y);
  };
  return ball_exterior_integral(ball, sv, axis_of(xc, n), fy, cfg.tol(), cfg.max_subdiv);
}

IntegralResult poisson_from_green(const Domain& ball, const Order& s, const Point& z,
                                  const Point& y, const QuadConfig& cfg) {
  require_ball(ball, "poisson_from_green");
  s.require_open_range();
  require_interior(ball, z, "poisson_from_green");
  if (ball.contains(y)) throw DomainError("poisson_from_green: y must lie outside the ball");
  const int n = ball.dim();
  const GreenEval g(n, s.value(), ball.radius());
  const Point zc = z - ball.center();
  auto integrand = [&](const Point& w, double) {
    if (w == z) return 0.0;
    return g(zc, w - ball.center()) * std::pow((w - y).norm2(), -0.5 * n - s.value());
  };
  return integrate_polar_interior(ball, z, integrand, cfg.tol(), cfg.max_subdiv)
      .scaled(specfun::frac_normalization(n, s.value()));
}

IntegralResult comp_poisson_kernel(const Domain& ball, const Order& s, const Point& x,
                                   const Point& z, const QuadConfig& cfg) {
  require_ball(ball, "comp_poisson_kernel");
  cfg.validate();
  s.require_operator_range();
  require_interior(ball, x, "comp_poisson_kernel");
  require_interior(ball, z, "comp_poisson_kernel");
  const int n = ball.dim();
  const double rad = ball.radius();
  const double cn = specfun::log_constants(n).c_N;
  const Point zc = z - ball.center();
  const double az = zc.norm();
  if (s.is_local()) {
    auto fy = [&](const Point& y) {
      return poisson_ball_classical(zc, y - ball.center(), rad) * std::pow((x - y).norm2(), -0.5 * n);
    };
    return ball_boundary_integral(ball, axis_of(zc, n), fy, cfg.tol(), cfg.max_subdiv).scaled(cn);
  }
  const double sv = s.value();
  const double tau = specfun::ball_poisson_constant(n, sv);
  auto fy = [&](const Point& y, double r, double t) {
    if (!(t > 0.0)) return 0.0;
    return poisson_ratio(sv, rad, az, r, t) * std::pow((z - y).norm2(), -0.5 * n) *
           std::pow((x - y).norm2(), -0.5 * n);
  };
  return ball_exterior_integral(ball, sv, axis_of(zc, n), fy, cfg.tol(), cfg.max_subdiv)
      .scaled(cn * tau);
}

IntegralResult comp_poisson_apply_generic(const Domain& ball, const CompactField& f,
                                          const Order& s, const Point& x,
                                          const QuadConfig& cfg) {
  require_ball(ball, "comp_poisson_apply");
  cfg.validate();
  s.require_operator_range();
  require_interior(ball, x, "comp_poisson_apply");
  const int n = ball.dim();
  const double rad = ball.radius();
  const double cn = specfun::log_constants(n).c_N;
  const Point xc = x - ball.center();
  const quad::Tol inner = cfg.tol().tighter(0.1);
  long evals = 0;
  if (s.is_local()) {
    // beta(y) = int_B P_1(z,y) f(z) dz, polar around the boundary point y.
    auto fy = [&](const Point& y) {
      const Point yc = y - ball.center();
      auto pz = [&](const Point& z, double) {
        const Point zc = z - ball.center();
        if (!(zc.norm() < rad)) return 0.0;
        return poisson_ball_classical(zc, rad / yc.norm() * yc, rad) * f(z);
      };
      const auto b = integrate_polar_interior(ball, y, pz, inner, cfg.max_subdiv);
      evals += b.evaluations;
      return std::pow((x - y).norm2(), -0.5 * n) * b.value;
    };
    auto out = ball_boundary_integral(ball, axis_of(xc, n), fy, cfg.tol(), cfg.max_subdiv);
    out.evaluations += evals;
    return out.scaled(cn);
  }
  const double sv = s.value();
  const double tau = specfun::ball_poisson_constant(n, sv);
  auto fy = [&](const Point& y, double r, double t) {
    if (!(t > 0.0)) return 0.0;
    auto pz = [&](const Point& z, double rho) {
      const double az = distance(z, ball.center());
      if (!(az < rad)) return 0.0;
      return poisson_ratio(sv, rad, az, r, t) * std::pow(rho, -n) * f(z);
    };
    const auto b = integrate_polar_interior(ball, y, pz, inner, cfg.max_subdiv);
    evals += b.evaluations;
    return std::pow((x - y).norm2(), -0.5 * n) * b.value;
  };
  auto out = ball_exterior_integral(ball, sv, axis_of(xc, n), fy, cfg.tol(), cfg.max_subdiv);
  out.evaluations += evals;
  return out.scaled(cn * tau);
}

IntegralResult comp_poisson_apply(const Domain& ball, const CompactField& f, const Order& s,
                                  const Point& x, const QuadConfig& cfg) {
  if (!(f.is_radial() && ball.is_centered_ball())) {
    return comp_poisson_apply_generic(ball, f, s, x, cfg);
  }
  cfg.validate();
  s.require_operator_range();
  require_interior(ball, x, "comp_poisson_apply");
  const int n = ball.dim();
  const double rad = ball.radius();
  const double ax = x.norm();
  const double q = (rad - ax) * (rad + ax);
  const quad::Tol inner = cfg.tol().tighter(0.01);
  if (s.is_local()) {
    auto m = [&](double rho) { return std::pow(rho, n - 1) * f.radial_profile(rho); };
    auto b = quad::tanh_sinh(m, 0.0, rad, inner);
    return b.scaled(2.0 * std::pow(rad, 2 - n) / q);
  }
  // Exterior profile tau_f(r) = int_B P_s(z, r e) f(z) dz, reduced with the sphere mean
  // of |z - y|^{-N}; then 2 int_R^inf tau_f(r) r / (r^2 - |x|^2) dr.
  const double sv = s.value();
  const double tau = specfun::ball_poisson_constant(n, sv);
  const double area = specfun::sphere_area(n);
  long evals = 0;
  auto profile = [&](double r) {
    auto g = [&](double rho) {
      return std::pow((rad - rho) * (rad + rho), sv) * std::pow(rho, n - 1) *
             f.radial_profile(rho) / ((r - rho) * (r + rho));
    };
    const auto res = quad::tanh_sinh(g, 0.0, rad, inner);
    evals += res.evaluations;
    return tau * area * std::pow(r, 2 - n) * res.value;
  };
  const double p = 1.0 / (1.0 - sv);
  auto shell = [&](double u) {
    const double t = rad * std::pow(u, p);
    if (!(t > 1e-200 * rad)) return 0.0;
    const double r = rad + t;
    const double dr = rad * p * std::pow(u, p - 1.0);
    return std::pow(t * (r + rad), -sv) * profile(r) * r / ((r - ax) * (r + ax)) * dr;
  };
  auto tail = [&](double v) {
    const double r = 2.0 * rad / v;
    return std::pow((r - rad) * (r + rad), -sv) * profile(r) * r / ((r - ax) * (r + ax)) * 2.0 *
           rad / (v * v);
  };
  auto out = quad::tanh_sinh(shell, 0.0, 1.0, cfg.tol().tighter(0.1)) +
             quad::tanh_sinh(tail, 0.0, 1.0, cfg.tol().tighter(0.1));
  out.evaluations += evals;
  return out.scaled(2.0);
}

}  // namespace fraclab
