#include "fraclab/operators.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fraclab/kernels.hpp"
#include "fraclab/radial_table.hpp"
#include "fraclab/specfun.hpp"

namespace fraclab {

double fd_laplacian(const std::function<double(const Point&)>& f, const Point& x, double h) {
  const double f0 = f(x);
  double acc = 0.0;
  for (int i = 0; i < x.dim(); ++i) {
    const Point e = h * Point::unit(x.dim(), i);
    acc += -f(x + 2.0 * e) + 16.0 * f(x + e) - 30.0 * f0 + 16.0 * f(x - e) - f(x - 2.0 * e);
  }
  return acc / (12.0 * h * h);
}

namespace {

// Distance scale for the local stencil: distance to the non-smooth set, or the support
// size for smooth fields.
double smooth_scale(const ScalarField& u, const Point& x) {
  if (!u.support_domain) return 1.0;
  if (u.smoothness == Smoothness::kSmooth) return u.support_domain->max_semi_axis();
  const double d = std::fabs(u.support_domain->delta(x));
  if (!(d > 0.0)) throw ContractError("operator evaluated on the non-smooth set of the field");
  return d;
}

void probe_tail(const ScalarField& u, const Point& x) {
  if (u.support == SupportKind::kCompactInDomain && u.support_domain) return;
  for (int i = 0; i < x.dim(); ++i) {
    for (double sg : {1.0, -1.0}) {
      const Point e = sg * Point::unit(x.dim(), i);
      const double a = std::fabs(u(x + 1e3 * e));
      const double b = std::fabs(u(x + 1e6 * e));
      if (a > 0.0 && b >= 0.9 * a) {
        throw DivergenceError("field does not decay at infinity; L_Delta integral diverges");
      }
    }
  }
}

// Sorted crossing distances of the ray x + t w (t > 0) with the boundary of dom.
std::vector<double> crossings(const std::optional<Domain>& dom, const Point& x, const Point& w) {
  std::vector<double> out;
  if (!dom) return out;
  const auto iv = dom->line_interval(x, w);
  if (!iv) return out;
  if (iv->first > 0.0) out.push_back(iv->first);
  if (iv->second > 0.0) out.push_back(iv->second);
  return out;
}

// Integrate g over [a, b] split at the given cut points.
template <class G>
IntegralResult piecewise(G&& g, double a, double b, std::vector<double> cuts,
                         const quad::Tol& tol) {
  cuts.push_back(a);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  IntegralResult acc;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = std::max(a, cuts[i]);
    const double hi = std::min(b, cuts[i + 1]);
    if (hi > lo) acc += quad::tanh_sinh(g, lo, hi, tol);
  }
  return acc;
}

Point toward_feature(const std::optional<Domain>& dom, const Point& x) {
  if (dom) {
    const Point ax = dom->project_to_boundary(x) - x;
    if (ax.norm() > 0.0) return ax;
  }
  return Point::unit(x.dim(), 0);
}

template <class Ray>
IntegralResult sphere_of_rays(int dim, const Point& axis, Ray&& ray, const QuadConfig& cfg) {
  long evals = 0;
  bool ok = true;
  auto g = [&](const Point& w) {
    const IntegralResult r = ray(w);
    evals += r.evaluations;
    ok = ok && r.converged;
    return r.value;
  };
  auto res = quad::integrate_sphere(dim, axis, g, cfg.tol(), cfg.max_subdiv);
  res.evaluations += evals;
  res.converged = res.converged && ok;
  return res;
}

}  // namespace

IntegralResult frac_laplacian(const ScalarField& u, const Point& x, const Order& s,
                              const QuadConfig& cfg) {
  s.require_operator_range();
  cfg.validate();
  if (!s.is_local()) {
    return integrate_pv_second_difference(u, x, s.value(), cfg)
        .scaled(specfun::frac_normalization(x.dim(), s.value()));
  }
  const double h = 1e-4 * smooth_scale(u, x);
  const double l4 = fd_laplacian(u.eval, x, h);
  const double l2 = fd_laplacian(u.eval, x, 2.0 * h);
  return {-l4, std::fabs(l4 - l2) / 15.0, 1 + 8L * x.dim(), true};
}

IntegralResult log_laplacian(const ScalarField& u, const Point& x, const QuadConfig& cfg) {
  cfg.validate();
  const int n = x.dim();
  const auto lc = specfun::log_constants(n);
  probe_tail(u, x);
  const double ux = u(x);
  if (!std::isfinite(ux)) throw EvaluationError("log_laplacian: field not finite at x");
  const quad::Tol inner = cfg.tol().tighter(0.1);
  const bool compact = u.support == SupportKind::kCompactInDomain && u.support_domain;
  auto ray = [&](const Point& w) {
    std::vector<double> cuts = crossings(u.support_domain, x, w);
    const std::vector<double> back = crossings(u.support_domain, x, -1.0 * w);
    std::vector<double> both = cuts;
    both.insert(both.end(), back.begin(), back.end());
    auto near = [&](double rho) {
      return (2.0 * ux - u(x + rho * w) - u(x - rho * w)) / (2.0 * rho);
    };
    IntegralResult acc = piecewise(near, 0.0, 1.0, both, inner);
    auto far = [&](double rho) { return -u(x + rho * w) / rho; };
    const double last = cuts.empty() ? 1.0 : std::max(1.0, cuts.back());
    acc += piecewise(far, 1.0, last, cuts, inner);
    if (!compact) {
      auto tail = [&](double v) { return -u(x + (last / v) * w) / v; };
      acc += quad::tanh_sinh(tail, 0.0, 1.0, inner);
    }
    return acc;
  };
  auto res = sphere_of_rays(n, toward_feature(u.support_domain, x), ray, cfg).scaled(lc.c_N);
  res.value += lc.rho_N * ux;
  return res;
}

IntegralResult h_omega(const Domain& domain, const Point& x, const QuadConfig& cfg) {
  cfg.validate();
  if (!domain.contains(x) || domain.delta(x) <= 0.0) {
    throw DivergenceError("h_Omega is +infinity on and outside the boundary");
  }
  const int n = domain.dim();
  auto g = [&](const Point& w) { return std::log(domain.ray_exit(x, w)); };
  auto res = quad::integrate_sphere(n, toward_feature(domain, x), g, cfg.tol(), cfg.max_subdiv);
  return res.scaled(-specfun::log_constants(n).c_N);
}

IntegralResult h_omega_mc(const Domain& domain, const Point& x, const QuadConfig& cfg) {
  cfg.validate();
  if (!domain.contains(x) || domain.delta(x) <= 0.0) {
    throw DivergenceError("h_Omega is +infinity on and outside the boundary");
  }
  const int n = domain.dim();
  const double lo = std::log(std::min(domain.delta(x), 1.0));
  const double hi = std::log(std::max(domain.measures().diameter, 1.0));
  const double weight = specfun::sphere_area(n) * (hi - lo);
  constexpr long kChunk = 8192;
  double sum = 0.0;
  double sum2 = 0.0;
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  std::normal_distribution<double> nd;
  for (long start = 0, chunk = 0; start < cfg.mc_samples; start += kChunk, ++chunk) {
    std::mt19937_64 rng(quad::stream_seed(cfg.seed, static_cast<std::uint64_t>(chunk)));
    const long end = std::min(cfg.mc_samples, start + kChunk);
    for (long i = start; i < end; ++i) {
      Point w(n);
      for (int k = 0; k < n; ++k) w[k] = nd(rng);
      w *= 1.0 / w.norm();
      const double rho = std::exp(lo + (hi - lo) * ud(rng));
      const bool inside = domain.contains(x + rho * w);
      double v = 0.0;
      if (rho < 1.0 && !inside) v = weight;
      if (rho > 1.0 && inside) v = -weight;
      sum += v;
      sum2 += v * v;
    }
  }
  const double m = static_cast<double>(cfg.mc_samples);
  const double mean = sum / m;
  const double err = std::sqrt(std::max(0.0, sum2 / m - mean * mean) / m);
  const double cn = specfun::log_constants(n).c_N;
  return {cn * mean, cn * err, cfg.mc_samples, true};
}

IntegralResult log_laplacian_compact(const CompactField& f, const Domain& domain, const Point& x,
                                     const QuadConfig& cfg) {
  cfg.validate();
  const int n = domain.dim();
  const auto lc = specfun::log_constants(n);
  const quad::Tol inner = cfg.tol().tighter(0.1);
  if (domain.delta(x) == 0.0) {
    throw DivergenceError("log_laplacian_compact: x on the boundary");
  }
  if (!domain.contains(x)) {
    auto g = [&](const Point& y, double rho) { return f(y) * std::pow(rho, -n); };
    return integrate_polar_interior(domain, x, g, cfg.tol(), cfg.max_subdiv).scaled(-lc.c_N);
  }
  const double fx = f(x);
  auto ray = [&](const Point& w) {
    auto g = [&](double rho) { return (fx - f(x + rho * w)) / rho; };
    return quad::tanh_sinh(g, 0.0, domain.ray_exit(x, w), inner);
  };
  auto res = sphere_of_rays(n, toward_feature(domain, x), ray, cfg).scaled(lc.c_N);
  const auto h = h_omega(domain, x, cfg);
  res.value += (h.value + lc.rho_N) * fx;
  res.error_estimate += h.error_estimate * std::fabs(fx);
  res.evaluations += h.evaluations;
  return res;
}

IntegralResult nonlocal_normal_derivative(const ScalarField& v, const Domain& domain,
                                          const Point& z, const Order& s,
                                          const QuadConfig& cfg) {
  s.require_open_range();
  cfg.validate();
  if (domain.level(z) <= 1.0) {
    throw DomainError("nonlocal_normal_derivative: z must lie outside the closed domain");
  }
  const int n = domain.dim();
  const double vz = v(z);
  const double e = -static_cast<double>(n) - 2.0 * s.value();
  auto g = [&](const Point& y, double rho) { return (vz - v(y)) * std::pow(rho, e); };
  return integrate_polar_interior(domain, z, g, cfg.tol(), cfg.max_subdiv)
      .scaled(specfun::frac_normalization(n, s.value()));
}

IntegralResult restriction_ws_from(const ScalarField& us, const Domain& domain, const Order& s,
                                   const Point& x, const QuadConfig& cfg) {
  s.require_open_range();
  cfg.validate();
  if (domain.contains(x)) return {};
  if (domain.delta(x) == 0.0) throw DivergenceError("restriction_ws: x on the boundary");
  const int n = domain.dim();
  const double e = -static_cast<double>(n) - 2.0 * s.value();
  auto g = [&](const Point& y, double rho) { return us(y) * std::pow(rho, e); };
  return integrate_polar_interior(domain, x, g, cfg.tol(), cfg.max_subdiv)
      .scaled(-specfun::frac_normalization(n, s.value()));
}

IntegralResult restriction_ws(const CompactField& f, const Domain& domain, const Order& s,
                              const Point& x, const QuadConfig& cfg) {
  s.require_open_range();
  cfg.validate();
  if (domain.contains(x)) return {};
  if (domain.delta(x) == 0.0) throw DivergenceError("restriction_ws: x on the boundary");
  const int n = domain.dim();
  if (!(f.is_radial() && domain.is_centered_ball())) {
    ScalarField us;
    us.eval = [&](const Point& y) { return green_apply(domain, f, s, y, cfg).value; };
    return restriction_ws_from(us, domain, s, x, cfg);
  }
  // Radial data: w_s(x) = -c int_0^R u_s(rho) rho^{N-1} M(|x|, rho) d rho with the sphere
  // mean M of |x - y|^{-N-2s}.
  const double r = x.norm();
  const double e = -0.5 * n - s.value();
  const quad::Tol inner = cfg.tol().tighter(0.1);
  long evals = 0;
  auto h = [&](double rho) {
    auto m = [&](double th) {
      const double d2 = r * r + rho * rho - 2.0 * r * rho * std::cos(th);
      const double v = std::pow(d2, e);
      return n == 2 ? 2.0 * v : 2.0 * specfun::kPi * std::sin(th) * v;
    };
    const auto mean = quad::tanh_sinh(m, 0.0, specfun::kPi, inner);
    Point y = Point::zero(n);
    y[0] = rho;
    const auto u = green_apply(domain, f, s, y, cfg);
    evals += mean.evaluations + u.evaluations;
    return u.value * std::pow(rho, n - 1) * mean.value;
  };
  auto res = quad::tanh_sinh(h, 0.0, domain.radius(), cfg.tol());
  res.evaluations += evals;
  return res.scaled(-specfun::frac_normalization(n, s.value()));
}

namespace {

InterchangeResult interchange_local(const ScalarField& u, const Domain& domain, const Point& x,
                                    const Order& s, const QuadConfig& cfg,
                                    const InterchangeOptions& opt) {
  const double delta = domain.delta(x);
  QuadConfig inner = cfg;
  inner.rel_tol = std::min(cfg.rel_tol, 1e-9);
  inner.abs_tol = std::min(cfg.abs_tol, 1e-12);
  InterchangeResult out;
  auto lap_u = [&](const Point& y) { return log_laplacian(u, y, inner).value; };
  const double h = opt.stencil_step * delta;
  out.lhs = -fd_laplacian(lap_u, x, h);
  // -Delta u on the domain, pulled back from a thin boundary layer where the
  // stencil would lose precision.
  const double scale = domain.max_semi_axis();
  const double layer = 1e-4 * scale;
  auto minus_lap = [&u, &domain, layer, scale](const Point& y) {
    Point q = y;
    double d = domain.delta(q);
    if (d < layer) {
      const Point c = domain.center();
      q = c + (1.0 - (layer - d) / std::max(distance(y, c), layer)) * (y - c);
      d = domain.delta(q);
    }
    return -fd_laplacian(u.eval, q, std::min(0.25 * d, 1e-3 * scale));
  };
  CompactField g;
  g.f = minus_lap;
  if (u.is_radial() && domain.is_centered_ball()) {
    const int n = domain.dim();
    g.radial_profile = [minus_lap, n](double rho) {
      Point q = Point::zero(n);
      q[0] = rho;
      return minus_lap(q);
    };
  }
  auto a = log_laplacian_compact(g, domain, x, cfg);
  out.rhs = a.value;
  out.error_estimate = a.error_estimate;
  out.evaluations = a.evaluations;
  if (opt.include_boundary_term) {
    auto b = comp_poisson_apply(domain, g, s, x, cfg);
    out.rhs += b.value;
    out.error_estimate += b.error_estimate;
    out.evaluations += b.evaluations;
  }
  return out;
}

}  // namespace

std::vector<InterchangeResult> interchange_residuals(const ScalarField& u, const Domain& domain,
                                                    const std::vector<Point>& xs,
                                                    const Order& s, const QuadConfig& cfg,
                                                    const InterchangeOptions& opt) {
  s.require_operator_range();
  cfg.validate();
  for (const auto& x : xs) {
    if (!domain.contains(x)) throw DomainError("interchange_residual: x must lie in the domain");
  }
  std::vector<InterchangeResult> results;
  if (s.is_local()) {
    for (const auto& x : xs) results.push_back(interchange_local(u, domain, x, s, cfg, opt));
    return results;
  }
  QuadConfig mid = cfg;
  mid.rel_tol = 0.1 * cfg.rel_tol;
  long table_evals = 0;
  ScalarField v;
  v.smoothness = Smoothness::kHolder;
  v.support = SupportKind::kAllSpace;
  v.support_domain = domain;
  ScalarField fs = v;
  auto lap_at = [&](const Point& y) { return log_laplacian(u, y, mid).value; };
  auto frac_at = [&](const Point& y) {
    if (domain.delta(y) == 0.0) return 0.0;
    return frac_laplacian(u, y, s, mid).value;
  };
  std::optional<RadialTable> vt;
  std::optional<RadialTable> ft;
  if (u.is_radial() && domain.is_centered_ball()) {
    // Both fields are radial: tabulate once, then sample the tables.
    const int n = domain.dim();
    const Point c = domain.center();
    auto on_axis = [n, c](double r) { return c + r * Point::unit(n, 0); };
    vt.emplace([&](double r) { return lap_at(on_axis(r)); }, domain.radius(), opt.table_levels);
    ft.emplace([&](double r) { return frac_at(on_axis(r)); }, domain.radius(), opt.table_levels);
    table_evals = vt->evaluations() + ft->evaluations();
    v.eval = [&](const Point& y) { return (*vt)(distance(y, c)); };
    fs.eval = [&](const Point& y) { return (*ft)(distance(y, c)); };
  } else {
    v.eval = lap_at;
    fs.eval = frac_at;
  }
  for (const auto& x : xs) {
    const auto l = frac_laplacian(v, x, s, cfg);
    const auto r = log_laplacian(fs, x, cfg);
    InterchangeResult out;
    out.lhs = l.value;
    out.rhs = r.value;
    out.error_estimate = l.error_estimate + r.error_estimate;
    out.evaluations = table_evals + l.evaluations + r.evaluations;
    results.push_back(out);
  }
  return results;
}

InterchangeResult interchange_residual(const ScalarField& u, const Domain& domain, const Point& x,
                                       const Order& s, const QuadConfig& cfg,
                                       const InterchangeOptions& opt) {
  return interchange_residuals(u, domain, {x}, s, cfg, opt).front();
}


}  // namespace fraclab
