#include "fraclab/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

#include "fraclab/specfun.hpp"

namespace fraclab {

void QuadConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw DomainError("tolerances must be positive");
  if (max_subdiv < 1) throw DomainError("max_subdiv must be >= 1");
  if (mc_samples < 100) throw DomainError("mc_samples must be >= 100");
  if (!(pv_inner_radius > 0.0 && pv_inner_radius < 1.0)) {
    throw DomainError("pv_inner_radius must lie in (0,1)");
  }
}

namespace quad {

const Rule& gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: n must be >= 1");
  static std::mutex mu;
  static std::map<int, Rule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(specfun::kPi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int it2 = 0; it2 < 100; ++it2) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return cache.emplace(n, std::move(r)).first->second;
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(seed) ^ (index * 0xd1342543de82ef95ULL + 1));
}

}  // namespace quad

namespace {

std::string fmt_point(const Point& y) {
  std::ostringstream os;
  os.precision(10);
  os << "(";
  for (int i = 0; i < y.dim(); ++i) os << (i ? "," : "") << y[i];
  os << ")";
  return os.str();
}

double checked(double v, const Point& y) {
  if (!std::isfinite(v)) throw EvaluationError("non-finite integrand at " + fmt_point(y));
  return v;
}

// int_a^b g(x + rho w, rho) rho^{N-1} d rho
IntegralResult radial_piece(const Point& x, const Point& w, double a, double b,
                            const PolarIntegrand& g, int dim, const quad::Tol& tol) {
  auto f = [&](double rho) {
    const Point y = x + rho * w;
    return checked(g(y, rho), y) * std::pow(rho, dim - 1);
  };
  return quad::tanh_sinh(f, a, b, tol);
}

// int_a^inf g(x + rho w, rho) rho^{N-1} d rho, a > 0, with rho = a / u.
IntegralResult radial_tail(const Point& x, const Point& w, double a, const PolarIntegrand& g,
                           int dim, const quad::Tol& tol) {
  auto f = [&](double u) {
    const double rho = a / u;
    const Point y = x + rho * w;
    return checked(g(y, rho), y) * std::pow(rho, dim - 1) * a / (u * u);
  };
  return quad::tanh_sinh(f, 0.0, 1.0, tol);
}

Point polar_axis(const Domain& d, const Point& x) {
  Point ax = d.contains(x) ? d.project_to_boundary(x) - x : d.center() - x;
  if (ax.norm() == 0.0) ax = Point::unit(d.dim(), 0);
  return ax;
}

// Angular breakpoints for the silhouette cone of a ball seen from an exterior point.
std::vector<double> cone_breaks(const Domain& d, const Point& x) {
  if (!d.is_ball() || d.contains(x)) return {};
  const double dist = distance(x, d.center());
  if (dist <= d.radius()) return {};
  const double th = std::asin(d.radius() / dist);
  if (d.dim() == 2) return {-th, th};
  return {th};
}

}  // namespace

IntegralResult integrate_polar_interior(const Domain& domain, const Point& x,
                                        const PolarIntegrand& g, const quad::Tol& tol,
                                        int max_subdiv) {
  const int n = domain.dim();
  const quad::Tol inner = tol.tighter(0.1);
  long evals = 0;
  bool ok = true;
  auto ray = [&](const Point& w) {
    const auto iv = domain.line_interval(x, w);
    if (!iv || iv->second <= 0.0) return 0.0;
    const double a = std::max(0.0, iv->first);
    const auto r = radial_piece(x, w, a, iv->second, g, n, inner);
    evals += r.evaluations;
    ok = ok && r.converged;
    return r.value;
  };
  auto res = quad::integrate_sphere(n, polar_axis(domain, x), ray, tol, max_subdiv,
                                    cone_breaks(domain, x));
  res.evaluations += evals;
  res.converged = res.converged && ok;
  return res;
}

IntegralResult integrate_polar_exterior(const Domain& domain, const Point& x,
                                        const PolarIntegrand& g, const quad::Tol& tol,
                                        int max_subdiv) {
  const int n = domain.dim();
  const quad::Tol inner = tol.tighter(0.1);
  const double scale = domain.max_semi_axis();
  long evals = 0;
  bool ok = true;
  auto ray = [&](const Point& w) {
    IntegralResult acc;
    const auto iv = domain.line_interval(x, w);
    if (!iv || iv->second <= 0.0) {
      const double l = scale + std::max(0.0, -domain.delta(x));
      acc += radial_piece(x, w, 0.0, l, g, n, inner);
      acc += radial_tail(x, w, l, g, n, inner);
    } else {
      if (iv->first > 0.0) acc += radial_piece(x, w, 0.0, iv->first, g, n, inner);
      acc += radial_tail(x, w, iv->second, g, n, inner);
    }
    evals += acc.evaluations;
    ok = ok && acc.converged;
    return acc.value;
  };
  auto res = quad::integrate_sphere(n, polar_axis(domain, x), ray, tol, max_subdiv,
                                    cone_breaks(domain, x));
  res.evaluations += evals;
  res.converged = res.converged && ok;
  return res;
}

namespace {

// Reference-ball polar coordinates: x = c + M (r w), dx = det M r^{N-1} dr dw.
template <class Radial>
IntegralResult reference_sphere(const Domain& d, Radial&& radial, const quad::Tol& tol,
                                int max_subdiv) {
  long evals = 0;
  bool ok = true;
  auto ray = [&](const Point& w) {
    const auto r = radial(w);
    evals += r.evaluations;
    ok = ok && r.converged;
    return r.value;
  };
  auto res = quad::integrate_sphere(d.dim(), Point::unit(d.dim(), 0), ray, tol, max_subdiv);
  res.evaluations += evals;
  res.converged = res.converged && ok;
  return res.scaled(d.jacobian());
}

void probe_decay(const Domain& d, const ScalarField& f) {
  const int n = d.dim();
  const double r1 = 1e3;
  const double r2 = 1e6;
  for (int axis = 0; axis < n; ++axis) {
    for (double sg : {1.0, -1.0}) {
      const Point w = sg * Point::unit(n, axis);
      const Point y1 = d.from_reference(r1 * w);
      const Point y2 = d.from_reference(r2 * w);
      const double a = std::fabs(f(y1)) * std::pow(r1, n);
      const double b = std::fabs(f(y2)) * std::pow(r2, n);
      if (a > 0.0 && std::isfinite(a) && b >= 0.9 * a) {
        throw DivergenceError("integrand does not decay faster than |x|^{-N} along " +
                              fmt_point(w));
      }
      if (!std::isfinite(b)) throw EvaluationError("non-finite integrand at " + fmt_point(y2));
    }
  }
}

struct Moments {
  double sum = 0.0;
  double sum2 = 0.0;
  long n = 0;
};

template <class Sampler>
IntegralResult run_mc(const QuadConfig& cfg, Sampler&& sample) {
  constexpr long kChunk = 8192;
  const long total = cfg.mc_samples;
  Moments m;
  for (long start = 0, chunk = 0; start < total; start += kChunk, ++chunk) {
    std::mt19937_64 rng(quad::stream_seed(cfg.seed, static_cast<std::uint64_t>(chunk)));
    const long end = std::min(total, start + kChunk);
    for (long i = start; i < end; ++i) {
      const double v = sample(rng);
      m.sum += v;
      m.sum2 += v * v;
      ++m.n;
    }
  }
  IntegralResult r;
  const double mean = m.sum / m.n;
  const double var = std::max(0.0, m.sum2 / m.n - mean * mean);
  r.value = mean;
  r.error_estimate = std::sqrt(var / m.n);
  r.evaluations = m.n;
  r.converged = true;
  return r;
}

Point random_direction(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  for (;;) {
    Point w(n);
    for (int i = 0; i < n; ++i) w[i] = nd(rng);
    const double l = w.norm();
    if (l > 1e-12) return (1.0 / l) * w;
  }
}

}  // namespace

IntegralResult integrate_interior(const Domain& domain, const ScalarField& f,
                                  const QuadConfig& cfg) {
  cfg.validate();
  const int n = domain.dim();
  const quad::Tol inner = cfg.tol().tighter(0.1);
  auto radial = [&](const Point& w) {
    auto g = [&](double r) {
      const Point y = domain.from_reference(r * w);
      return checked(f(y), y) * std::pow(r, n - 1);
    };
    return quad::tanh_sinh(g, 0.0, 1.0, inner);
  };
  return reference_sphere(domain, radial, cfg.tol(), cfg.max_subdiv);
}

IntegralResult integrate_exterior(const Domain& domain, const ScalarField& f,
                                  const QuadConfig& cfg) {
  cfg.validate();
  probe_decay(domain, f);
  const int n = domain.dim();
  const quad::Tol inner = cfg.tol().tighter(0.1);
  auto radial = [&](const Point& w) {
    auto shell = [&](double r) {
      const Point y = domain.from_reference(r * w);
      return checked(f(y), y) * std::pow(r, n - 1);
    };
    auto tail = [&](double u) {
      const double r = 2.0 / u;
      const Point y = domain.from_reference(r * w);
      return checked(f(y), y) * std::pow(r, n - 1) * 2.0 / (u * u);
    };
    return quad::tanh_sinh(shell, 1.0, 2.0, inner) + quad::tanh_sinh(tail, 0.0, 1.0, inner);
  };
  return reference_sphere(domain, radial, cfg.tol(), cfg.max_subdiv);
}

IntegralResult integrate_interior_mc(const Domain& domain, const ScalarField& f,
                                     const QuadConfig& cfg) {
  cfg.validate();
  const int n = domain.dim();
  const double vol = domain.measures().volume;
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  return run_mc(cfg, [&](std::mt19937_64& rng) {
    const Point w = random_direction(n, rng);
    const double r = std::pow(ud(rng), 1.0 / n);
    const Point y = domain.from_reference(r * w);
    return vol * checked(f(y), y);
  });
}

IntegralResult integrate_exterior_mc(const Domain& domain, const ScalarField& f,
                                     const QuadConfig& cfg) {
  cfg.validate();
  probe_decay(domain, f);
  const int n = domain.dim();
  const double area = specfun::sphere_area(n);
  const double alpha = 0.25;
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  return run_mc(cfg, [&](std::mt19937_64& rng) {
    const Point w = random_direction(n, rng);
    double r;
    if (ud(rng) < 0.5) {
      const double u = ud(rng);
      r = 1.0 + u * u;
    } else {
      r = std::pow(1.0 - ud(rng), -1.0 / alpha);
    }
    double p = 0.5 * alpha * std::pow(r, -alpha - 1.0);
    if (r < 2.0 && r > 1.0) p += 0.25 / std::sqrt(r - 1.0);
    const Point y = domain.from_reference(r * w);
    return area * domain.jacobian() * checked(f(y), y) * std::pow(r, n - 1) / p;
  });
}

namespace {

// int_{r0}^inf (u(x) - u(x + rho w)) rho^{-1-2s} d rho, split at support crossings.
IntegralResult pv_outer_ray(const ScalarField& u, const Point& x, double ux, const Point& w,
                            double s, double r0, const quad::Tol& tol) {
  std::vector<double> cuts{r0};
  bool compact_tail = false;
  if (u.support_domain) {
    const auto iv = u.support_domain->line_interval(x, w);
    if (iv) {
      if (iv->first > r0) cuts.push_back(iv->first);
      if (iv->second > r0) cuts.push_back(iv->second);
    }
    compact_tail = u.support == SupportKind::kCompactInDomain;
  }
  auto diff = [&](double rho) {
    const Point y = x + rho * w;
    return ux - checked(u(y), y);
  };
  IntegralResult acc;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    auto g = [&](double rho) { return diff(rho) * std::pow(rho, -1.0 - 2.0 * s); };
    acc += quad::tanh_sinh(g, cuts[i], cuts[i + 1], tol);
  }
  const double b = cuts.back();
  if (compact_tail) {
    acc.value += ux * std::pow(b, -2.0 * s) / (2.0 * s);
  } else {
    auto g = [&](double v) { return diff(b / v) * std::pow(b, -2.0 * s) * std::pow(v, 2.0 * s - 1.0); };
    acc += quad::tanh_sinh(g, 0.0, 1.0, tol);
  }
  return acc;
}

Point feature_axis(const ScalarField& u, const Point& x) {
  if (u.support_domain) {
    Point ax = u.support_domain->project_to_boundary(x) - x;
    if (ax.norm() > 0.0) return ax;
  }
  return Point::unit(x.dim(), 0);
}

}  // namespace

IntegralResult integrate_pv_second_difference(const ScalarField& u, const Point& x, double s,
                                              const QuadConfig& cfg) {
  cfg.validate();
  if (!(s > 0.0 && s < 1.0)) throw DomainError("PV integral needs 0 < s < 1");
  const int n = x.dim();
  double scale = 1.0;
  if (u.support_domain) {
    if (u.smoothness == Smoothness::kSmooth) {
      scale = u.support_domain->max_semi_axis();
    } else {
      scale = std::fabs(u.support_domain->delta(x));
      if (!(scale > 0.0)) {
        throw ContractError("PV integral evaluated on the non-smooth set at " + fmt_point(x));
      }
    }
  }
  const double r_in = cfg.pv_inner_radius * scale;
  const double ux = checked(u(x), x);
  const quad::Tol inner = cfg.tol().tighter(0.1);
  const double p = 2.0 - 2.0 * s;
  const double floor_rho = 1e-3 * r_in;
  long evals = 0;
  bool ok = true;
  auto ray = [&](const Point& w) {
    auto second = [&](double rho) {
      const Point yp = x + rho * w;
      const Point ym = x - rho * w;
      return (2.0 * ux - checked(u(yp), yp) - checked(u(ym), ym)) / (rho * rho);
    };
    const double d_floor = second(floor_rho);
    auto g = [&](double t) {
      const double rho = std::pow(t, 1.0 / p);
      const double q = rho < floor_rho ? d_floor : second(rho);
      return q / (2.0 * p);
    };
    IntegralResult r = quad::gauss_kronrod(g, 0.0, std::pow(r_in, p), inner, 200);
    r += pv_outer_ray(u, x, ux, w, s, r_in, inner);
    evals += r.evaluations;
    ok = ok && r.converged;
    return r.value;
  };
  auto res = quad::integrate_sphere(n, feature_axis(u, x), ray, cfg.tol(), cfg.max_subdiv);
  res.evaluations += evals;
  res.converged = res.converged && ok;
  return res;
}

IntegralResult integrate_pv_cutoff(const ScalarField& u, const Point& x, double s, double eps,
                                   const QuadConfig& cfg) {
  cfg.validate();
  if (!(s > 0.0 && s < 1.0)) throw DomainError("PV integral needs 0 < s < 1");
  if (!(eps > 0.0)) throw DomainError("cutoff radius must be positive");
  const double ux = checked(u(x), x);
  const quad::Tol inner = cfg.tol().tighter(0.1);
  long evals = 0;
  bool ok = true;
  auto ray = [&](const Point& w) {
    const auto r = pv_outer_ray(u, x, ux, w, s, eps, inner);
    evals += r.evaluations;
    ok = ok && r.converged;
    return r.value;
  };
  auto res = quad::integrate_sphere(x.dim(), feature_axis(u, x), ray, cfg.tol(), cfg.max_subdiv);
  res.evaluations += evals;
  res.converged = res.converged && ok;
  return res;
}

}  // namespace fraclab
