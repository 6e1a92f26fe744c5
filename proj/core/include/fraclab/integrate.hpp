#pragma once

// One-dimensional integration engine shared by every operator: adaptive Gauss-Kronrod
// (7/15), double-exponential (tanh-sinh) quadrature for endpoint singularities, and
// nested rules over the unit sphere S^{N-1}, N = 2, 3.

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <type_traits>
#include <vector>

#include "fraclab/errors.hpp"
#include "fraclab/point.hpp"
#include "fraclab/rules.hpp"

namespace fraclab {

/// Outcome of a numerical integration.
struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = true;

  IntegralResult& operator+=(const IntegralResult& o) {
    value += o.value;
    error_estimate += o.error_estimate;
    evaluations += o.evaluations;
    converged = converged && o.converged;
    return *this;
  }
  friend IntegralResult operator+(IntegralResult a, const IntegralResult& b) { return a += b; }
  IntegralResult scaled(double a) const {
    return {a * value, std::fabs(a) * error_estimate, evaluations, converged};
  }
};

namespace quad {

/// Absolute/relative tolerance pair; an integral is accepted when err <= max(abs, rel |I|).
struct Tol {
  double abs = 1e-10;
  double rel = 1e-8;
  double bound(double value) const { return std::max(abs, rel * std::fabs(value)); }
  Tol tighter(double factor) const { return {abs * factor, rel * factor}; }
};

namespace detail {

// Kronrod 15 / Gauss 7 nodes on [-1, 1] (QUADPACK qk15).
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <class F>
Segment gk15(F& f, double a, double b, long& evals) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double resk = fc * kWgk[7];
  double resg = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double f1 = f(c - dx);
    const double f2 = f(c + dx);
    resk += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  evals += 15;
  const double value = resk * h;
  const double err = std::fabs((resk - resg) * h);
  return {a, b, value, err};
}

}  // namespace detail

/// Adaptive Gauss-Kronrod 7/15 over [a, b] split at the given interior breakpoints.
template <class F>
IntegralResult gauss_kronrod(F&& f, double a, double b, const Tol& tol, int max_subdiv = 2000,
                             const std::vector<double>& breaks = {}) {
  IntegralResult out;
  if (a == b) return out;
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }
  std::vector<double> pts{a};
  for (double p : breaks) {
    if (p > a && p < b) pts.push_back(p);
  }
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  std::priority_queue<detail::Segment> heap;
  double total = 0.0;
  double err = 0.0;
  long evals = 0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const auto s = detail::gk15(f, pts[i], pts[i + 1], evals);
    total += s.value;
    err += s.error;
    heap.push(s);
  }
  int subdiv = 0;
  while (err > tol.bound(total) && subdiv < max_subdiv) {
    const auto worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;
    heap.pop();
    const auto l = detail::gk15(f, worst.a, mid, evals);
    const auto r = detail::gk15(f, mid, worst.b, evals);
    total += l.value + r.value - worst.value;
    err += l.error + r.error - worst.error;
    heap.push(l);
    heap.push(r);
    ++subdiv;
  }
  // Re-sum to shed accumulated cancellation in the running totals.
  total = 0.0;
  err = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  out.value = sign * total;
  out.error_estimate = err;
  out.evaluations = evals;
  out.converged = err <= tol.bound(total);
  return out;
}

/// Double-exponential quadrature on [a, b]. The integrand is called as f(x) or, if it
/// accepts three arguments, as f(x, x - a, b - x) with the endpoint distances computed
/// without cancellation. Nodes that round onto an endpoint are skipped, so integrable
/// endpoint singularities are allowed.
template <class F>
IntegralResult tanh_sinh(F&& f, double a, double b, const Tol& tol, int max_level = 8,
                         int min_level = 3) {
  IntegralResult out;
  if (a == b) return out;
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }
  constexpr double kHalfPi = 1.57079632679489661923;
  constexpr double kTMax = 4.0;
  const double half = 0.5 * (b - a);
  long evals = 0;
  auto term = [&](double t) -> double {
    const double u = kHalfPi * std::sinh(t);
    const double cu = std::cosh(u);
    const double w = kHalfPi * std::cosh(t) / (cu * cu);
    // 1 - |tanh(u)| = 2 / (exp(2|u|) + 1)
    const double comp = 2.0 / (std::exp(2.0 * std::fabs(u)) + 1.0);
    const double dist = half * comp;
    double x;
    double da;
    double db;
    if (t < 0.0) {
      x = a + dist;
      da = dist;
      db = (b - a) - dist;
    } else {
      x = b - dist;
      db = dist;
      da = (b - a) - dist;
    }
    if (t == 0.0) {
      x = a + half;
      da = half;
      db = half;
    }
    if (!(dist > 0.0) || x <= a || x >= b) return 0.0;
    ++evals;
    double fx;
    if constexpr (std::is_invocable_v<F&, double, double, double>) {
      fx = f(x, da, db);
    } else {
      fx = f(x);
    }
    return w * fx;
  };
  double h = 1.0;
  double sum = term(0.0);
  for (int k = 1; k * h <= kTMax; ++k) sum += term(k * h) + term(-k * h);
  double estimate = half * h * sum;
  double err = std::fabs(estimate);
  bool ok = false;
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    double add = 0.0;
    for (int k = 1; k * h <= kTMax; k += 2) add += term(k * h) + term(-k * h);
    sum += add;
    const double next = half * h * sum;
    err = std::fabs(next - estimate);
    estimate = next;
    if (level >= min_level && err <= tol.bound(estimate)) {
      ok = true;
      break;
    }
  }
  out.value = sign * estimate;
  out.error_estimate = err;
  out.evaluations = evals;
  out.converged = ok;
  return out;
}

/// Orthonormal completion {e1, e2} of a unit vector in R^3.
inline std::pair<Point, Point> orthonormal_complement(const Point& axis) {
  Point helper = std::fabs(axis[0]) < 0.9 ? Point{1.0, 0.0, 0.0} : Point{0.0, 1.0, 0.0};
  Point e1 = helper - helper.dot(axis) * axis;
  e1 *= 1.0 / e1.norm();
  Point e2{axis[1] * e1[2] - axis[2] * e1[1], axis[2] * e1[0] - axis[0] * e1[2],
           axis[0] * e1[1] - axis[1] * e1[0]};
  return {e1, e2};
}

/// Integral over the unit sphere S^{N-1} (N = 2, 3) of g(omega) d sigma. Polar angles are
/// measured from `axis` so features aligned with it are resolved first.
template <class G>
IntegralResult integrate_sphere(int dim, const Point& axis_in, G&& g, const Tol& tol,
                                int max_subdiv = 400,
                                const std::vector<double>& theta_breaks = {}) {
  constexpr double kPi = 3.14159265358979323846;
  Point axis = axis_in;
  const double an = axis.norm();
  if (an == 0.0) {
    axis = Point::unit(dim, 0);
  } else {
    axis *= 1.0 / an;
  }
  if (dim == 2) {
    const Point perp{-axis[1], axis[0]};
    auto f = [&](double th) { return g(std::cos(th) * axis + std::sin(th) * perp); };
    std::vector<double> br{-0.5 * kPi, 0.0, 0.5 * kPi};
    for (double t : theta_breaks) br.push_back(t);
    return gauss_kronrod(f, -kPi, kPi, tol, max_subdiv, br);
  }
  if (dim != 3) throw CapabilityError("integrate_sphere: only N = 2, 3 supported");
  const auto [e1, e2] = orthonormal_complement(axis);
  IntegralResult inner_acc;
  const Tol inner_tol = tol.tighter(0.1);
  auto outer = [&](double th) {
    const double st = std::sin(th);
    const double ct = std::cos(th);
    auto fphi = [&](double ph) {
      return g(ct * axis + st * (std::cos(ph) * e1 + std::sin(ph) * e2));
    };
    const auto r = gauss_kronrod(fphi, 0.0, 2.0 * kPi, inner_tol, max_subdiv, {kPi});
    inner_acc.evaluations += r.evaluations;
    inner_acc.converged = inner_acc.converged && r.converged;
    return st * r.value;
  };
  std::vector<double> br{0.5 * kPi};
  for (double t : theta_breaks) br.push_back(t);
  auto res = gauss_kronrod(outer, 0.0, kPi, tol, max_subdiv, br);
  res.evaluations += inner_acc.evaluations;
  res.converged = res.converged && inner_acc.converged;
  return res;
}

/// Fixed Gauss-Legendre rule mapped to [a, b].
template <class F>
double gauss_legendre_fixed(F&& f, double a, double b, int n) {
  const auto& rule = gauss_legendre(n);
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * f(c + h * rule.nodes[i]);
  return h * s;
}

}  // namespace quad
}  // namespace fraclab
