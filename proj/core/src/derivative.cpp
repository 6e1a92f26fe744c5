#include "fraclab/derivative.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "fraclab/closedform.hpp"
#include "fraclab/kernels.hpp"
#include "fraclab/operators.hpp"
#include "fraclab/radial_table.hpp"

namespace fraclab {

double GridField::sup() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::fabs(v));
  return m;
}

double GridField::l2() const {
  if (values.empty()) return 0.0;
  double acc = 0.0;
  for (double v : values) acc += v * v;
  return std::sqrt(acc / values.size());
}

double GridField::weighted_lp(double a, double p) const {
  if (values.empty()) return 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    acc += std::pow(std::fabs(values[i] * std::pow(deltas[i], a)), p);
  }
  return std::pow(acc / values.size(), 1.0 / p);
}

bool GridField::all_converged() const {
  return std::all_of(converged.begin(), converged.end(), [](bool b) { return b; });
}

std::vector<Point> radial_grid(const Domain& ball, int count, double min_delta) {
  if (!ball.is_ball()) throw CapabilityError("radial_grid: ball domains only");
  if (count < 2 || !(min_delta > 0.0 && min_delta < 1.0)) {
    throw DomainError("radial_grid: need count >= 2 and 0 < min_delta < 1");
  }
  const double rad = ball.radius();
  std::vector<Point> pts;
  for (int k = 0; k < count; ++k) {
    const double delta = rad * std::pow(min_delta, static_cast<double>(k) / (count - 1));
    pts.push_back(ball.center() + (rad - delta) * Point::unit(ball.dim(), 0));
  }
  return pts;
}

namespace {

void require_grid(const Domain& ball, const std::vector<Point>& grid) {
  if (!ball.is_ball()) throw CapabilityError("derivative: ball domains only");
  for (const auto& x : grid) {
    if (!(ball.delta(x) > 0.0)) throw DomainError("derivative: grid points must be interior");
  }
}

GridField make_field(const Domain& ball, const std::vector<Point>& grid) {
  GridField g;
  g.points = grid;
  for (const auto& x : grid) g.deltas.push_back(ball.delta(x));
  return g;
}

void push(GridField& g, const IntegralResult& r) {
  g.values.push_back(r.value);
  g.errors.push_back(r.error_estimate);
  g.converged.push_back(r.converged);
}

}  // namespace

IntegralResult ell_s(const CompactField& f, const Domain& ball, const Order& s, const Point& x,
                     const QuadConfig& cfg, SignConvention sign) {
  s.require_operator_range();
  if (!(ball.delta(x) > 0.0)) throw DomainError("ell_s: x must be interior");
  const auto a = log_laplacian_compact(f, ball, x, cfg);
  const auto b = comp_poisson_apply(ball, f, s, x, cfg);
  const double pc = sign == SignConvention::kMinusComplement ? -1.0 : 1.0;
  IntegralResult out;
  out.value = -a.value + pc * b.value;
  out.error_estimate = a.error_estimate + b.error_estimate;
  out.evaluations = a.evaluations + b.evaluations;
  out.converged = a.converged && b.converged;
  return out;
}

GridField green_grid(const CompactField& f, const Domain& ball, const Order& s,
                     const std::vector<Point>& grid, const QuadConfig& cfg) {
  require_grid(ball, grid);
  GridField g = make_field(ball, grid);
  for (const auto& x : grid) push(g, green_apply(ball, f, s, x, cfg));
  return g;
}

GridField solve_vs(const CompactField& f, const Domain& ball, const Order& s,
                   const std::vector<Point>& grid, const QuadConfig& cfg, SignConvention sign) {
  require_grid(ball, grid);
  s.require_operator_range();
  QuadConfig inner = cfg;
  inner.rel_tol = 0.1 * cfg.rel_tol;
  inner.abs_tol = 0.1 * cfg.abs_tol;
  CompactField rhs;
  bool ok = true;
  if (f.is_radial() && ball.is_centered_ball()) {
    const int n = ball.dim();
    auto profile = [&](double rho) {
      const auto r = ell_s(f, ball, s, rho * Point::unit(n, 0), inner, sign);
      ok = ok && r.converged;
      return r.value;
    };
    auto table = std::make_shared<RadialTable>(profile, ball.radius(), 28, 12, true);
    rhs.radial_profile = [table](double rho) { return (*table)(rho); };
    rhs.f = [table](const Point& y) { return (*table)(y.norm()); };
  } else {
    rhs.f = [&, sign](const Point& y) {
      if (!(ball.delta(y) > 0.0)) return 0.0;
      return ell_s(f, ball, s, y, inner, sign).value;
    };
  }
  GridField g = make_field(ball, grid);
  for (const auto& x : grid) {
    auto r = green_apply(ball, rhs, s, x, cfg);
    r.converged = r.converged && ok;
    push(g, r);
  }
  return g;
}

GridField finite_diff_ds(const CompactField& f, const Domain& ball, const Order& s, double h,
                         const std::vector<Point>& grid, const QuadConfig& cfg) {
  require_grid(ball, grid);
  if (!(h > 0.0)) throw DomainError("finite_diff_ds: h must be positive");
  const double sv = s.value();
  const bool central = sv + h <= 1.0;
  const double lo = sv - h;
  if (!(lo > 0.0)) throw DomainError("finite_diff_ds: s - h must be positive");
  const GridField a = green_grid(f, ball, Order(lo), grid, cfg);
  const GridField b = green_grid(f, ball, Order(central ? sv + h : sv), grid, cfg);
  GridField g = make_field(ball, grid);
  const double span = central ? 2.0 * h : h;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    g.values.push_back((b.values[i] - a.values[i]) / span);
    g.errors.push_back((a.errors[i] + b.errors[i]) / span);
    g.converged.push_back(a.converged[i] && b.converged[i]);
  }
  return g;
}

ExpansionReport expansion_residual(const CompactField& f, const Domain& ball, const Order& s,
                                   const std::vector<Point>& grid, const QuadConfig& cfg,
                                   const GridField* v1) {
  s.require_open_range();
  GridField own;
  if (v1 == nullptr) {
    own = solve_vs(f, ball, Order(1.0), grid, cfg);
    v1 = &own;
  }
  const GridField us = green_grid(f, ball, s, grid, cfg);
  const GridField u1 = green_grid(f, ball, Order(1.0), grid, cfg);
  ExpansionReport rep;
  rep.s = s.value();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = us.values[i] - u1.values[i] + (1.0 - rep.s) * v1->values[i];
    rep.residual = std::max(rep.residual, std::fabs(r));
  }
  return rep;
}

ExpansionReport expansion_residual_closed_form(const Domain& ball, double s,
                                               const std::vector<Point>& grid, double c) {
  if (!ball.is_ball()) throw CapabilityError("closed form needs a ball");
  const double rad = ball.radius();
  const SymMatrix A = SymMatrix::identity(ball.dim(), 1.0 / (rad * rad));
  ExpansionReport rep;
  rep.s = s;
  for (const auto& x : grid) {
    const Point y = x - ball.center();
    const double r = c * (torsion_value(A, s, y) - torsion_value(A, 1.0, y) +
                          (1.0 - s) * torsion_s_derivative(A, 1.0, y).value);
    rep.residual = std::max(rep.residual, std::fabs(r));
  }
  return rep;
}

TwoSidedReport two_sided_check(const SymMatrix& A, const std::vector<double>& h_list,
                               const std::vector<Point>& points) {
  TwoSidedReport rep;
  for (double h : h_list) {
    if (!(h > 0.0 && h < 1.0)) throw DomainError("two_sided_check: h must lie in (0,1)");
    for (const auto& x : points) {
      TwoSidedRow row;
      row.h = h;
      row.x = x;
      const double u1 = torsion_value(A, 1.0, x);
      row.below = (u1 - torsion_value(A, 1.0 - h, x)) / h;
      row.above = (torsion_value(A, 1.0 + h, x) - u1) / h;
      rep.rows.push_back(row);
    }
  }
  if (h_list.size() >= 2 && !points.empty()) {
    double sx = 0.0;
    double sy = 0.0;
    double sxx = 0.0;
    double sxy = 0.0;
    int m = 0;
    for (const auto& row : rep.rows) {
      if (!(row.x == points.front()) || !(row.gap() > 0.0)) continue;
      const double lx = std::log(row.h);
      const double ly = std::log(row.gap());
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
      ++m;
    }
    if (m >= 2) rep.order = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  }
  return rep;
}

}  // namespace fraclab
