#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

#include "fraclab/bounds.hpp"
#include "fraclab/closedform.hpp"
#include "fraclab/derivative.hpp"
#include "fraclab/kernels.hpp"
#include "fraclab/operators.hpp"
#include "fraclab/specfun.hpp"
#include "fraclab_cli/cli.hpp"

namespace fraclab::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> split_numbers(const std::string& line) {
  std::vector<double> v;
  std::string tok;
  std::stringstream ss(line);
  while (ss >> std::ws && std::getline(ss, tok, ',')) {
    std::stringstream ts(tok);
    for (std::string w; ts >> w;) {
      std::size_t used = 0;
      v.push_back(std::stod(w, &used));
      if (used != w.size()) throw std::invalid_argument("bad number '" + w + "'");
    }
  }
  return v;
}

Domain make_domain(const Options& o) {
  const bool ellipsoid = o.domain.rfind("ellipsoid", 0) == 0;
  return parse_domain(o.domain, ellipsoid ? 0 : o.dim);
}

Domain make_ball(const Options& o) {
  Domain d = make_domain(o);
  if (!d.is_ball()) throw CapabilityError("this subcommand needs a ball domain");
  return d;
}

std::vector<Point> read_points(const std::string& src, int dim, std::istream& in) {
  std::ifstream file;
  std::istream* is = &in;
  if (src != "-") {
    file.open(src);
    if (!file) throw DomainError("cannot read points file " + src);
    is = &file;
  }
  std::vector<Point> pts;
  for (std::string line; std::getline(*is, line);) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!(std::isdigit(static_cast<unsigned char>(line[first])) || line[first] == '-' ||
          line[first] == '+' || line[first] == '.')) {
      continue;  // header
    }
    const auto v = split_numbers(line);
    if (static_cast<int>(v.size()) != dim) {
      throw DomainError("points must have " + std::to_string(dim) + " columns");
    }
    Point p(dim);
    for (int i = 0; i < dim; ++i) p[i] = v[i];
    pts.push_back(p);
  }
  return pts;
}

std::vector<std::string> point_columns(int dim) {
  std::vector<std::string> c;
  for (int i = 1; i <= dim; ++i) c.push_back("x" + std::to_string(i));
  return c;
}

struct Fields {
  CompactField compact;
  ScalarField extended;
};

Fields make_fields(const Options& o, const Domain& d) {
  Fields f;
  if (o.field == "one") {
    f.compact = CompactField::constant(1.0);
    f.extended = f.compact.extend(d);
  } else if (o.field == "torsion") {
    if (!d.is_ball()) throw CapabilityError("torsion field needs a ball domain");
    const double sig = o.field_order > 0.0 ? o.field_order : o.order;
    const double c = specfun::ball_torsion_constant(d.dim(), sig).value;
    const double r2 = d.radius() * d.radius();
    f.compact = CompactField::radial(
        [=](double r) { return c * std::pow(std::max(0.0, r2 - r * r), sig); }, std::min(sig, 1.0));
    f.extended = f.compact.extend(d);
  } else {
    f.extended = bump(d.center(), 0.5 * d.delta(d.center()));
    const auto eval = f.extended.eval;
    f.compact.f = [eval](const Point& y) { return eval(y); };
  }
  return f;
}

void check_converged(Report& r, bool ok) { r.flagged = r.flagged || !ok; }

}  // namespace

Point parse_point(const std::string& text) {
  const auto v = split_numbers(text);
  if (v.size() < 2 || v.size() > 3) throw DomainError("points need 2 or 3 coordinates");
  Point p(static_cast<int>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) p[static_cast<int>(i)] = v[i];
  return p;
}

Report run_constants(const Options& o) {
  const int n = o.dim;
  const double s = o.order;
  if (n < 2 || n > 3) throw CapabilityError("constants: dim must be 2 or 3");
  if (!(s > 0.0 && s <= 1.0)) throw DomainError("constants: order must lie in (0, 1]");
  const auto lc = specfun::log_constants(n);
  const auto d = specfun::ball_torsion_constant(n, s);
  Report r;
  r.columns = {"dim", "s", "c_Ns", "c_N", "rho_N", "kappa", "tau", "d", "d_ds"};
  r.add_row({n, s, s < 1.0 ? specfun::frac_normalization(n, s) : kNaN, lc.c_N, lc.rho_N,
             s < 0.5 * n ? specfun::riesz_constant(n, s) : kNaN,
             s < 1.0 ? specfun::ball_poisson_constant(n, s) : kNaN, d.value, d.s_derivative});
  return r;
}

Report run_eval(const Options& o, std::istream& in) {
  const Domain d = make_domain(o);
  const int n = d.dim();
  const auto pts = read_points(o.points, n, in);
  const Order s(o.order);
  const Fields f = make_fields(o, d);
  Report r;
  r.columns = point_columns(n);
  if (o.op == "interchange") {
    for (const char* c : {"lhs", "rhs", "value", "error_estimate", "converged"}) r.columns.push_back(c);
    const auto res = interchange_residuals(f.extended, d, pts, s, o.cfg);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::vector<Json> row;
      for (int k = 0; k < n; ++k) row.emplace_back(pts[i][k]);
      row.insert(row.end(), {res[i].lhs, res[i].rhs, res[i].residual(), res[i].error_estimate, true});
      r.add_row(std::move(row));
    }
    return r;
  }
  for (const char* c : {"value", "error_estimate", "converged"}) r.columns.push_back(c);
  for (const auto& x : pts) {
    IntegralResult v;
    if (o.op == "fraclap") v = frac_laplacian(f.extended, x, s, o.cfg);
    if (o.op == "loglap") v = log_laplacian(f.extended, x, o.cfg);
    if (o.op == "homega") v = h_omega(d, x, o.cfg);
    if (o.op == "homega-mc") v = h_omega_mc(d, x, o.cfg);
    if (o.op == "ws") v = restriction_ws(f.compact, d, s, x, o.cfg);
    if (o.op == "green") v = green_apply(d, f.compact, s, x, o.cfg);
    if (o.op == "ell") v = ell_s(f.compact, d, s, x, o.cfg);
    if (o.op == "comp") v = comp_poisson_apply(d, f.compact, s, x, o.cfg);
    std::vector<Json> row;
    for (int k = 0; k < n; ++k) row.emplace_back(x[k]);
    row.insert(row.end(), {v.value, v.error_estimate, v.converged});
    r.add_row(std::move(row));
    check_converged(r, v.converged);
  }
  return r;
}

Report run_kernels(const Options& o) {
  const Domain d = make_ball(o);
  const Order s(o.order);
  const Point x = parse_point(o.x);
  if (x.dim() != d.dim()) throw DomainError("--x dimension disagrees with the domain");
  Point z;
  if (o.which != "mass") {
    if (o.z.empty()) throw DomainError("--z is required for --which " + o.which);
    z = parse_point(o.z);
    if (z.dim() != d.dim()) throw DomainError("--z dimension disagrees with the domain");
  }
  IntegralResult v;
  if (o.which == "green") v.value = green_ball(d, s, x, z);
  if (o.which == "poisson") {
    v.value = s.is_local() ? poisson_ball_classical(x - d.center(), z - d.center(), d.radius())
                           : poisson_ball(s, x - d.center(), z - d.center(), d.radius());
  }
  if (o.which == "comp") v = comp_poisson_kernel(d, s, x, z, o.cfg);
  if (o.which == "mass") v = poisson_extend(d, ScalarField::constant(1.0), s, x, o.cfg);
  Report r;
  r.columns = {"which", "s", "value", "error_estimate", "converged"};
  r.add_row({o.which, s.value(), v.value, v.error_estimate, v.converged});
  check_converged(r, v.converged);
  return r;
}

Report run_torsion(const Options& o) {
  const Domain d = make_ball(o);
  const Point x = o.at.empty() ? d.center() : parse_point(o.at);
  if (x.dim() != d.dim()) throw DomainError("--at dimension disagrees with the domain");
  const double rad = d.radius();
  const SymMatrix A = SymMatrix::identity(d.dim(), 1.0 / (rad * rad));
  Report r;
  r.columns = {"s", "u_s", "du_ds", "boundary"};
  for (double s : parse_orders(o.orders)) {
    const auto dv = torsion_s_derivative(A, s, x - d.center());
    r.add_row({s, torsion_value(A, s, x - d.center()), dv.value, dv.boundary});
  }
  return r;
}

Report run_derivative(const Options& o) {
  const Domain d = make_ball(o);
  const Order s(o.order);
  const auto one = CompactField::constant(1.0);
  const auto grid = radial_grid(d, o.grid, o.min_delta);
  const auto sign =
      o.variant == "minus" ? SignConvention::kMinusComplement : SignConvention::kPlusComplement;
  const GridField v = solve_vs(one, d, s, grid, o.cfg, sign);
  GridField fd;
  if (o.fd > 0.0) fd = finite_diff_ds(one, d, s, o.fd, grid, o.cfg);
  const bool cmp = o.compare == "closedform";
  const double rad = d.radius();
  const SymMatrix A = SymMatrix::identity(d.dim(), 1.0 / (rad * rad));
  Report r;
  r.columns = {"r", "delta", "v_s", "error_estimate", "converged"};
  if (o.fd > 0.0) r.columns.push_back("fd_quotient");
  if (cmp) {
    r.columns.push_back("closed_form");
    r.columns.push_back("rel_error");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<Json> row{(grid[i] - d.center()).norm(), v.deltas[i], v.values[i], v.errors[i],
                          static_cast<bool>(v.converged[i])};
    if (o.fd > 0.0) row.emplace_back(fd.values[i]);
    if (cmp) {
      const double c = torsion_s_derivative(A, s.value(), grid[i] - d.center()).value;
      const double rel = std::fabs(v.values[i] - c) / std::fabs(c);
      worst = std::max(worst, rel);
      row.emplace_back(c);
      row.emplace_back(rel);
    }
    r.add_row(std::move(row));
  }
  r.summary = Json{{"s", s.value()}, {"variant", o.variant}, {"points", grid.size()}};
  if (cmp) r.summary["max_rel_error"] = round10(worst);
  check_converged(r, v.all_converged());
  return r;
}

Report run_transition(const Options& o) {
  const Domain d = make_ball(o);
  const auto one = CompactField::constant(1.0);
  const auto grid = radial_grid(d, o.grid, o.min_delta);
  const GridField v1 = solve_vs(one, d, Order(1.0), grid, o.cfg);
  Report r;
  r.columns = {"s", "residual", "residual_over_1ms", "analytic_residual", "ratio"};
  double prev = std::numeric_limits<double>::infinity();
  bool decreasing = true;
  for (double s : parse_orders(o.orders)) {
    const auto num = expansion_residual(one, d, Order(s), grid, o.cfg, &v1);
    const auto ana = expansion_residual_closed_form(d, s, grid);
    decreasing = decreasing && num.scaled() < prev;
    prev = num.scaled();
    r.add_row({s, num.residual, num.scaled(), ana.residual, num.residual / ana.residual});
  }
  r.summary = Json{{"scaled_residual_decreasing", decreasing}, {"points", grid.size()}};
  check_converged(r, v1.all_converged());
  return r;
}

Report run_bounds(const Options& o) {
  const Domain d = make_ball(o);
  Report r;
  r.columns = {"s",      "norm_numeric", "bound_integral", "bound_new", "bound_old",
               "m_s",    "p_s_numeric",  "p_s_lower",      "q_Ns",      "chain"};
  for (double s : parse_orders(o.orders)) {
    const auto b = green_norm_bound(d, Order(s), o.cfg, o.tau_nodes);
    r.add_row({b.s, b.norm_numeric, b.bound_integral, b.bound_new, b.bound_old, b.m_s,
               b.p_s_numeric, b.p_s_lower, b.q_Ns, b.chain_holds()});
  }
  return r;
}

}  // namespace fraclab::cli
