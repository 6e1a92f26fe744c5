#include "fraclab/geometry.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fraclab/rules.hpp"
#include "fraclab/specfun.hpp"

namespace fraclab {

SymMatrix SymMatrix::identity(int dim, double scale) {
  if (dim < 1 || dim > kMaxDim) throw CapabilityError("SymMatrix: unsupported dimension");
  SymMatrix m;
  m.dim = dim;
  for (int i = 0; i < dim; ++i) m.a[i][i] = scale;
  return m;
}

SymMatrix SymMatrix::diagonal(std::initializer_list<double> diag) {
  SymMatrix m = identity(static_cast<int>(diag.size()), 0.0);
  int i = 0;
  for (double d : diag) {
    m.a[i][i] = d;
    ++i;
  }
  return m;
}

Point SymMatrix::apply(const Point& x) const {
  Point y(dim);
  for (int i = 0; i < dim; ++i) {
    double s = 0.0;
    for (int j = 0; j < dim; ++j) s += a[i][j] * x[j];
    y[i] = s;
  }
  return y;
}

bool SymMatrix::is_scalar_multiple_of_identity(double tol) const {
  const double d0 = a[0][0];
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const double expect = (i == j) ? d0 : 0.0;
      if (std::fabs(a[i][j] - expect) > tol * std::fabs(d0)) return false;
    }
  }
  return true;
}

namespace {

SymMatrix from_eigen(const Eigen::MatrixXd& m) {
  SymMatrix s = SymMatrix::identity(static_cast<int>(m.rows()), 0.0);
  for (int i = 0; i < s.dim; ++i) {
    for (int j = 0; j < s.dim; ++j) s.a[i][j] = m(i, j);
  }
  return s;
}

}  // namespace

Domain Domain::ball(const Point& center, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw DomainError("ball: radius must be positive, got " + std::to_string(radius));
  }
  const int n = center.dim();
  if (n < 2) throw DomainError("ball: dimension must be >= 2");
  Domain d;
  d.kind_ = DomainKind::kBall;
  d.center_ = center;
  d.radius_ = radius;
  d.A_ = SymMatrix::identity(n, 1.0 / (radius * radius));
  d.m_ = SymMatrix::identity(n, radius);
  d.m_inv_ = SymMatrix::identity(n, 1.0 / radius);
  for (int i = 0; i < n; ++i) {
    d.semi_axes_[i] = radius;
    d.principal_axes_[i] = Point::unit(n, i);
  }
  d.det_m_ = std::pow(radius, n);
  return d;
}

Domain Domain::ellipsoid(const SymMatrix& A, std::optional<Point> center) {
  const int n = A.dim;
  if (n < 2 || n > kMaxDim) throw CapabilityError("ellipsoid: dimension must be 2 or 3");
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (std::fabs(A(i, j) - A(j, i)) > 1e-12 * (std::fabs(A(i, j)) + 1.0)) {
        throw DomainError("ellipsoid: matrix is not symmetric");
      }
      a(i, j) = 0.5 * (A(i, j) + A(j, i));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a);
  const Eigen::VectorXd lambda = eig.eigenvalues();  // ascending
  if (lambda.minCoeff() <= 0.0) throw DomainError("ellipsoid: matrix is not positive definite");
  const Eigen::MatrixXd v = eig.eigenvectors();

  Domain d;
  d.kind_ = DomainKind::kEllipsoid;
  d.center_ = center.value_or(Point::zero(n));
  if (d.center_.dim() != n) throw DomainError("ellipsoid: center dimension mismatch");
  d.A_ = from_eigen(a);
  d.m_ = from_eigen(v * lambda.cwiseSqrt().cwiseInverse().asDiagonal() * v.transpose());
  d.m_inv_ = from_eigen(v * lambda.cwiseSqrt().asDiagonal() * v.transpose());
  d.det_m_ = 1.0 / std::sqrt(lambda.prod());
  for (int i = 0; i < n; ++i) {
    // ascending eigenvalues -> descending semi-axes
    d.semi_axes_[i] = 1.0 / std::sqrt(lambda(i));
    Point axis(n);
    for (int k = 0; k < n; ++k) axis[k] = v(k, i);
    d.principal_axes_[i] = axis;
  }
  return d;
}

double Domain::radius() const {
  if (kind_ != DomainKind::kBall) throw CapabilityError("radius() requested for an ellipsoid");
  return radius_;
}

bool Domain::is_centered_ball() const {
  if (kind_ != DomainKind::kBall) return false;
  return center_.norm2() == 0.0;
}

double Domain::level(const Point& x) const {
  const Point y = x - center_;
  if (kind_ == DomainKind::kBall) return y.norm2() / (radius_ * radius_);
  return A_.quadratic_form(y);
}

namespace {

// Closest point on the ellipsoid sum (p_i / e_i)^2 = 1 to y, in principal coordinates with
// semi-axes e sorted descending and y_i >= 0.
std::array<double, kMaxDim> closest_on_ellipsoid(int n, const std::array<double, kMaxDim>& e,
                                                 const std::array<double, kMaxDim>& y) {
  std::array<double, kMaxDim> p{};
  const int m = n - 1;
  const double em2 = e[m] * e[m];
  auto F = [&](double t) {
    double s = -1.0;
    for (int i = 0; i < n; ++i) {
      if (y[i] == 0.0) continue;
      const double r = e[i] * y[i] / (e[i] * e[i] + t);
      s += r * r;
    }
    return s;
  };
  double norm_ey = 0.0;
  for (int i = 0; i < n; ++i) norm_ey += e[i] * e[i] * y[i] * y[i];
  norm_ey = std::sqrt(norm_ey);

  // The smallest axis may be tied with others; any tied axis with nonzero coordinate
  // makes F blow up at -e_m^2.
  bool blows_up = false;
  for (int i = 0; i < n; ++i) {
    if (e[i] == e[m] && y[i] > 0.0) blows_up = true;
  }

  double lo;
  if (blows_up) {
    lo = -em2;
  } else {
    // Degenerate: point lies in the plane orthogonal to the smallest axis.
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      if (e[i] > e[m]) {
        p[i] = e[i] * e[i] * y[i] / (e[i] * e[i] - em2);
        sum += (p[i] / e[i]) * (p[i] / e[i]);
      }
    }
    if (sum < 1.0) {
      for (int i = 0; i < n; ++i) {
        if (e[i] == e[m]) {
          p[i] = e[i] * std::sqrt(1.0 - sum);
          break;
        }
      }
      return p;
    }
    lo = -em2;
  }
  double hi = -em2 + norm_ey;
  if (blows_up) {
    // F(lo) = +inf; nudge to a finite bracket with F >= 0.
    double ym = 0.0;
    for (int i = 0; i < n; ++i) {
      if (e[i] == e[m]) ym = std::max(ym, y[i]);
    }
    lo = -em2 + e[m] * ym;
  }
  for (int it = 0; it < 300; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (F(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double t = 0.5 * (lo + hi);
  for (int i = 0; i < n; ++i) p[i] = y[i] == 0.0 ? 0.0 : e[i] * e[i] * y[i] / (e[i] * e[i] + t);
  return p;
}

}  // namespace

Point Domain::project_to_boundary(const Point& x) const {
  const Point y = x - center_;
  const int n = dim();
  if (kind_ == DomainKind::kBall) {
    const double r = y.norm();
    if (r == 0.0) return center_ + radius_ * Point::unit(n, 0);
    return center_ + (radius_ / r) * y;
  }
  std::array<double, kMaxDim> yp{};
  std::array<double, kMaxDim> sign{};
  for (int i = 0; i < n; ++i) {
    const double c = y.dot(principal_axes_[i]);
    sign[i] = c < 0.0 ? -1.0 : 1.0;
    yp[i] = std::fabs(c);
  }
  const auto p = closest_on_ellipsoid(n, semi_axes_, yp);
  Point out = center_;
  for (int i = 0; i < n; ++i) out += (sign[i] * p[i]) * principal_axes_[i];
  return out;
}

double Domain::delta(const Point& x) const {
  if (kind_ == DomainKind::kBall) return radius_ - distance(x, center_);
  const double lv = level(x);
  if (lv == 1.0) return 0.0;
  const double d = distance(x, project_to_boundary(x));
  return lv < 1.0 ? d : -d;
}

Point Domain::outward_normal(const Point& x) const {
  Point g = A_.apply(x - center_);
  const double nrm = g.norm();
  if (nrm == 0.0) throw DomainError("outward_normal: undefined at the center");
  return (1.0 / nrm) * g;
}

Measures Domain::measures() const {
  const int n = dim();
  return {specfun::ball_volume(n) * det_m_, 2.0 * semi_axes_[0]};
}

double Domain::surface_area() const {
  const int n = dim();
  if (kind_ == DomainKind::kBall) return specfun::sphere_area(n) * std::pow(radius_, n - 1);
  const auto q = boundary_quadrature(*this, n == 2 ? 512 : 96);
  double s = 0.0;
  for (double w : q.weights) s += w;
  return s;
}

double Domain::max_semi_axis() const { return semi_axes_[0]; }
double Domain::min_semi_axis() const { return semi_axes_[dim() - 1]; }

Point Domain::from_reference(const Point& y) const { return center_ + m_.apply(y); }
Point Domain::to_reference(const Point& x) const { return m_inv_.apply(x - center_); }
Point Domain::map_vector(const Point& v) const { return m_.apply(v); }

std::optional<std::pair<double, double>> Domain::line_interval(const Point& x,
                                                               const Point& w) const {
  const Point y = x - center_;
  double a;
  double b;
  double c0;
  if (kind_ == DomainKind::kBall) {
    const double r2 = radius_ * radius_;
    a = w.norm2() / r2;
    b = y.dot(w) / r2;
    c0 = y.norm2() / r2 - 1.0;
  } else {
    const Point aw = A_.apply(w);
    a = w.dot(aw);
    b = y.dot(aw);
    c0 = A_.quadratic_form(y) - 1.0;
  }
  const double disc = b * b - a * c0;
  if (!(disc > 0.0)) return std::nullopt;
  const double sq = std::sqrt(disc);
  const double q = -(b + std::copysign(sq, b));
  double t1;
  double t2;
  if (q == 0.0) {
    t1 = -sq / a;
    t2 = sq / a;
  } else {
    t1 = q / a;
    t2 = c0 / q;
  }
  if (t1 > t2) std::swap(t1, t2);
  return std::make_pair(t1, t2);
}

double Domain::ray_exit(const Point& x, const Point& w) const {
  const auto iv = line_interval(x, w);
  if (!iv || iv->second <= 0.0) return 0.0;
  return iv->second;
}

std::string Domain::describe() const {
  std::ostringstream os;
  os.precision(10);
  if (kind_ == DomainKind::kBall) {
    os << "ball(N=" << dim() << ",R=" << radius_ << ")";
  } else {
    os << "ellipsoid(N=" << dim() << ",A=[";
    for (int i = 0; i < dim(); ++i) {
      for (int j = i; j < dim(); ++j) os << (i || j ? "," : "") << A_(i, j);
    }
    os << "])";
  }
  return os.str();
}

BoundaryQuadrature boundary_quadrature(const Domain& domain, int order) {
  if (order < 1) throw DomainError("boundary_quadrature: order must be >= 1");
  const int n = domain.dim();
  if (n > 3) throw CapabilityError("boundary_quadrature: only N = 2, 3 supported");
  BoundaryQuadrature q;
  auto push = [&](const Point& omega, double ref_weight) {
    // Surface element of x = c + M omega is det(M) |M^{-1} omega| dS(omega).
    const Point x = domain.from_reference(omega);
    Point g = domain.shape_matrix().apply(x - domain.center());
    // A (x - c) = M^{-1} omega for x - c = M omega.
    const double gn = g.norm();
    const double jac = domain.jacobian() * gn;
    q.nodes.push_back(x);
    q.weights.push_back(ref_weight * jac);
    q.normals.push_back((1.0 / gn) * g);
  };
  if (n == 2) {
    const double h = 2.0 * specfun::kPi / order;
    for (int k = 0; k < order; ++k) {
      const double th = h * k;
      push(Point{std::cos(th), std::sin(th)}, h);
    }
  } else {
    const auto& gl = quad::gauss_legendre(order);
    const int nphi = 2 * order;
    const double hphi = 2.0 * specfun::kPi / nphi;
    for (int i = 0; i < order; ++i) {
      const double u = gl.nodes[i];
      const double st = std::sqrt(std::max(0.0, 1.0 - u * u));
      for (int j = 0; j < nphi; ++j) {
        const double ph = hphi * (j + 0.5);
        push(Point{st * std::cos(ph), st * std::sin(ph), u}, gl.weights[i] * hphi);
      }
    }
  }
  return q;
}

namespace {

std::vector<double> parse_numbers(std::string_view s) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = s.find(',', pos);
    const std::string_view tok = s.substr(pos, comma == std::string_view::npos ? s.npos : comma - pos);
    double v = 0.0;
    std::string t(tok);
    std::size_t used = 0;
    try {
      v = std::stod(t, &used);
    } catch (const std::exception&) {
      throw DomainError("domain literal: cannot parse number '" + t + "'");
    }
    if (used != t.size()) throw DomainError("domain literal: trailing characters in '" + t + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

Domain parse_domain(std::string_view text, int dim) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw DomainError("domain literal must look like ball:R or ellipsoid:a11,a12,...");
  }
  const std::string_view kind = text.substr(0, colon);
  const auto values = parse_numbers(text.substr(colon + 1));
  if (kind == "ball") {
    if (values.size() != 1) throw DomainError("ball literal takes exactly one radius");
    if (dim < 2 || dim > kMaxDim) throw CapabilityError("ball literal: dimension must be 2 or 3");
    return Domain::ball(Point::zero(dim), values[0]);
  }
  if (kind == "ellipsoid") {
    int n = 0;
    if (values.size() == 3) n = 2;
    if (values.size() == 6) n = 3;
    if (n == 0) throw DomainError("ellipsoid literal needs 3 (N=2) or 6 (N=3) entries");
    if (dim != 0 && dim != n) throw DomainError("ellipsoid literal dimension disagrees with --dim");
    SymMatrix A = SymMatrix::identity(n, 0.0);
    std::size_t k = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        A(i, j) = values[k];
        A(j, i) = values[k];
        ++k;
      }
    }
    return Domain::ellipsoid(A);
  }
  throw DomainError("unknown domain kind '" + std::string(kind) + "'");
}

}  // namespace fraclab
