#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fraclab/point.hpp"

namespace fraclab {

/// Dense symmetric matrix of size dim x dim (dim <= kMaxDim).
struct SymMatrix {
  int dim = 0;
  std::array<std::array<double, kMaxDim>, kMaxDim> a{};

  static SymMatrix identity(int dim, double scale = 1.0);
  static SymMatrix diagonal(std::initializer_list<double> diag);

  double operator()(int i, int j) const { return a[i][j]; }
  double& operator()(int i, int j) { return a[i][j]; }
  Point apply(const Point& x) const;
  double quadratic_form(const Point& x) const { return x.dot(apply(x)); }
  bool is_scalar_multiple_of_identity(double tol = 0.0) const;
};

enum class DomainKind { kBall, kEllipsoid };

struct Measures {
  double volume;
  double diameter;
};

/// Nodes, weights and outward normals realizing surface integrals over the boundary.
struct BoundaryQuadrature {
  std::vector<Point> nodes;
  std::vector<double> weights;
  std::vector<Point> normals;
};

/// An open ball or solid ellipsoid {x : A (x - c) . (x - c) < 1}.
///
/// Every domain is stored through its affine reference map x = c + M y, which sends the
/// unit ball onto the domain (M = A^{-1/2}). Values are immutable.
class Domain {
 public:
  static Domain ball(const Point& center, double radius);
  static Domain unit_ball(int dim) { return ball(Point::zero(dim), 1.0); }
  static Domain ellipsoid(const SymMatrix& A, std::optional<Point> center = std::nullopt);

  DomainKind kind() const { return kind_; }
  int dim() const { return center_.dim(); }
  const Point& center() const { return center_; }
  /// Radius of a ball; throws CapabilityError for ellipsoids.
  double radius() const;
  bool is_ball() const { return kind_ == DomainKind::kBall; }
  bool is_centered_ball() const;
  const SymMatrix& shape_matrix() const { return A_; }

  /// A (x - c) . (x - c); < 1 inside, = 1 on the boundary.
  double level(const Point& x) const;
  bool contains(const Point& x) const { return level(x) < 1.0; }

  /// Signed distance to the boundary: positive inside, zero on it, negative outside.
  double delta(const Point& x) const;

  /// Nearest boundary point.
  Point project_to_boundary(const Point& x) const;

  /// Unit outward normal at a boundary point (or the gradient direction of the level set).
  Point outward_normal(const Point& x) const;

  Measures measures() const;
  double surface_area() const;
  double max_semi_axis() const;
  double min_semi_axis() const;

  Point from_reference(const Point& y) const;
  Point to_reference(const Point& x) const;
  /// Linear part M applied to a vector.
  Point map_vector(const Point& v) const;
  /// det M.
  double jacobian() const { return det_m_; }

  /// Parameter interval {t : x + t w in domain} for unit w, or nullopt if the line misses it.
  std::optional<std::pair<double, double>> line_interval(const Point& x, const Point& w) const;

  /// Distance from an interior point x to the boundary along the unit direction w.
  double ray_exit(const Point& x, const Point& w) const;

  std::string describe() const;

 private:
  Domain() = default;

  DomainKind kind_ = DomainKind::kBall;
  Point center_;
  double radius_ = 0.0;
  SymMatrix A_;
  SymMatrix m_;      // A^{-1/2}
  SymMatrix m_inv_;  // A^{1/2}
  std::array<double, kMaxDim> semi_axes_{};     // descending
  std::array<Point, kMaxDim> principal_axes_{};  // matching semi_axes_
  double det_m_ = 1.0;
};

/// Boundary rule of the given order. N = 2: `order` equispaced angles; N = 3: `order`
/// Gauss-Legendre polar nodes times 2*order azimuthal nodes, mapped with surface Jacobians.
BoundaryQuadrature boundary_quadrature(const Domain& domain, int order);

/// Parses `ball:R` (centered at the origin, dimension `dim`) or
/// `ellipsoid:a11,a12,...` (row-major upper triangle of A).
Domain parse_domain(std::string_view text, int dim);

}  // namespace fraclab
