#pragma once

#include <functional>
#include <optional>
#include <string>

#include "fraclab/geometry.hpp"
#include "fraclab/point.hpp"

namespace fraclab {

/// How a one-sided limit in s was taken, when it matters.
enum class Side { kExact, kFromBelow, kFromAbove };

/// Fractional order s. Operators accept 0 < s <= 1; closed forms accept any s > 0.
class Order {
 public:
  explicit Order(double s, Side side = Side::kExact);
  double value() const { return s_; }
  Side side() const { return side_; }
  bool is_local() const { return s_ == 1.0; }
  /// Throws DomainError unless 0 < s <= 1.
  const Order& require_operator_range() const;
  /// Throws DomainError unless 0 < s < 1.
  const Order& require_open_range() const;

 private:
  double s_;
  Side side_;
};

enum class Smoothness { kSmooth, kC2Interior, kHolder, kLipschitz };
enum class SupportKind { kCompactInDomain, kAllSpace, kExteriorOnly };

/// A function on R^N plus the regularity/support metadata the quadrature needs.
///
/// `support_domain`, when set, is the domain whose boundary is the only place the field
/// may fail to be smooth; rays are split there. For kCompactInDomain the field vanishes
/// outside it, for kExteriorOnly it vanishes inside.
struct ScalarField {
  std::function<double(const Point&)> eval;
  Smoothness smoothness = Smoothness::kSmooth;
  double holder_exponent = 1.0;
  SupportKind support = SupportKind::kAllSpace;
  std::optional<Domain> support_domain;
  /// Optional radial profile r -> value about support_domain's center (fast paths).
  std::function<double(double)> radial_profile;

  double operator()(const Point& x) const { return eval(x); }
  bool is_radial() const { return static_cast<bool>(radial_profile); }
  /// True if x lies where the field may be non-smooth or vanishes identically.
  bool vanishes_at(const Point& x) const;

  static ScalarField constant(double c);
  static ScalarField smooth(std::function<double(const Point&)> f);
};

/// A function on a domain, understood through its trivial extension (zero outside).
struct CompactField {
  std::function<double(const Point&)> f;
  double holder_exponent = 1.0;
  /// Optional radial profile about the domain center.
  std::function<double(double)> radial_profile;

  double operator()(const Point& x) const { return f(x); }
  bool is_radial() const { return static_cast<bool>(radial_profile); }

  /// E_Omega f: value f inside, 0 outside (and on the boundary).
  ScalarField extend(const Domain& domain) const;

  static CompactField constant(double c);
  static CompactField radial(std::function<double(double)> profile, double holder = 1.0);
};

/// Smooth compactly supported bump exp(1 - 1/(1 - |x-c|^2/r^2)) scaled by amplitude.
ScalarField bump(const Point& center, double radius, double amplitude = 1.0);

}  // namespace fraclab
