#include "fraclab/fields.hpp"

#include <cmath>

namespace fraclab {

Order::Order(double s, Side side) : s_(s), side_(side) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw DomainError("Order: s must be positive and finite, got " + std::to_string(s));
  }
}

const Order& Order::require_operator_range() const {
  if (!(s_ > 0.0 && s_ <= 1.0)) {
    throw DomainError("order must lie in (0,1], got " + std::to_string(s_));
  }
  return *this;
}

const Order& Order::require_open_range() const {
  if (!(s_ > 0.0 && s_ < 1.0)) {
    throw DomainError("order must lie in (0,1), got " + std::to_string(s_));
  }
  return *this;
}

bool ScalarField::vanishes_at(const Point& x) const {
  if (!support_domain) return false;
  if (support == SupportKind::kCompactInDomain) return !support_domain->contains(x);
  if (support == SupportKind::kExteriorOnly) return support_domain->contains(x);
  return false;
}

ScalarField ScalarField::constant(double c) {
  ScalarField s;
  s.eval = [c](const Point&) { return c; };
  return s;
}

ScalarField ScalarField::smooth(std::function<double(const Point&)> f) {
  ScalarField s;
  s.eval = std::move(f);
  return s;
}

ScalarField CompactField::extend(const Domain& domain) const {
  ScalarField s;
  auto fn = f;
  s.eval = [fn, domain](const Point& x) { return domain.contains(x) ? fn(x) : 0.0; };
  s.smoothness = Smoothness::kHolder;
  s.holder_exponent = holder_exponent;
  s.support = SupportKind::kCompactInDomain;
  s.support_domain = domain;
  if (radial_profile && domain.is_ball()) {
    auto prof = radial_profile;
    const double R = domain.radius();
    s.radial_profile = [prof, R](double r) { return r < R ? prof(r) : 0.0; };
  }
  return s;
}

CompactField CompactField::constant(double c) {
  CompactField f;
  f.f = [c](const Point&) { return c; };
  f.radial_profile = [c](double) { return c; };
  return f;
}

CompactField CompactField::radial(std::function<double(double)> profile, double holder) {
  CompactField f;
  auto p = profile;
  f.f = [p](const Point& x) { return p(x.norm()); };
  f.holder_exponent = holder;
  f.radial_profile = std::move(profile);
  return f;
}

ScalarField bump(const Point& center, double radius, double amplitude) {
  ScalarField s;
  s.eval = [center, radius, amplitude](const Point& x) {
    const double q = (x - center).norm2() / (radius * radius);
    if (q >= 1.0) return 0.0;
    return amplitude * std::exp(1.0 - 1.0 / (1.0 - q));
  };
  s.smoothness = Smoothness::kSmooth;
  s.support = SupportKind::kCompactInDomain;
  s.support_domain = Domain::ball(center, radius);
  return s;
}

}  // namespace fraclab
