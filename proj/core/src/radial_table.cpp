#include "fraclab/radial_table.hpp"

#include <algorithm>
#include <cmath>

#include "fraclab/errors.hpp"
#include "fraclab/specfun.hpp"

namespace fraclab {

namespace {

double cheb_node(int j, int n) { return std::cos(specfun::kPi * j / n); }

}  // namespace

RadialTable::RadialTable(const std::function<double(double)>& g, double radius, int levels,
                         int order, bool inner_only)
    : radius_(radius), order_(order), inner_only_(inner_only) {
  if (!(radius > 0.0) || levels < 1 || order < 2) throw DomainError("RadialTable: bad parameters");
  const double r = radius;
  auto fill = [&](double a, double b, auto&& map) {
    Panel p{a, b, std::vector<double>(order + 1)};
    for (int j = 0; j <= order; ++j) {
      const double t = 0.5 * (a + b) + 0.5 * (b - a) * cheb_node(j, order);
      p.values[j] = map(t);
      ++evaluations_;
    }
    return p;
  };
  auto direct = [&](double t) { return g(t); };
  inner_.push_back(fill(0.0, 0.5 * r, direct));
  for (int k = 1; k <= levels; ++k) {
    inner_.push_back(fill(r - r * std::ldexp(1.0, -k), r - r * std::ldexp(1.0, -k - 1), direct));
  }
  if (inner_only) return;
  for (int k = levels; k >= 0; --k) {
    outer_.push_back(fill(r + r * std::ldexp(1.0, -k - 1), r + r * std::ldexp(1.0, -k), direct));
  }
  auto inverted = [&](double v) { return v > 0.0 ? g(2.0 * r / v) : 0.0; };
  const int tail_levels = 24;
  tail_.push_back(fill(0.0, std::ldexp(1.0, -tail_levels), inverted));
  for (int k = tail_levels - 1; k >= 0; --k) {
    tail_.push_back(fill(std::ldexp(1.0, -k - 1), std::ldexp(1.0, -k), inverted));
  }
}

double RadialTable::interpolate(const Panel& p, double t) {
  const int n = static_cast<int>(p.values.size()) - 1;
  const double x = (2.0 * t - p.a - p.b) / (p.b - p.a);
  double num = 0.0;
  double den = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double d = x - cheb_node(j, n);
    if (d == 0.0) return p.values[j];
    double w = (j % 2 == 0) ? 1.0 : -1.0;
    if (j == 0 || j == n) w *= 0.5;
    num += w * p.values[j] / d;
    den += w / d;
  }
  return num / den;
}

const RadialTable::Panel* RadialTable::locate(const std::vector<Panel>& panels, double t) {
  t = std::clamp(t, panels.front().a, panels.back().b);
  auto it = std::upper_bound(panels.begin(), panels.end(), t,
                             [](double v, const Panel& p) { return v < p.b; });
  if (it == panels.end()) --it;
  return &*it;
}

double RadialTable::operator()(double r) const {
  if (r < radius_ || inner_only_) {
    const double t = std::min(r, inner_.back().b);
    return interpolate(*locate(inner_, t), t);
  }
  if (r < 2.0 * radius_) {
    const double t = std::max(r, outer_.front().a);
    return interpolate(*locate(outer_, t), t);
  }
  const double v = 2.0 * radius_ / r;
  return interpolate(*locate(tail_, v), v);
}

}  // namespace fraclab
